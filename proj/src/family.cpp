#include "ppfast/family.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ppfast/error.hpp"

namespace ppfast {

Family::Family(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty() || !seen.insert(g.name).second) {
      throw PreconditionError("generator names must be unique and nonempty: '" +
                              g.name + "'");
    }
  }
  struct Key {
    bool fixed;
    XRational least;
    std::size_t index;
  };
  std::vector<Key> keys;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    auto tp = transition_points(gens_[i].map);
    keys.push_back({tp.empty(), tp.empty() ? XRational() : tp.front(), i});
  }
  std::stable_sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.fixed != b.fixed) {
      return b.fixed;
    }
    return !a.fixed && a.least < b.least;
  });
  std::vector<Generator> sorted;
  sorted.reserve(gens_.size());
  for (const auto& k : keys) {
    sorted.push_back(std::move(gens_[k.index]));
  }
  gens_ = std::move(sorted);
}

Family Family::unnamed(std::vector<PLMap> maps) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    gens.push_back({"tmp" + std::to_string(i), std::move(maps[i])});
  }
  Family f(std::move(gens));
  for (std::size_t i = 0; i < f.gens_.size(); ++i) {
    f.gens_[i].name = "x" + std::to_string(i);
  }
  return f;
}

std::optional<std::size_t> Family::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<PLMap> Family::maps() const {
  std::vector<PLMap> out;
  for (const auto& g : gens_) {
    out.push_back(g.map);
  }
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverted());
  }
  return out;
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  std::istringstream in{std::string(text)};
  std::string tok;
  Word w;
  while (in >> tok) {
    std::string name = tok;
    long k = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        k = std::stol(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != e.size() || k == 0) {
        throw ParseError("bad exponent in token '" + tok + "'");
      }
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw ParseError("unbound generator name '" + name + "'");
    }
    Letter l{static_cast<std::size_t>(it - names.begin()), k < 0};
    for (long i = 0; i < (k < 0 ? -k : k); ++i) {
      w.push_back(l);
    }
  }
  return w;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    long k = static_cast<long>(j - i);
    if (!out.empty()) {
      out += ' ';
    }
    out += names.at(w[i].gen);
    if (w[i].inverse) {
      out += "^-" + std::to_string(k);
    } else if (k != 1) {
      out += "^" + std::to_string(k);
    }
    i = j;
  }
  return out;
}

std::vector<std::string> names_of(const Family& x) {
  std::vector<std::string> out;
  for (const auto& g : x) {
    out.push_back(g.name);
  }
  return out;
}

PLMap evaluate_word(const Word& w, const Family& x) {
  PLMap result;
  for (const auto& l : w) {
    if (l.gen >= x.size()) {
      throw PreconditionError("letter references a missing generator");
    }
    result = compose(result, l.inverse ? invert(x[l.gen].map) : x[l.gen].map);
  }
  return result;
}

}  // namespace ppfast
