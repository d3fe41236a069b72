#include "ppfast/abstract.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ppfast/symbolic.hpp"

namespace ppfast {

Blueprint::Blueprint(
    std::vector<std::string> symbols,
    const std::vector<std::pair<std::string, std::string>>& supt,
    const std::map<std::string, std::string>& inverse,
    const std::vector<std::string>& markers)
    : names_(std::move(symbols)) {
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) {
    throw PreconditionError("blueprint symbols must be distinct");
  }
  auto idx = [&](const std::string& s) {
    auto i = index(s);
    if (!i) {
      throw PreconditionError("unknown blueprint symbol '" + s + "'");
    }
    return *i;
  };
  std::size_t n = names_.size();
  rel_.assign(n, std::vector<bool>(n, false));
  inv_.assign(n, std::nullopt);
  for (const auto& [a, b] : supt) {
    rel_[idx(a)][idx(b)] = true;
  }
  for (const auto& [a, b] : inverse) {
    inv_[idx(a)] = idx(b);
  }
  for (const auto& m : markers) {
    markers_.push_back(idx(m));
  }
  std::sort(markers_.begin(), markers_.end());
  markers_.erase(std::unique(markers_.begin(), markers_.end()),
                 markers_.end());
}

std::optional<std::size_t> Blueprint::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - names_.begin());
}

bool Blueprint::active(std::size_t a) const {
  return std::find(rel_[a].begin(), rel_[a].end(), true) != rel_[a].end();
}

bool Blueprint::is_marker(std::size_t i) const {
  return std::binary_search(markers_.begin(), markers_.end(), i);
}

std::vector<std::size_t> Blueprint::generators() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (active(a)) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<std::size_t> Blueprint::marker_class(std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (rel_[a][b]) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> Blueprint::relation() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (rel_[a][b]) {
        out.emplace_back(names_[a], names_[b]);
      }
    }
  }
  return out;
}

std::map<std::string, std::string> Blueprint::inverse_map() const {
  std::map<std::string, std::string> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (inv_[a]) {
      out[names_[a]] = names_[*inv_[a]];
    }
  }
  return out;
}

BlueprintReport validate_blueprint(const Blueprint& b) {
  BlueprintReport r;
  auto fail = [&](std::string s) {
    r.valid = false;
    r.violations.push_back(std::move(s));
  };
  std::size_t n = b.size();
  for (std::size_t a = 0; a < n; ++a) {
    const std::string& na = b.name(a);
    if (!b.active(a)) {
      if (b.inverse(a)) {
        fail("inverse defined on '" + na + "' whose support is empty");
      }
      if (!b.is_marker(a)) {
        fail("'" + na + "' has empty support but is not listed as a marker");
      }
      continue;
    }
    if (b.is_marker(a)) {
      fail("marker '" + na + "' has nonempty support");
    }
    if (!b.in_supt(a, a)) {
      fail("'" + na + "' is not in its own support");
    }
    auto inv = b.inverse(a);
    if (!inv) {
      fail("'" + na + "' has no inverse");
      continue;
    }
    if (*inv == a) {
      fail("'" + na + "' is its own inverse");
      continue;
    }
    if (b.inverse(*inv) != a) {
      fail("inverse is not an involution at '" + na + "'");
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (b.in_supt(a, x) != b.in_supt(*inv, x)) {
        fail("supt('" + na + "') differs from the support of its inverse");
        break;
      }
    }
  }
  const auto& ms = b.markers();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (b.marker_class(ms[i]) == b.marker_class(ms[j])) {
        fail("markers '" + b.name(ms[i]) + "' and '" + b.name(ms[j]) +
             "' have equal classes");
      }
    }
  }
  return r;
}

Blueprint blueprint_of(const FastSystem& sys) {
  std::vector<std::string> names;
  std::vector<BumpSymbol> syms;
  for (std::size_t i = 0; i < sys.bumps().size(); ++i) {
    names.push_back(sys.bumps()[i].name);
    syms.push_back({i, false});
    names.push_back(sys.bumps()[i].name + "^-1");
    syms.push_back({i, true});
  }
  std::map<std::string, std::string> inverse;
  std::vector<std::pair<std::string, std::string>> supt;
  for (std::size_t a = 0; a < syms.size(); ++a) {
    inverse[names[a]] = names[a ^ 1U];
    Interval s = sys.bump_family()[syms[a].bump].support();
    for (std::size_t c = 0; c < syms.size(); ++c) {
      if (dest_interval(sys, syms[c]).subset_of(s)) {
        supt.emplace_back(names[a], names[c]);
      }
    }
  }
  std::vector<std::string> markers;
  for (auto m : sys.initial_bumps()) {
    std::string mn = "~" + sys.bumps()[m].name;
    names.push_back(mn);
    markers.push_back(mn);
    const Rational& t = sys.marking().markers[m];
    for (std::size_t a = 0; a < syms.size(); ++a) {
      if (sys.bump_family()[syms[a].bump].support().contains(t)) {
        supt.emplace_back(names[a], mn);
      }
    }
  }
  return Blueprint(std::move(names), supt, inverse, markers);
}

bool valid_history(const Blueprint& b, const History& eta) {
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (eta[i] >= b.size()) {
      return false;
    }
    if (i > 0 && (b.is_marker(eta[i]) || !b.active(eta[i]))) {
      return false;
    }
    if (i > 0) {
      std::size_t prev = eta[i - 1];
      if (!b.in_supt(eta[i], prev) || b.inverse(eta[i]) == prev) {
        return false;
      }
    }
  }
  return true;
}

History hat_apply(const Blueprint& b, History eta, std::size_t a) {
  if (eta.empty()) {
    return eta;
  }
  std::size_t c = eta.back();
  if (b.inverse(a) == c) {
    eta.pop_back();
  } else if (b.in_supt(a, c)) {
    eta.push_back(a);
  }
  return eta;
}

History hat_apply_word(const Blueprint& b, History eta,
                       const std::vector<std::size_t>& word) {
  for (auto a : word) {
    eta = hat_apply(b, std::move(eta), a);
  }
  return eta;
}

std::vector<History> finite_histories(const Blueprint& b, std::size_t depth) {
  std::vector<History> out, level;
  for (auto m : b.markers()) {
    level.push_back({m});
  }
  auto gens = b.generators();
  for (std::size_t d = 0;; ++d) {
    out.insert(out.end(), level.begin(), level.end());
    if (d == depth) {
      break;
    }
    std::vector<History> next;
    for (const auto& h : level) {
      for (auto a : gens) {
        if (b.in_supt(a, h.back()) && b.inverse(a) != h.back()) {
          History g = h;
          g.push_back(a);
          next.push_back(std::move(g));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

FaithfulnessVerdict is_faithful(const Blueprint& b, std::size_t depth) {
  FaithfulnessVerdict v;
  v.depth = depth;
  std::size_t n = b.size();
  auto follows = [&](std::size_t x, std::size_t s) {  // may s follow x?
    return b.active(s) && b.in_supt(s, x) && b.inverse(s) != x;
  };
  // Forward closure of the markers: symbols occurring in finite histories.
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> stack(b.markers().begin(), b.markers().end());
  for (auto m : stack) {
    reached[m] = true;
  }
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t s = 0; s < n; ++s) {
      if (!reached[s] && follows(x, s)) {
        reached[s] = true;
        stack.push_back(s);
      }
    }
  }
  // A symbol starts a suffix of some point of K when it can be preceded
  // forever or traced back to a marker. Every active a follows itself.
  for (std::size_t s = 0; s < n; ++s) {
    bool realizable = reached[s] || (b.active(s) && follows(s, s));
    if (realizable && !reached[s] && depth > 0) {
      v.faithful = false;
      v.witness = std::vector<std::size_t>{s};
      return v;
    }
  }
  return v;
}

std::string embeds_into(Orderability o) {
  switch (o) {
    case Orderability::orderable:
      return "F";
    case Orderability::cyclically_orderable:
      return "T";
    default:
      return "V";
  }
}

namespace {

struct Constraint {
  std::vector<bool> member;
  std::size_t size = 0;
  std::size_t a = 0;
  std::size_t a_inv = 0;
};

std::vector<Constraint> constraints_of(const Blueprint& b) {
  std::vector<Constraint> out;
  for (auto a : b.generators()) {
    auto inv = b.inverse(a);
    if (!inv || *inv < a) {
      continue;
    }
    Constraint c;
    c.member.assign(b.size(), false);
    for (std::size_t x = 0; x < b.size(); ++x) {
      if (b.in_supt(a, x)) {
        c.member[x] = true;
        ++c.size;
      }
    }
    c.a = a;
    c.a_inv = *inv;
    out.push_back(std::move(c));
  }
  return out;
}

bool is_end(const Constraint& c, std::size_t x) {
  return x == c.a || x == c.a_inv;
}

bool linear_ok(const Constraint& c, const std::vector<std::size_t>& order) {
  std::size_t first = order.size(), last = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (c.member[order[i]]) {
      first = std::min(first, i);
      last = i;
    }
  }
  if (first == order.size() || last - first + 1 != c.size) {
    return false;
  }
  return is_end(c, order[first]) && is_end(c, order[last]) &&
         order[first] != order[last];
}

bool cyclic_ok(const Constraint& c, const std::vector<std::size_t>& order) {
  std::size_t n = order.size();
  if (c.size == n) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t x = order[i], y = order[(i + 1) % n];
      if (is_end(c, x) && is_end(c, y) && x != y) {
        return true;
      }
    }
    return false;
  }
  // Rotate so that a non-member comes first; then the block is linear.
  std::size_t start = 0;
  while (c.member[order[start]]) {
    ++start;
  }
  std::vector<std::size_t> rot;
  for (std::size_t i = 0; i < n; ++i) {
    rot.push_back(order[(start + i) % n]);
  }
  return linear_ok(c, rot);
}

}  // namespace

bool order_witnesses(const Blueprint& b, const std::vector<std::size_t>& order,
                     bool cyclic) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) {
      return false;
    }
  }
  if (sorted.size() != b.size()) {
    return false;
  }
  for (const auto& c : constraints_of(b)) {
    if (!(cyclic ? cyclic_ok(c, order) : linear_ok(c, order))) {
      return false;
    }
  }
  return true;
}

namespace {

// Backtracking over arrangements. For linear orders each support block
// must open at an endpoint, stay contiguous, and close at the other end.
// For cyclic orders (first symbol fixed) membership may change at most
// twice along the sequence.
class OrderSearch {
 public:
  OrderSearch(const Blueprint& b, bool cyclic)
      : b_(b), cyclic_(cyclic), cs_(constraints_of(b)) {}

  std::optional<std::vector<std::size_t>> run() {
    std::size_t n = b_.size();
    used_.assign(n, false);
    placed_.assign(cs_.size(), 0);
    changes_.assign(cs_.size(), 0);
    if (n == 0) {
      return std::vector<std::size_t>{};
    }
    if (cyclic_) {
      if (!place(0)) {
        return std::nullopt;
      }
      if (extend()) {
        return order_;
      }
      return std::nullopt;
    }
    if (extend()) {
      return order_;
    }
    return std::nullopt;
  }

 private:
  bool admissible(std::size_t x) const {
    for (std::size_t k = 0; k < cs_.size(); ++k) {
      const Constraint& c = cs_[k];
      bool in = c.member[x];
      if (cyclic_) {
        if (!order_.empty() && c.member[order_.back()] != in &&
            changes_[k] >= 2) {
          return false;
        }
        continue;
      }
      bool open = placed_[k] > 0 && placed_[k] < c.size;
      if (in) {
        if (placed_[k] == c.size) {
          return false;
        }
        if (placed_[k] == 0 && !is_end(c, x)) {
          return false;
        }
        if (placed_[k] + 1 == c.size &&
            (!is_end(c, x) || (c.size > 1 && x == first_[k]))) {
          return false;
        }
      } else if (open) {
        return false;
      }
    }
    return true;
  }

  bool place(std::size_t x) {
    if (!admissible(x)) {
      return false;
    }
    first_.resize(cs_.size(), 0);
    for (std::size_t k = 0; k < cs_.size(); ++k) {
      const Constraint& c = cs_[k];
      if (!order_.empty() && c.member[order_.back()] != c.member[x]) {
        ++changes_[k];
      }
      if (c.member[x]) {
        if (placed_[k] == 0) {
          first_[k] = x;
        }
        ++placed_[k];
      }
    }
    used_[x] = true;
    order_.push_back(x);
    return true;
  }

  void unplace() {
    std::size_t x = order_.back();
    order_.pop_back();
    used_[x] = false;
    for (std::size_t k = 0; k < cs_.size(); ++k) {
      const Constraint& c = cs_[k];
      if (c.member[x]) {
        --placed_[k];
      }
      if (!order_.empty() && c.member[order_.back()] != c.member[x]) {
        --changes_[k];
      }
    }
  }

  bool extend() {
    if (order_.size() == b_.size()) {
      return order_witnesses(b_, order_, cyclic_);
    }
    for (std::size_t x = 0; x < b_.size(); ++x) {
      if (used_[x] || !place(x)) {
        continue;
      }
      if (extend()) {
        return true;
      }
      unplace();
    }
    return false;
  }

  const Blueprint& b_;
  bool cyclic_;
  std::vector<Constraint> cs_;
  std::vector<bool> used_;
  std::vector<std::size_t> placed_;
  std::vector<std::size_t> changes_;
  std::vector<std::size_t> first_;
  std::vector<std::size_t> order_;
};

}  // namespace

OrderabilityResult classify_orderability(const Blueprint& b,
                                         std::size_t max_symbols) {
  if (b.size() > max_symbols) {
    throw PreconditionError("orderability search refused: " +
                            std::to_string(b.size()) + " symbols exceed " +
                            std::to_string(max_symbols));
  }
  if (!validate_blueprint(b).valid) {
    throw PreconditionError("orderability needs a valid blueprint");
  }
  OrderabilityResult r;
  if (auto o = OrderSearch(b, false).run()) {
    r.kind = Orderability::orderable;
    r.order = *o;
  } else if (auto c = OrderSearch(b, true).run()) {
    r.kind = Orderability::cyclically_orderable;
    r.order = *c;
  }
  return r;
}

FreenessVerdict freeness_probe(const Blueprint& b, std::size_t maxlen,
                               std::optional<std::size_t> history_depth) {
  FreenessVerdict v;
  if (maxlen == 0) {
    return v;
  }
  auto all = finite_histories(b, history_depth.value_or(maxlen + 1));
  v.histories_checked = all.size();
  std::vector<History> probes;
  for (const auto& h : all) {
    if (h.size() <= 3) {
      probes.push_back(h);
    }
  }
  auto gens = b.generators();
  std::vector<History> images = probes;
  std::vector<std::size_t> word;

  auto fixes_all = [&]() {
    for (std::size_t i = 0; i < probes.size(); ++i) {
      if (images[i] != probes[i]) {
        return false;
      }
    }
    for (const auto& h : all) {
      if (hat_apply_word(b, h, word) != h) {
        return false;
      }
    }
    return true;
  };

  std::function<bool()> dfs = [&]() -> bool {
    if (!word.empty()) {
      ++v.words_checked;
      if (fixes_all()) {
        return true;
      }
    }
    if (word.size() == maxlen) {
      return false;
    }
    for (auto a : gens) {
      if (!word.empty() && b.inverse(word.back()) == a) {
        continue;
      }
      std::vector<History> saved = images;
      for (auto& h : images) {
        h = hat_apply(b, std::move(h), a);
      }
      word.push_back(a);
      if (dfs()) {
        return true;
      }
      word.pop_back();
      images = std::move(saved);
    }
    return false;
  };
  if (dfs()) {
    v.free = false;
    v.relator = word;
  }
  return v;
}

std::optional<std::vector<std::size_t>> blueprints_isomorphic(
    const Blueprint& b1, const Blueprint& b2, std::size_t max_symbols) {
  std::size_t n = b1.size();
  if (n > max_symbols || b2.size() > max_symbols) {
    throw PreconditionError("blueprint isomorphism search refused: size bound");
  }
  if (n != b2.size()) {
    return std::nullopt;
  }
  auto signature = [](const Blueprint& b, std::size_t x) {
    std::size_t out_deg = 0, in_deg = 0;
    for (std::size_t y = 0; y < b.size(); ++y) {
      out_deg += b.in_supt(x, y) ? 1 : 0;
      in_deg += b.in_supt(y, x) ? 1 : 0;
    }
    return std::tuple(b.is_marker(x), out_deg, in_deg);
  };
  std::vector<std::size_t> phi(n, n);
  std::vector<bool> taken(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t x) -> bool {
    if (x == n) {
      return true;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (taken[y] || signature(b1, x) != signature(b2, y)) {
        continue;
      }
      bool ok = b1.in_supt(x, x) == b2.in_supt(y, y);
      for (std::size_t z = 0; z < x && ok; ++z) {
        ok = b1.in_supt(x, z) == b2.in_supt(y, phi[z]) &&
             b1.in_supt(z, x) == b2.in_supt(phi[z], y);
        if (ok && b1.inverse(x) == z) {
          ok = b2.inverse(y) == phi[z];
        }
        if (ok && b1.inverse(z) == x) {
          ok = b2.inverse(phi[z]) == y;
        }
      }
      if (ok && b1.inverse(x).has_value() != b2.inverse(y).has_value()) {
        ok = false;
      }
      if (!ok) {
        continue;
      }
      phi[x] = y;
      taken[y] = true;
      if (go(x + 1)) {
        return true;
      }
      taken[y] = false;
    }
    return false;
  };
  if (go(0)) {
    return phi;
  }
  return std::nullopt;
}

}  // namespace ppfast
