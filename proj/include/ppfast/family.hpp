#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppfast/plmap.hpp"

namespace ppfast {

struct Generator {
  std::string name;
  PLMap map;
};

// A finite generating set in canonical enumeration: ordered by least
// transition point, generators without transition points last.
class Family {
 public:
  Family() = default;
  // Names must be unique and nonempty.
  explicit Family(std::vector<Generator> gens);
  // Names x0, x1, ... assigned after sorting.
  static Family unnamed(std::vector<PLMap> maps);

  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }

  std::optional<std::size_t> find(std::string_view name) const;
  std::vector<PLMap> maps() const;

 private:
  std::vector<Generator> gens_;
};

// One letter of a word: generator index and exponent sign.
struct Letter {
  std::size_t gen = 0;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);

// Tokens "name" or "name^k", k a nonzero integer, separated by whitespace.
Word parse_word(std::string_view text,
                const std::vector<std::string>& names);
// Runs of equal letters are written as name^k.
std::string format_word(const Word& w, const std::vector<std::string>& names);

std::vector<std::string> names_of(const Family& x);

// The product of the letters, left to right (right action).
PLMap evaluate_word(const Word& w, const Family& x);

}  // namespace ppfast
