#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppfast/diagram.hpp"
#include "ppfast/family.hpp"

namespace ppfast {

// An element of A+-: a used bump or its inverse.
struct BumpSymbol {
  std::size_t bump = 0;
  bool inverse = false;

  BumpSymbol inverted() const { return {bump, !inverse}; }
  friend bool operator==(const BumpSymbol&, const BumpSymbol&) = default;
};

// marker: index of a bump whose canonical marker is initial.
struct LocalWord {
  std::size_t marker = 0;
  std::vector<BumpSymbol> word;
  friend bool operator==(const LocalWord&, const LocalWord&) = default;
};

struct MarkerOrbitPoint {
  LocalWord word;
  Rational value;
};

// Positions in the doubled foot order: foot v sits at 2v, the marker of
// bump i just right of its source at 2 src(i) + 1.
long dest_position(const FastSystem& sys, BumpSymbol s);
long marker_position(const FastSystem& sys, std::size_t marker);
// May b follow a symbol whose destination sits at prev?
bool allowed_after(const FastSystem& sys, long prev, BumpSymbol b);

PLMap symbol_map(const FastSystem& sys, BumpSymbol s);
Interval dest_interval(const FastSystem& sys, BumpSymbol s);
Interval src_interval(const FastSystem& sys, BumpSymbol s);

bool in_lambda(const FastSystem& sys, const LocalWord& lw);
LocalWord local_reduce(const FastSystem& sys, const LocalWord& lw);
Rational evaluate_local(const FastSystem& sys, const LocalWord& lw);
// Throws PreconditionError if either word is outside Lambda.
std::strong_ordering revlex_compare(const FastSystem& sys, const LocalWord& u,
                                    const LocalWord& v);

MarkerOrbitPoint orbit_point(const FastSystem& sys, const LocalWord& lw);

// Letters of x expanded into the signed bumps of their generators.
std::vector<BumpSymbol> expand_word(const FastSystem& sys, const Word& w);

// "~m s1 s2^k ...": ~m names a bump with initial marker, other tokens
// name bumps or (expanded) generators.
LocalWord parse_local_word(const FastSystem& sys, std::string_view text);
std::string format_local_word(const FastSystem& sys, const LocalWord& lw);

MarkerOrbitPoint transport(const FastSystem& x, const FastSystem& y,
                           const DiagramIso& iso, const MarkerOrbitPoint& p);
Word translate_word(const DiagramIso& iso, const Word& w, const Family& x,
                    const Family& y);

// All Lambda strings with at most max_len symbols after the marker, sorted
// by value.
std::vector<MarkerOrbitPoint> enumerate_orbit(const FastSystem& sys,
                                              std::size_t max_len);

// A shortest marker orbit point inside target, searched breadth first over
// suffixes with interval pruning.
std::optional<MarkerOrbitPoint> find_orbit_point_in(
    const FastSystem& sys, const Interval& target, std::size_t max_len,
    std::size_t max_nodes = 200000);

enum class CrossCheck { not_fast, agrees, inconclusive };

struct IdentityVerdict {
  bool identity = true;
  CrossCheck cross_check = CrossCheck::not_fast;
  std::optional<MarkerOrbitPoint> witness;
};

// depth defaults to 2 |w| + 8.
IdentityVerdict word_is_identity(const Word& w, const FastSystem& sys,
                                 std::optional<std::size_t> depth = {});
IdentityVerdict word_is_identity(const Word& w, const Family& x,
                                 std::optional<std::size_t> depth = {});

}  // namespace ppfast
