#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ppfast/abstract.hpp"
#include "ppfast/diagram.hpp"
#include "ppfast/symbolic.hpp"

namespace support {

using namespace ppfast;
using Rng = std::mt19937_64;

// PPFAST_SEED overrides the default; the seed is echoed once per binary.
std::uint64_t seed();
Rng rng(std::uint64_t salt = 0);

Rational grid(long k, long den = 64);
long uniform(Rng& r, long lo, long hi);

// Random increasing breakpoints on a grid with random affine tails.
PLMap random_plmap(Rng& r, int max_points = 4);

// 1 to max_bumps bumps on the 1/64 grid of [0, 1] with distinct left and
// distinct right ends, one interior breakpoint pushed at least a quarter
// of the width to the right.
std::vector<Bump> random_proper_bumps(Rng& r, int max_bumps = 4);

// Diagram with up to max_edges edges, random directions and labels drawn
// from a pool; isolated edges only when allowed.
DynamicalDiagram random_diagram(Rng& r, int max_edges, bool allow_isolated,
                                bool distinct_labels = false);

Word random_word(Rng& r, std::size_t gens, std::size_t max_len);

// Value of f at t read straight off the breakpoints and tails.
Rational naive_eval(const PLMap& f, const Rational& t);

// The local reduction procedure in its literal form: rescan from the
// start and remove the first offending pair.
LocalWord naive_local_reduce(const FastSystem& sys, const LocalWord& lw);

// Lambda membership from interval containments: each symbol b after a
// predecessor with destination D needs D inside supt(b) minus src(b).
bool lambda_by_intervals(const FastSystem& sys, const LocalWord& lw);

// Enumerates every valid string of length <= depth that is realizable as a
// suffix and checks whether some finite history contains it.
bool brute_force_faithful(const Blueprint& b, std::size_t depth);

// Evaluate a word as a product of bump maps.
Rational act(const FastSystem& sys, Rational t,
             const std::vector<BumpSymbol>& w);

// Diagram isomorphism recomputed from scratch: identity on vertices, labels
// matched by first appearance.
std::optional<std::map<std::string, std::string>> naive_label_map(
    const DynamicalDiagram& a, const DynamicalDiagram& b);

}  // namespace support
