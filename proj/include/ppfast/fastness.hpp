#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ppfast/family.hpp"
#include "ppfast/interval.hpp"
#include "ppfast/plmap.hpp"

namespace ppfast {

// A point that is a left (or right) transition point of two generators.
struct ProperWitness {
  XRational point;
  bool left = true;
  std::size_t first = 0;
  std::size_t second = 0;
};

struct ProperResult {
  bool proper = true;
  std::optional<ProperWitness> witness;
};

ProperResult is_geometrically_proper(const std::vector<PLMap>& x);
ProperResult is_geometrically_proper(const Family& x);

// A bump used by a generator: bump b of g with g = b or g = b^-1 there.
struct UsedBump {
  Bump bump;
  std::size_t generator = 0;
  Sign sign = Sign::positive;
  std::string name;
};

// The bumps of x ordered by left transition point (ties by right).
// A generator with one bump lends it its own name; otherwise name.k.
std::vector<UsedBump> used_bumps(const Family& x);

class BumpFamily {
 public:
  BumpFamily() = default;
  // Sorted by left endpoint, ties by right endpoint (stable otherwise).
  explicit BumpFamily(std::vector<Bump> bumps);
  static BumpFamily of(const Family& x);

  std::size_t size() const { return bumps_.size(); }
  const Bump& operator[](std::size_t i) const { return bumps_[i]; }
  auto begin() const { return bumps_.begin(); }
  auto end() const { return bumps_.end(); }

  // All orbital endpoints, sorted, without repetition.
  const std::vector<XRational>& transition_points() const { return tps_; }
  // Finite transition points strictly inside i, increasing.
  std::vector<Rational> transition_points_in(const Interval& i) const;

  bool proper() const;
  bool isolated(std::size_t i) const;
  std::optional<std::size_t> successor(std::size_t i) const;
  std::optional<std::size_t> predecessor(std::size_t i) const;

  BumpFamily powered(long k) const;

 private:
  std::vector<Bump> bumps_;
  std::vector<XRational> tps_;
};

struct Chain {
  std::vector<std::size_t> members;
  XRational c_min;
  XRational c_max;
};

struct ChainPartition {
  std::vector<Chain> chains;
  std::vector<std::size_t> isolated;
};

bool is_stretched_chain(const BumpFamily& a,
                        const std::vector<std::size_t>& members);

// Throws PreconditionError on non-proper input.
ChainPartition maximal_chains(const BumpFamily& a);

struct ChainReport {
  Chain chain;
  XRational image;  // c_min pushed through the chain in order
  bool satisfied = false;
};

// Evaluates c_max <= c_min * prod(C) for any stretched chain.
ChainReport evaluate_chain(const BumpFamily& a,
                           const std::vector<std::size_t>& members);

struct FastnessReport {
  ProperResult proper;
  std::vector<ChainReport> chains;
  std::vector<std::size_t> isolated;
  bool fast = false;
};

FastnessReport is_geometrically_fast(const BumpFamily& a);
// Properness is checked on the generators, the chain test on their bumps.
FastnessReport is_geometrically_fast(const Family& x);

struct Feet {
  std::vector<Interval> src;
  std::vector<Interval> dest;
};

struct CanonicalMarking {
  std::vector<Rational> markers;
  // s_k: least transition point in the support, or the midpoint.
  std::vector<Rational> anchors;
  // No marker t_j with t_j * a_j equal to this one.
  std::vector<bool> initial;
  Feet feet;
};

Feet feet_of(const BumpFamily& a, const std::vector<Rational>& markers);
CanonicalMarking canonical_marking(const BumpFamily& a);
bool feet_disjoint(const Feet& feet);

}  // namespace ppfast
