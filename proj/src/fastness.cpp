#include "ppfast/fastness.hpp"

#include <algorithm>
#include <map>

#include "ppfast/error.hpp"

namespace ppfast {

namespace {

ProperResult proper_from_endpoints(
    const std::vector<std::vector<Orbital>>& orbs) {
  std::map<XRational, std::size_t> lefts, rights;
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    for (const auto& o : orbs[i]) {
      for (bool left : {true, false}) {
        auto& seen = left ? lefts : rights;
        const XRational& p = left ? o.left : o.right;
        auto [it, fresh] = seen.emplace(p, i);
        if (!fresh && it->second != i) {
          return {false, ProperWitness{p, left, it->second, i}};
        }
      }
    }
  }
  return {};
}

bool bump_less(const Bump& a, const Bump& b) {
  if (a.left() != b.left()) {
    return a.left() < b.left();
  }
  return a.right() < b.right();
}

}  // namespace

ProperResult is_geometrically_proper(const std::vector<PLMap>& x) {
  std::vector<std::vector<Orbital>> orbs;
  for (const auto& f : x) {
    orbs.push_back(orbitals(f));
  }
  return proper_from_endpoints(orbs);
}

ProperResult is_geometrically_proper(const Family& x) {
  return is_geometrically_proper(x.maps());
}

std::vector<UsedBump> used_bumps(const Family& x) {
  std::vector<UsedBump> out;
  for (std::size_t g = 0; g < x.size(); ++g) {
    auto sb = signed_bumps(x[g].map);
    for (std::size_t k = 0; k < sb.size(); ++k) {
      std::string name =
          sb.size() == 1 ? x[g].name : x[g].name + "." + std::to_string(k);
      out.push_back({sb[k].bump, g, sb[k].sign, std::move(name)});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const UsedBump& a, const UsedBump& b) {
                     return bump_less(a.bump, b.bump);
                   });
  return out;
}

BumpFamily::BumpFamily(std::vector<Bump> bumps) : bumps_(std::move(bumps)) {
  std::stable_sort(bumps_.begin(), bumps_.end(), bump_less);
  for (const auto& b : bumps_) {
    tps_.push_back(b.left());
    tps_.push_back(b.right());
  }
  std::sort(tps_.begin(), tps_.end());
  tps_.erase(std::unique(tps_.begin(), tps_.end()), tps_.end());
}

BumpFamily BumpFamily::of(const Family& x) {
  std::vector<Bump> bumps;
  for (auto& u : used_bumps(x)) {
    bumps.push_back(std::move(u.bump));
  }
  return BumpFamily(std::move(bumps));
}

std::vector<Rational> BumpFamily::transition_points_in(
    const Interval& i) const {
  std::vector<Rational> out;
  for (const auto& t : tps_) {
    if (i.contains(t)) {
      out.push_back(t.value());
    }
  }
  return out;
}

bool BumpFamily::proper() const {
  std::vector<std::vector<Orbital>> orbs;
  for (const auto& b : bumps_) {
    orbs.push_back({b.orbital()});
  }
  return proper_from_endpoints(orbs).proper;
}

bool BumpFamily::isolated(std::size_t i) const {
  return transition_points_in(bumps_[i].support()).empty();
}

std::optional<std::size_t> BumpFamily::successor(std::size_t i) const {
  auto inside = transition_points_in(bumps_[i].support());
  if (inside.empty()) {
    return std::nullopt;
  }
  XRational p(inside.back());
  for (std::size_t j = 0; j < bumps_.size(); ++j) {
    if (bumps_[j].left() == p && bumps_[j].right() > bumps_[i].right()) {
      return j;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> BumpFamily::predecessor(std::size_t i) const {
  auto inside = transition_points_in(bumps_[i].support());
  if (inside.empty()) {
    return std::nullopt;
  }
  XRational q(inside.front());
  for (std::size_t j = 0; j < bumps_.size(); ++j) {
    if (bumps_[j].right() == q && bumps_[j].left() < bumps_[i].left()) {
      return j;
    }
  }
  return std::nullopt;
}

BumpFamily BumpFamily::powered(long k) const {
  std::vector<Bump> out;
  for (const auto& b : bumps_) {
    out.emplace_back(power(b.map(), k));
  }
  return BumpFamily(std::move(out));
}

namespace {

Chain make_chain(const BumpFamily& a, std::vector<std::size_t> members) {
  Interval span = Interval::open(a[members.front()].left(),
                                 a[members.back()].right());
  auto inside = a.transition_points_in(span);
  Chain c;
  c.members = std::move(members);
  if (!inside.empty()) {
    c.c_min = inside.front();
    c.c_max = inside.back();
  }
  return c;
}

}  // namespace

bool is_stretched_chain(const BumpFamily& a,
                        const std::vector<std::size_t>& members) {
  if (members.empty()) {
    return false;
  }
  for (auto m : members) {
    if (m >= a.size() || a.isolated(m)) {
      return false;
    }
  }
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    const Bump& b = a[members[i]];
    const Bump& c = a[members[i + 1]];
    if (!(b.left() < c.left() && c.left() < b.right() &&
          b.right() < c.right())) {
      return false;
    }
    if (!a.transition_points_in(Interval::open(c.left(), b.right())).empty()) {
      return false;
    }
  }
  return true;
}

ChainPartition maximal_chains(const BumpFamily& a) {
  if (!a.proper()) {
    throw PreconditionError("maximal_chains needs a geometrically proper family");
  }
  ChainPartition out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.isolated(i)) {
      out.isolated.push_back(i);
      continue;
    }
    if (a.predecessor(i)) {
      continue;
    }
    std::vector<std::size_t> members{i};
    while (auto next = a.successor(members.back())) {
      members.push_back(*next);
    }
    out.chains.push_back(make_chain(a, std::move(members)));
  }
  return out;
}

ChainReport evaluate_chain(const BumpFamily& a,
                           const std::vector<std::size_t>& members) {
  if (!is_stretched_chain(a, members)) {
    throw PreconditionError("not a stretched transition chain");
  }
  ChainReport r;
  r.chain = make_chain(a, members);
  XRational t = r.chain.c_min;
  for (auto m : members) {
    t = a[m].map()(t);
  }
  r.image = t;
  r.satisfied = r.chain.c_max <= t;
  return r;
}

namespace {

FastnessReport chain_test(const BumpFamily& a, FastnessReport r) {
  auto part = maximal_chains(a);
  r.isolated = part.isolated;
  r.fast = true;
  for (const auto& c : part.chains) {
    r.chains.push_back(evaluate_chain(a, c.members));
    r.fast = r.fast && r.chains.back().satisfied;
  }
  return r;
}

}  // namespace

FastnessReport is_geometrically_fast(const BumpFamily& a) {
  FastnessReport r;
  std::vector<std::vector<Orbital>> orbs;
  for (const auto& b : a) {
    orbs.push_back({b.orbital()});
  }
  r.proper = proper_from_endpoints(orbs);
  if (!r.proper.proper) {
    return r;
  }
  return chain_test(a, std::move(r));
}

FastnessReport is_geometrically_fast(const Family& x) {
  FastnessReport r;
  r.proper = is_geometrically_proper(x);
  if (!r.proper.proper) {
    return r;
  }
  return chain_test(BumpFamily::of(x), std::move(r));
}

Feet feet_of(const BumpFamily& a, const std::vector<Rational>& markers) {
  Feet f;
  for (std::size_t i = 0; i < a.size(); ++i) {
    f.src.push_back(Interval::open(a[i].left(), markers[i]));
    f.dest.push_back(
        Interval::closed_open(a[i].map()(markers[i]), a[i].right()));
  }
  return f;
}

CanonicalMarking canonical_marking(const BumpFamily& a) {
  if (!a.proper()) {
    throw PreconditionError("canonical_marking needs a proper family");
  }
  CanonicalMarking m;
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto inside = a.transition_points_in(a[k].support());
    if (inside.empty()) {
      if (!a[k].left().is_finite() || !a[k].right().is_finite()) {
        throw PreconditionError(
            "isolated bump with an unbounded orbital has no midpoint marker");
      }
      m.anchors.push_back(midpoint(a[k].left().value(), a[k].right().value()));
      m.markers.push_back(m.anchors.back());
      continue;
    }
    m.anchors.push_back(inside.front());
    std::optional<std::size_t> prev;
    for (std::size_t j = 0; j < k; ++j) {
      if (a[j].right() == XRational(inside.front())) {
        prev = j;
      }
    }
    m.markers.push_back(prev ? a[*prev].map()(m.markers[*prev])
                             : inside.front());
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    bool init = true;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j].map()(m.markers[j]) == m.markers[k]) {
        init = false;
      }
    }
    m.initial.push_back(init);
  }
  m.feet = feet_of(a, m.markers);
  return m;
}

bool feet_disjoint(const Feet& feet) {
  std::vector<const Interval*> all;
  for (const auto& i : feet.src) {
    all.push_back(&i);
  }
  for (const auto& i : feet.dest) {
    all.push_back(&i);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i]->intersects(*all[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ppfast
