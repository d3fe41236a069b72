#include "ppfast/excision.hpp"

#include <algorithm>

namespace ppfast {

PLMap quotient_by_bumps(const PLMap& f, const std::vector<Bump>& e) {
  auto sb = signed_bumps(f);
  for (const auto& b : e) {
    bool used = std::any_of(sb.begin(), sb.end(),
                            [&](const SignedBump& s) { return s.bump == b; });
    if (!used) {
      throw PreconditionError("bump is not used in the generator");
    }
  }
  PLMap out;
  for (const auto& s : sb) {
    if (std::find(e.begin(), e.end(), s.bump) == e.end()) {
      out = compose(out, s.as_map());
    }
  }
  return out;
}

namespace {

bool other_feet_avoid(const FastSystem& sys, std::size_t f, const Interval& j) {
  for (std::size_t i = 0; i < sys.bumps().size(); ++i) {
    if (sys.bumps()[i].generator == f) {
      continue;
    }
    if (sys.marking().feet.src[i].intersects(j) ||
        sys.marking().feet.dest[i].intersects(j)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string check_certificate(const FastSystem& sys,
                              const ExtraneousCertificate& c) {
  const auto& bumps = sys.bumps();
  if (c.f >= sys.family().size()) {
    return "generator index out of range";
  }
  for (auto i : c.e) {
    if (i >= bumps.size() || bumps[i].generator != c.f) {
      return "E contains a bump not used in f";
    }
    if (!sys.bump_family().isolated(i)) {
      return "E contains a bump that is not isolated";
    }
    if (!bumps[i].bump.support().subset_of(c.j)) {
      return "E contains a bump whose support is not inside J";
    }
  }
  bool foot = false;
  for (std::size_t i = 0; i < bumps.size(); ++i) {
    if (bumps[i].generator != c.f ||
        std::find(c.e.begin(), c.e.end(), i) != c.e.end()) {
      continue;
    }
    if (sys.marking().feet.src[i].subset_of(c.j) ||
        sys.marking().feet.dest[i].subset_of(c.j)) {
      foot = true;
    }
  }
  if (!foot) {
    return "no bump of f outside E has a foot in J";
  }
  if (!other_feet_avoid(sys, c.f, c.j)) {
    return "J meets a foot of another generator";
  }
  return "";
}

std::vector<ExtraneousCertificate> find_extraneous(const Family& x) {
  FastSystem sys(x);
  const auto& verts = sys.vertex_intervals();
  std::vector<ExtraneousCertificate> out;
  for (std::size_t f = 0; f < x.size(); ++f) {
    // Maximal open intervals avoiding the feet of the other generators.
    std::vector<const Interval*> blocks;
    for (std::size_t v = 0; v < verts.size(); ++v) {
      const Edge& e = sys.diagram().edge_at(v);
      if (e.label != x[f].name) {
        blocks.push_back(&verts[v]);
      }
    }
    std::vector<Interval> gaps;
    XRational lo = XRational::neg_inf();
    for (const auto* b : blocks) {
      gaps.push_back(Interval::open(lo, b->lo));
      lo = b->hi;
    }
    gaps.push_back(Interval::open(lo, XRational::pos_inf()));
    for (const auto& j : gaps) {
      if (j.empty()) {
        continue;
      }
      ExtraneousCertificate c{{}, j, f};
      for (std::size_t i = 0; i < sys.bumps().size(); ++i) {
        if (sys.bumps()[i].generator == f && sys.bump_family().isolated(i) &&
            sys.bumps()[i].bump.support().subset_of(j)) {
          c.e.push_back(i);
        }
      }
      if (!c.e.empty() && check_certificate(sys, c).empty()) {
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

Family excise(const Family& x, const ExtraneousCertificate& cert) {
  if (cert.e.empty()) {
    return x;
  }
  FastSystem sys(x);
  std::string why = check_certificate(sys, cert);
  if (!why.empty()) {
    throw PreconditionError("invalid certificate: " + why);
  }
  std::vector<Bump> e;
  for (auto i : cert.e) {
    e.push_back(sys.bumps()[i].bump);
  }
  std::vector<Generator> gens(x.begin(), x.end());
  gens[cert.f].map = quotient_by_bumps(gens[cert.f].map, e);
  return Family(std::move(gens));
}

}  // namespace ppfast
