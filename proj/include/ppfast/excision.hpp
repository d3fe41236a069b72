#pragma once

#include <cstddef>
#include <vector>

#include "ppfast/diagram.hpp"
#include "ppfast/family.hpp"

namespace ppfast {

// E: indices into used_bumps(x); j: the witnessing interval; f: generator.
struct ExtraneousCertificate {
  std::vector<std::size_t> e;
  Interval j;
  std::size_t f = 0;
};

// Throws PreconditionError if some bump of e is not used in f.
PLMap quotient_by_bumps(const PLMap& f, const std::vector<Bump>& e);

// Empty string when valid, else the failing condition.
std::string check_certificate(const FastSystem& sys,
                              const ExtraneousCertificate& c);

// One certificate per (generator, maximal gap between the other
// generators' feet) whose isolated bumps of f inside the gap are nonempty
// and some other bump of f has a foot in the gap.
std::vector<ExtraneousCertificate> find_extraneous(const Family& x);

Family excise(const Family& x, const ExtraneousCertificate& cert);

}  // namespace ppfast
