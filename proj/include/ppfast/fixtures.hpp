#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppfast/diagram.hpp"
#include "ppfast/family.hpp"
#include "ppfast/io.hpp"
#include "ppfast/projective.hpp"

namespace ppfast {

struct Fixture {
  std::string name;
  std::string note;
  std::string default_family;
  std::map<std::string, Family> families;
  std::optional<DynamicalDiagram> diagram;
  std::optional<PingPongWitness> witness;
};

// g_i: slope n on [i, i+1], translation by n - 1 to the right of it.
PLMap thompson_g(long i, long n);
// {g_0, ..., g_{n-1}}.
Family thompson_g_family(long n);
// h_i = g_i g_{i+1}^-1 for i < n - 1, h_{n-1} = g_{n-1}.
Family thompson_h_family(long n);

// "F n" and "Fn n" take 2 <= n <= 32.
std::vector<std::string> fixture_names();
// Throws PreconditionError on an unknown name.
Fixture fixture(const std::string& name);

Json to_json(const Fixture& f);

}  // namespace ppfast
