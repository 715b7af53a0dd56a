#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bozk/diagnostics.hpp"

namespace bozk {

struct Check {
  std::string suite;
  std::string name;
  double value = 0;
  double limit = 0;
  bool pass = false;
};

// slope in [0,1], beta <= <x>, value joins at N and 3N
std::vector<Check> weights_checks(const std::vector<int>& Ns);

// closed-form phase oracles, the mixed-phase bound, jump detection
std::vector<Check> stein_checks();

struct IneqCase {
  std::string name;
  IneqKind kind;
  IneqParams p;
  bool paired;     // needs a second field from the family
  double ceiling;  // regression ceiling on the family maximum
};
// fixed case list with recorded ceilings (64x64 grid, [0,16pi)^2 torus)
const std::vector<IneqCase>& inequality_cases();

// max of inequality_ratio over `count` seeded random bump mixtures
double family_max(const IneqCase& c, const Grid2D& g, int count, std::uint64_t seed);

// homogeneity checks on one field pair, family maxima for two seeds against
// the ceilings, and the w_N uniformity check over N in {4, 8, 16, 32}
std::vector<Check> inequality_checks(const Grid2D& g, int count, std::uint64_t seed);

// 4/3 on symmetric intervals at alpha = 1/2, infinite at alpha = 3/2
std::vector<Check> a2_checks();

}  // namespace bozk
