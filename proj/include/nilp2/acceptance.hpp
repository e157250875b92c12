#ifndef NILP2_ACCEPTANCE_HPP
#define NILP2_ACCEPTANCE_HPP

// The end-to-end acceptance battery. Shared by `nilp2 selftest` and the
// acceptance test binary.

#include <random>
#include <string>
#include <vector>

#include "nilp2/constructions.hpp"

namespace nilp2 {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string evidence;    // deterministic
  double seconds = 0.0;    // wall clock, not part of the evidence
  double limit_seconds = 0.0;
};

// {C_p, C_p^2, C_p^3, heisenberg(p), extraspecial_p5(p), heisenberg(p) *2 C_p}.
std::vector<Presentation> standard_battery(Residue p);

// A random valid presentation with 1 <= n <= max_n.
Presentation random_presentation(std::mt19937_64& rng, Residue p, Index max_n);
Element random_element(std::mt19937_64& rng, const Presentation& g);

int criterion_count();
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

// Verdict and extension reports for the battery, rendered as text.
std::string battery_report();

// One "[PASS] 3 capability-ground-truths: ..." line per criterion.
std::string render_selftest(const std::vector<CriterionResult>& results);

}  // namespace nilp2

#endif  // NILP2_ACCEPTANCE_HPP
