#pragma once

#include <string>
#include <vector>

#include "treehopf/algebra.hpp"

namespace treehopf {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string counterexample;  // empty when pass
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string counterexample = "") {
    checks.push_back({std::move(name), pass, std::move(counterexample)});
  }
};

// Exhaustive bialgebra/Hopf checks on all basis elements of degree <= N:
// coassociativity, counit laws, multiplicativity of the coproduct,
// associativity/commutativity of the product, the antipode identity where one
// exists, and grading of all outputs.
Report hopf_axiom_check(AlgebraTag alg, const Alphabet& alphabet, int N);

}  // namespace treehopf
