#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coxkl/coxeter.hpp"

namespace coxkl {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0;
};

struct SweepOptions {
  int max_len = 7;           // length bound of the recurrence sweep
  size_t interval_cap = 2000;
  int p_max_len = 6;         // length bound of the P-identity subsweep
  int reduced_max_len = 5;   // length bound of the brute-force subsweep
  bool inject_fault = false; // harness self-test: flips a recurrence branch
  std::function<void(const std::string&)> progress;  // optional
};

// Rank <= 3 Coxeter matrices with labels in {2,3,4,5,inf}, one per
// isomorphism class (relabeling generators changes nothing).
std::vector<CoxeterMatrix> sweep_systems();

// All elements of length <= max_len, by breadth-first growth.
std::vector<ElemRef> ball(CoxeterSystem& sys, int max_len);

// The ten acceptance criteria, in order.  Each runs independently; the
// combinatorial sweep covers criteria 3, 4, 6, 7 and 9 in one pass.
std::vector<CriterionResult> run_acceptance(const SweepOptions& opt = {});

std::string format_result(const CriterionResult& r);

}  // namespace coxkl
