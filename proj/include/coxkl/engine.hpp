#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "coxkl/klpoly.hpp"
#include "coxkl/matching.hpp"

namespace coxkl {

// One step of the matching recurrence at a flagged vertex u: matched down
// (the value transports), matched up into the flagged set, or matched up
// out of it.
enum class StepCase { down, up_in, up_out };
// Throws std::domain_error if u is matched down to an unflagged vertex
// (impossible for an H-special matching).
StepCase matching_step(const Poset& p, const Matching& m, int u);

enum class Policy { first, all_agree, prefer_left_mult };

// Raised by all-agree mode when two H-special matchings of some subposet
// yield different values; dump carries a JSON counterexample (see README).
struct AgreementFailure : std::runtime_error {
  AgreementFailure(const std::string& what, std::string dump_json)
      : std::runtime_error(what), dump(std::move(dump_json)) {}
  std::string dump;
};

struct RTable {
  int top = -1;
  std::map<int, PolyZ> rows;                    // flagged u -> R(u, top)
  std::map<std::pair<int, int>, PolyZ> values;  // every (u, top') computed
};

// Computes the parabolic R-polynomials of a flagged poset with no group
// data: repeatedly pick an H-special matching of the current top's down-set
// and apply the step recurrence.  The poset must be graded with flagged
// minimum and maximum; a subposet with no H-special matching is a hard
// error (it cannot arise from a genuine quotient interval).
class MatchingEngine {
 public:
  // group is required by Policy::prefer_left_mult and must be the interval
  // the poset was extracted from (same vertex order).
  MatchingEngine(Poset poset, XMode x, Policy policy,
                 const BruhatInterval* group = nullptr,
                 bool inject_fault = false);

  RTable run();
  const PolyZ& R(int u, int top);
  const Poset& poset() const { return p_; }

 private:
  const std::vector<Matching>& matchings_for(int top);
  PolyZ step_value(int u, int top, const Matching& m);
  Poset p_;
  XMode x_;
  Policy policy_;
  const BruhatInterval* group_;
  bool fault_;
  std::map<int, std::vector<Matching>> hsm_;
  std::map<std::pair<int, int>, PolyZ> memo_;
};

// Word-based check that one H-special matching of the top of iv reproduces
// parabolic R through the step recurrence, for every flagged vertex.
// inject_fault flips the up_out factor and is used by the harness self-test.
bool matching_calculates(KLContext& ctx, const BruhatInterval& iv,
                         const Matching& m, bool inject_fault = false);

// Runs both engines across a flag-preserving isomorphism and compares all
// rows; throws std::invalid_argument when no such isomorphism exists.
bool transfer_check(const AbstractPoset& p, const AbstractPoset& q, XMode x);

}  // namespace coxkl
