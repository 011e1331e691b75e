#pragma once

#include <array>
#include <optional>

#include "coxkl/matching.hpp"

namespace coxkl {

// A candidate right or left system (J, s, t, M_st) for the top of an
// interval.  The dihedral matching M_st lives on the materialized interval
// [e, w0(s,t)] (w0 relative to the target element).
struct SystemCandidate {
  bool right = true;
  GenSet J = 0;
  Gen s = 0, t = 0;
  BruhatInterval dihedral;
  Matching m_st;
};

// Per-axiom verdicts, axioms()[k] for axiom k+1 (R or L according to kind).
struct AxiomReport {
  std::array<bool, 5> axiom{};
  bool ok() const {
    for (bool b : axiom)
      if (!b) return false;
    return true;
  }
};

// Evaluates the five axioms of the candidate against the interval [e, w].
// The last three are commutation or equality conditions on the dihedral
// interval; a multiplication map that does not restrict to a matching of it
// counts as a failure.
AxiomReport check_right_system(BruhatInterval& iv, const SystemCandidate& c);
AxiomReport check_left_system(BruhatInterval& iv, const SystemCandidate& c);
AxiomReport check_system(BruhatInterval& iv, const SystemCandidate& c);

// The associated map at a single element: factor u through the parabolic
// decompositions, route the dihedral part through M_st, reassemble.
// nullopt when a product fails to be length-additive or the dihedral part
// leaves the domain of M_st.
std::optional<ElemRef> apply_system(CoxeterSystem& sys,
                                    const SystemCandidate& c, ElemRef u);

// The associated matching on the whole interval; throws std::logic_error
// when apply_system fails anywhere (a checked candidate never does).
Matching matching_from_system(BruhatInterval& iv, const SystemCandidate& c);

// Searches right then left candidates with s = m(e), the parabolic set J
// read off from how m acts on the lower dihedral intervals, and every
// admissible t in ascending order.  Returns the first validated candidate
// whose associated matching is m.
std::optional<SystemCandidate> find_system_for_matching(BruhatInterval& iv,
                                                        const Matching& m);

}  // namespace coxkl
