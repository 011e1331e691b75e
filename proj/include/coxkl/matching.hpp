#pragma once

#include <optional>
#include <vector>

#include "coxkl/interval.hpp"

namespace coxkl {

// A matching of a (sub)poset: partner[v] is the vertex matched with v, -1
// outside the domain.  Every matched pair lies on a Hasse edge.
using Matching = std::vector<int32_t>;

// A set of vertices of a fixed poset, kept both as a sorted list and as a
// membership mask.
struct VertexSet {
  std::vector<int> list;
  std::vector<char> mask;
  static VertexSet all(const Poset& p);
  static VertexSet down_set(const Poset& p, int v);
  bool contains(int v) const { return v >= 0 && mask[v]; }
};

bool is_matching(const Poset& p, const Matching& m, const VertexSet& dom);
// Special: u covered by v with m[u] != v implies m[u] <= m[v].
bool is_special(const Poset& p, const Matching& m, const VertexSet& dom);
// H-special: additionally a flagged vertex is never matched downward to an
// unflagged one.
bool is_h_special(const Poset& p, const Matching& m, const VertexSet& dom);

// All special matchings of the domain, in deterministic backtracking order
// (vertices scanned by (rank, index), candidate partners ascending).
std::vector<Matching> special_matchings(const Poset& p, const VertexSet& dom);
std::vector<Matching> special_matchings(const Poset& p);
std::vector<Matching> h_special_matchings(const Poset& p,
                                          const VertexSet& dom);
std::vector<Matching> h_special_matchings(const Poset& p);
// First H-special matching in enumeration order, pruning on the flag
// condition during the search.
std::optional<Matching> first_h_special_matching(const Poset& p,
                                                 const VertexSet& dom);

// lambda_s (left) or rho_s (right) on the interval; throws
// std::invalid_argument when s is not a descent of the top.
Matching multiplication_matching(const BruhatInterval& iv, Gen s, Side side);

enum class CommuteResult { commute, differ, leaves_domain };
CommuteResult commute_on(const Matching& m, const Matching& n,
                         const VertexSet& dom);
// True iff the compositions agree everywhere on the domain; throws
// std::domain_error if either matching maps the domain outside itself.
bool commute(const Matching& m, const Matching& n, const VertexSet& dom);

// Commutation tested only on the lower dihedral intervals [e, w0(a, b)]
// that contain both seeds m(e), n(e); equivalent to full commutation for
// special matchings.
bool commute_via_lower_dihedrals(BruhatInterval& iv, const Matching& m,
                                 const Matching& n);

enum class Tri { yes, no, not_applicable };
// Whether m maps [e, w0(J)] into itself; not_applicable when that interval
// is the single vertex e.
Tri stabilizes_parabolic(BruhatInterval& iv, const Matching& m, GenSet J);

// Hypothesis of the dihedral rigidity lemma: m commutes with rho_p and
// avoids it away from the ends.  For special matchings this forces m to be
// a left multiplication matching.
bool forces_left_mult(BruhatInterval& iv, const Matching& m, Gen p);
bool equals_left_mult(const BruhatInterval& iv, const Matching& m);
// The generator g with m(e) = g (m(e) is an atom of the interval).
Gen seed_of(const BruhatInterval& iv, const Matching& m);

}  // namespace coxkl
