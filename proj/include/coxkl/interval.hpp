#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coxkl/coxeter.hpp"

namespace coxkl {

// Group-free content of a finite graded poset with a unique minimum and
// maximum and a membership flag per vertex.  This is the exchange format of
// the poset-only pipeline: two isomorphic flagged posets carry the same
// information regardless of where they came from.
struct AbstractPoset {
  int n = 0;
  std::vector<int> rank;
  std::vector<std::pair<int, int>> covers;  // (lower, upper)
  std::vector<char> h;
};

// AbstractPoset plus derived machinery: adjacency, reachability, down-sets.
// Construction validates gradedness and the unique min/max.
class Poset {
 public:
  Poset() = default;  // empty placeholder; usable only after assignment
  explicit Poset(AbstractPoset data);

  int size() const { return data_.n; }
  int rank_of(int v) const { return data_.rank[v]; }
  bool flagged(int v) const { return data_.h[v] != 0; }
  const AbstractPoset& data() const { return data_; }
  const std::vector<int>& up(int v) const { return up_[v]; }
  const std::vector<int>& down(int v) const { return down_[v]; }
  int min_vertex() const { return min_; }
  int max_vertex() const { return max_; }

  bool leq(int u, int v) const {
    return (below_[size_t(v) * words_ + (u >> 6)] >> (u & 63)) & 1;
  }
  // Vertices <= v, ascending.
  std::vector<int> down_set(int v) const;
  // Vertex order sorted by (rank, index); identity for interval posets.
  const std::vector<int>& by_rank() const { return by_rank_; }

 private:
  AbstractPoset data_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> by_rank_;
  int min_ = 0, max_ = 0;
  size_t words_ = 0;
  std::vector<uint64_t> below_;
};

// The lower Bruhat interval [e, w] materialized as a flagged poset, with
// back references into the group.  Vertices are sorted by (length,
// canonical word), so vertex 0 is the identity and the last vertex is w.
struct BruhatInterval {
  CoxeterSystem* sys = nullptr;
  ElemRef top = kNoElem;
  GenSet H = 0;
  std::vector<ElemRef> verts;
  Poset poset;

  int size() const { return poset.size(); }
  int index_of(ElemRef e) const;  // -1 when absent
  ElemRef element(int v) const { return verts[v]; }
};

inline constexpr size_t kDefaultIntervalCap = 20000;

// Downward closure of w by single-letter deletions of reduced words; throws
// std::length_error when the vertex count exceeds the cap.
BruhatInterval build_interval(CoxeterSystem& sys, ElemRef w, GenSet H,
                              size_t cap = kDefaultIntervalCap);

AbstractPoset to_abstract(const BruhatInterval& iv);

// The interval [e, element(top_vertex)] with inherited flags, re-indexed.
BruhatInterval subinterval(const BruhatInterval& iv, int top_vertex);

// Rank-preserving poset isomorphism (flag-preserving when respect_flags),
// as an image table p-vertex -> q-vertex, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Poset& p,
                                                 const Poset& q,
                                                 bool respect_flags);

// The same poset with vertex v renamed perm[v].
AbstractPoset relabel(const AbstractPoset& p, const std::vector<int>& perm);

}  // namespace coxkl
