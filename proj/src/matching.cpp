#include "coxkl/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxkl {

VertexSet VertexSet::all(const Poset& p) {
  VertexSet s;
  s.list.resize(p.size());
  for (int i = 0; i < p.size(); ++i) s.list[i] = i;
  s.mask.assign(p.size(), 1);
  return s;
}

VertexSet VertexSet::down_set(const Poset& p, int v) {
  VertexSet s;
  s.list = p.down_set(v);
  s.mask.assign(p.size(), 0);
  for (int u : s.list) s.mask[u] = 1;
  return s;
}

bool is_matching(const Poset& p, const Matching& m, const VertexSet& dom) {
  if (int(m.size()) != p.size()) return false;
  for (int v : dom.list) {
    int u = m[v];
    if (!dom.contains(u) || m[u] != v || u == v) return false;
    int lo = std::min(u, v), hi = std::max(u, v);
    if (!std::binary_search(p.up(lo).begin(), p.up(lo).end(), hi))
      return false;
  }
  return true;
}

bool is_special(const Poset& p, const Matching& m, const VertexSet& dom) {
  if (!is_matching(p, m, dom)) return false;
  for (auto [u, v] : p.data().covers) {
    if (!dom.mask[u] || !dom.mask[v]) continue;
    if (m[u] == v) continue;
    if (!p.leq(m[u], m[v])) return false;
  }
  return true;
}

bool is_h_special(const Poset& p, const Matching& m, const VertexSet& dom) {
  if (!is_special(p, m, dom)) return false;
  for (int v : dom.list)
    if (p.flagged(v) && p.rank_of(m[v]) < p.rank_of(v) && !p.flagged(m[v]))
      return false;
  return true;
}

namespace {

struct MatchSearch {
  const Poset& p;
  const VertexSet& dom;
  bool h_prune;        // discard branches violating the flag condition
  bool stop_at_first;  // stop after the first complete matching
  Matching m;
  std::vector<Matching> out;

  // Checks the special condition on every cover incident to z whose two
  // partners are now both determined.
  bool ok_around(int z) {
    for (int x : p.down(z)) {
      if (!dom.mask[x] || m[x] < 0) continue;
      if (m[x] == z) continue;
      if (!p.leq(m[x], m[z])) return false;
    }
    for (int y : p.up(z)) {
      if (!dom.mask[y] || m[y] < 0) continue;
      if (m[y] == z) continue;
      if (!p.leq(m[z], m[y])) return false;
    }
    return true;
  }

  bool search(size_t pos) {
    while (pos < dom.list.size() && m[dom.list[pos]] >= 0) ++pos;
    if (pos == dom.list.size()) {
      out.push_back(m);
      return stop_at_first;
    }
    int u = dom.list[pos];
    for (int v : p.up(u)) {
      if (!dom.mask[v] || m[v] >= 0) continue;
      if (h_prune && p.flagged(v) && !p.flagged(u)) continue;
      m[u] = v;
      m[v] = u;
      if (ok_around(u) && ok_around(v) && search(pos + 1)) return true;
      m[u] = -1;
      m[v] = -1;
    }
    return false;
  }
};

std::vector<Matching> enumerate(const Poset& p, const VertexSet& dom,
                                bool h_prune, bool stop_at_first) {
  // Domain vertices in (rank, index) order so that the first unmatched
  // vertex can only be matched upward.
  VertexSet ordered = dom;
  std::stable_sort(ordered.list.begin(), ordered.list.end(), [&](int a, int b) {
    return p.rank_of(a) < p.rank_of(b);
  });
  MatchSearch s{p, ordered, h_prune, stop_at_first,
                Matching(p.size(), -1), {}};
  s.search(0);
  return std::move(s.out);
}

}  // namespace

std::vector<Matching> special_matchings(const Poset& p, const VertexSet& dom) {
  return enumerate(p, dom, false, false);
}

std::vector<Matching> special_matchings(const Poset& p) {
  return special_matchings(p, VertexSet::all(p));
}

std::vector<Matching> h_special_matchings(const Poset& p,
                                          const VertexSet& dom) {
  std::vector<Matching> r;
  for (auto& m : special_matchings(p, dom))
    if (is_h_special(p, m, dom)) r.push_back(std::move(m));
  return r;
}

std::vector<Matching> h_special_matchings(const Poset& p) {
  return h_special_matchings(p, VertexSet::all(p));
}

std::optional<Matching> first_h_special_matching(const Poset& p,
                                                 const VertexSet& dom) {
  // The flag prune only removes branches with no H-special completion, so
  // the first hit equals the first element of h_special_matchings().
  auto found = enumerate(p, dom, true, true);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

Matching multiplication_matching(const BruhatInterval& iv, Gen s, Side side) {
  CoxeterSystem& sys = *iv.sys;
  GenSet d = side == Side::left ? sys.left_descents(iv.top)
                                : sys.right_descents(iv.top);
  if (!gen_in(d, s))
    throw std::invalid_argument(
        "multiplication_matching: s is not a descent of the top element");
  Matching m(iv.size(), -1);
  for (int i = 0; i < iv.size(); ++i) {
    int j = iv.index_of(sys.mult_gen(iv.element(i), s, side));
    if (j < 0)
      throw std::logic_error("multiplication_matching: left the interval");
    m[i] = j;
  }
  return m;
}

CommuteResult commute_on(const Matching& m, const Matching& n,
                         const VertexSet& dom) {
  bool eq = true;
  for (int x : dom.list) {
    if (!dom.contains(m[x]) || !dom.contains(n[x]))
      return CommuteResult::leaves_domain;
    int mn = m[n[x]], nm = n[m[x]];
    if (mn < 0 || nm < 0) return CommuteResult::leaves_domain;
    if (mn != nm) eq = false;
  }
  return eq ? CommuteResult::commute : CommuteResult::differ;
}

bool commute(const Matching& m, const Matching& n, const VertexSet& dom) {
  switch (commute_on(m, n, dom)) {
    case CommuteResult::commute:
      return true;
    case CommuteResult::differ:
      return false;
    default:
      throw std::domain_error("commute: a matching leaves the domain");
  }
}

Gen seed_of(const BruhatInterval& iv, const Matching& m) {
  int a = m[0];  // vertex 0 is the identity
  if (a < 0) throw std::invalid_argument("seed_of: identity unmatched");
  return Gen(iv.sys->word(iv.element(a))[0]);
}

bool commute_via_lower_dihedrals(BruhatInterval& iv, const Matching& m,
                                 const Matching& n) {
  Gen a = seed_of(iv, m), b = seed_of(iv, n);
  std::vector<std::pair<Gen, Gen>> pairs;
  if (a != b) {
    pairs.emplace_back(a, b);
  } else {
    for (Gen r = 0; r < iv.sys->rank(); ++r)
      if (r != a) pairs.emplace_back(a, r);
  }
  for (auto [s, t] : pairs) {
    ElemRef w0 = iv.sys->max_parabolic_below(iv.top, gen_bit(s) | gen_bit(t));
    VertexSet dom = VertexSet::down_set(iv.poset, iv.index_of(w0));
    if (commute_on(m, n, dom) != CommuteResult::commute) return false;
  }
  return true;
}

Tri stabilizes_parabolic(BruhatInterval& iv, const Matching& m, GenSet J) {
  ElemRef w0 = iv.sys->max_parabolic_below(iv.top, J);
  VertexSet dom = VertexSet::down_set(iv.poset, iv.index_of(w0));
  if (dom.list.size() == 1) return Tri::not_applicable;
  for (int x : dom.list)
    if (!dom.contains(m[x])) return Tri::no;
  return Tri::yes;
}

bool forces_left_mult(BruhatInterval& iv, const Matching& m, Gen p) {
  CoxeterSystem& sys = *iv.sys;
  if (!gen_in(sys.right_descents(iv.top), p))
    throw std::invalid_argument("forces_left_mult: p not a right descent");
  VertexSet dom = VertexSet::all(iv.poset);
  Matching rho = multiplication_matching(iv, p, Side::right);
  if (commute_on(m, rho, dom) != CommuteResult::commute) return false;
  GenSet supp = sys.support(iv.top);
  unsigned label = 0;  // 0 when the dihedral group is infinite or rank 1
  auto gens = gens_of(supp);
  if (gens.size() == 2) label = sys.matrix().label(gens[0], gens[1]);
  for (int x = 0; x < iv.size(); ++x) {
    int l = iv.poset.rank_of(x);
    if (l <= 1) continue;
    if (label != 0 && (l == int(label) - 1 || l == int(label))) continue;
    if (m[x] == rho[x]) return false;
  }
  return true;
}

bool equals_left_mult(const BruhatInterval& iv, const Matching& m) {
  Gen s = seed_of(iv, m);
  CoxeterSystem& sys = *iv.sys;
  for (int i = 0; i < iv.size(); ++i)
    if (iv.element(m[i]) != sys.mult_gen(iv.element(i), s, Side::left))
      return false;
  return true;
}

}  // namespace coxkl
