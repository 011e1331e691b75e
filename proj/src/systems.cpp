#include "coxkl/systems.hpp"

#include <stdexcept>

namespace coxkl {

namespace {

// M restricted to [e, g] equals u -> s u (resp. u -> u s).
bool acts_as_mult(BruhatInterval& iv, const Matching& m,
                  const VertexSet& dom, Gen s, Side side) {
  CoxeterSystem& sys = *iv.sys;
  for (int v : dom.list) {
    int img = m[v];
    if (!dom.contains(img)) return false;
    if (iv.element(img) != sys.mult_gen(iv.element(v), s, side)) return false;
  }
  return true;
}

// The multiplication map restricted to the dihedral interval, or nullopt
// when it is not a matching of it (the descent is missing at the top).
std::optional<Matching> dihedral_mult(const BruhatInterval& d, Gen s,
                                      Side side) {
  CoxeterSystem& sys = *d.sys;
  GenSet desc = side == Side::left ? sys.left_descents(d.top)
                                   : sys.right_descents(d.top);
  if (!gen_in(desc, s)) return std::nullopt;
  return multiplication_matching(d, s, side);
}

bool commutes_with_mult(const SystemCandidate& c, Gen g, Side side) {
  auto mult = dihedral_mult(c.dihedral, g, side);
  if (!mult) return false;
  VertexSet dom = VertexSet::all(c.dihedral.poset);
  return commute_on(c.m_st, *mult, dom) == CommuteResult::commute;
}

bool equals_mult(const SystemCandidate& c, Gen g, Side side) {
  auto mult = dihedral_mult(c.dihedral, g, side);
  return mult && *mult == c.m_st;
}

// Axiom 1 shared core: m_st is a special matching of the dihedral interval
// with seed s; the value at t is pinned when t lies in the interval.
bool axiom1(const SystemCandidate& c, ElemRef t_to) {
  const BruhatInterval& d = c.dihedral;
  CoxeterSystem& sys = *d.sys;
  VertexSet dom = VertexSet::all(d.poset);
  if (!is_special(d.poset, c.m_st, dom)) return false;
  int s_idx = d.index_of(sys.from_word({c.s}));
  if (s_idx < 0 || c.m_st[0] != s_idx) return false;
  int t_idx = d.index_of(sys.from_word({c.t}));
  if (t_idx >= 0) {
    int img = d.index_of(t_to);
    if (img < 0 || c.m_st[t_idx] != img) return false;
  }
  return true;
}

}  // namespace

std::optional<ElemRef> apply_system(CoxeterSystem& sys,
                                    const SystemCandidate& c, ElemRef u) {
  GenSet st = gen_bit(c.s) | gen_bit(c.t);
  GenSet sonly = gen_bit(c.s);
  ElemRef a, b, mid, tail;
  if (c.right) {
    auto rd = sys.decompose_right(u, c.J);
    auto rd2 = sys.decompose_right(rd.min_rep, st);
    auto ld = sys.decompose_left(rd.sub, sonly);
    a = rd2.min_rep;    // (u^J)^{s,t}
    b = rd2.sub;        // (u^J)_{s,t}
    mid = ld.sub;       // _{s}(u_J)
    tail = ld.min_rep;  // ^{s}(u_J)
  } else {
    auto ld = sys.decompose_left(u, c.J);
    auto rd = sys.decompose_right(ld.sub, sonly);
    auto ld2 = sys.decompose_left(ld.min_rep, st);
    a = rd.min_rep;      // (_J u)^{s}
    b = rd.sub;          // (_J u)_{s}
    mid = ld2.sub;       // _{s,t}(^J u)
    tail = ld2.min_rep;  // ^{s,t}(^J u)
  }
  // Argument of the dihedral matching; the product must be length-additive.
  ElemRef arg = sys.mult(b, mid);
  if (sys.length(arg) != sys.length(b) + sys.length(mid))
    return std::nullopt;
  int ai = c.dihedral.index_of(arg);
  if (ai < 0) return std::nullopt;
  ElemRef marg = c.dihedral.element(c.m_st[ai]);
  ElemRef out = sys.mult(sys.mult(a, marg), tail);
  if (sys.length(out) !=
      sys.length(a) + sys.length(marg) + sys.length(tail))
    return std::nullopt;
  return out;
}

Matching matching_from_system(BruhatInterval& iv, const SystemCandidate& c) {
  Matching m(iv.size(), -1);
  for (int v = 0; v < iv.size(); ++v) {
    auto img = apply_system(*iv.sys, c, iv.element(v));
    if (!img)
      throw std::logic_error(
          "matching_from_system: length additivity failed in the defining "
          "product");
    int i = iv.index_of(*img);
    if (i < 0)
      throw std::logic_error("matching_from_system: image left the interval");
    m[v] = i;
  }
  return m;
}

AxiomReport check_right_system(BruhatInterval& iv, const SystemCandidate& c) {
  CoxeterSystem& sys = *iv.sys;
  AxiomReport rep;
  GenSet st = gen_bit(c.s) | gen_bit(c.t);

  bool typed = gen_in(c.J, c.s) && !gen_in(c.J, c.t);
  rep.axiom[0] =
      typed && axiom1(c, sys.from_word({c.t, c.s}));  // M_st(t) = ts

  rep.axiom[1] = true;
  for (int v = 0; v < iv.size() && rep.axiom[1]; ++v) {
    auto img = apply_system(sys, c, iv.element(v));
    if (!img || iv.index_of(*img) < 0) rep.axiom[1] = false;
  }

  auto wd = sys.decompose_right(iv.top, c.J);
  rep.axiom[2] = true;
  for (Gen r : gens_of(c.J))
    if (sys.gen_leq(r, wd.min_rep) && !sys.commutes(r, c.s))
      rep.axiom[2] = false;

  ElemRef c3 = sys.decompose_right(wd.min_rep, st).min_rep;  // (w^J)^{s,t}
  bool sc = sys.gen_leq(c.s, c3), tc = sys.gen_leq(c.t, c3);
  rep.axiom[3] = true;
  if (sc && tc)
    rep.axiom[3] = equals_mult(c, c.s, Side::right);
  else if (sc)
    rep.axiom[3] = commutes_with_mult(c, c.s, Side::left);
  else if (tc)
    rep.axiom[3] = commutes_with_mult(c, c.t, Side::left);

  ElemRef f = sys.decompose_left(wd.sub, gen_bit(c.s)).min_rep;  // ^{s}(w_J)
  rep.axiom[4] =
      sys.gen_leq(c.s, f) ? commutes_with_mult(c, c.s, Side::right) : true;
  return rep;
}

AxiomReport check_left_system(BruhatInterval& iv, const SystemCandidate& c) {
  CoxeterSystem& sys = *iv.sys;
  AxiomReport rep;
  GenSet st = gen_bit(c.s) | gen_bit(c.t);

  bool typed = gen_in(c.J, c.s) && !gen_in(c.J, c.t);
  rep.axiom[0] =
      typed && axiom1(c, sys.from_word({c.s, c.t}));  // M_st(t) = st

  rep.axiom[1] = true;
  for (int v = 0; v < iv.size() && rep.axiom[1]; ++v) {
    auto img = apply_system(sys, c, iv.element(v));
    if (!img || iv.index_of(*img) < 0) rep.axiom[1] = false;
  }

  auto wd = sys.decompose_left(iv.top, c.J);
  rep.axiom[2] = true;
  for (Gen r : gens_of(c.J))
    if (sys.gen_leq(r, wd.min_rep) && !sys.commutes(r, c.s))
      rep.axiom[2] = false;

  ElemRef c3 = sys.decompose_left(wd.min_rep, st).min_rep;  // ^{s,t}(^J w)
  bool sc = sys.gen_leq(c.s, c3), tc = sys.gen_leq(c.t, c3);
  rep.axiom[3] = true;
  if (sc && tc)
    rep.axiom[3] = equals_mult(c, c.s, Side::left);
  else if (sc)
    rep.axiom[3] = commutes_with_mult(c, c.s, Side::right);
  else if (tc)
    rep.axiom[3] = commutes_with_mult(c, c.t, Side::right);

  ElemRef f = sys.decompose_right(wd.sub, gen_bit(c.s)).min_rep;  // (_J w)^{s}
  rep.axiom[4] =
      sys.gen_leq(c.s, f) ? commutes_with_mult(c, c.s, Side::left) : true;
  return rep;
}

AxiomReport check_system(BruhatInterval& iv, const SystemCandidate& c) {
  return c.right ? check_right_system(iv, c) : check_left_system(iv, c);
}

std::optional<SystemCandidate> find_system_for_matching(BruhatInterval& iv,
                                                        const Matching& m) {
  CoxeterSystem& sys = *iv.sys;
  if (sys.rank() < 2) return std::nullopt;  // a system needs some t outside J
  Gen s = seed_of(iv, m);

  auto restrict_to = [&](const BruhatInterval& d) -> std::optional<Matching> {
    Matching r(d.size(), -1);
    for (int dv = 0; dv < d.size(); ++dv) {
      int xi = iv.index_of(d.element(dv));
      int img = d.index_of(iv.element(m[xi]));
      if (img < 0) return std::nullopt;  // m does not stabilize [e, w0(s,t)]
      r[dv] = img;
    }
    return r;
  };

  for (int pass = 0; pass < 2; ++pass) {
    bool right = pass == 0;
    Side side = right ? Side::left : Side::right;
    // J collects s and the generators r where m looks like the relevant
    // multiplication matching on [e, w0(s,r)].
    GenSet J = gen_bit(s);
    for (Gen r = 0; r < sys.rank(); ++r) {
      if (r == s) continue;
      ElemRef w0 = sys.max_parabolic_below(iv.top, gen_bit(s) | gen_bit(r));
      VertexSet dom = VertexSet::down_set(iv.poset, iv.index_of(w0));
      if (acts_as_mult(iv, m, dom, s, side)) J |= gen_bit(r);
    }
    for (Gen t = 0; t < sys.rank(); ++t) {
      if (gen_in(J, t)) continue;
      SystemCandidate c;
      c.right = right;
      c.J = J;
      c.s = s;
      c.t = t;
      ElemRef w0 = sys.max_parabolic_below(iv.top, gen_bit(s) | gen_bit(t));
      c.dihedral = build_interval(sys, w0, 0);
      auto mst = restrict_to(c.dihedral);
      if (!mst) continue;
      c.m_st = std::move(*mst);
      if (!check_system(iv, c).ok()) continue;
      if (matching_from_system(iv, c) == m) return c;
    }
  }
  return std::nullopt;
}

}  // namespace coxkl
