#include "coxkl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

#include "coxkl/engine.hpp"
#include "coxkl/oracle.hpp"
#include "coxkl/systems.hpp"

namespace coxkl {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

PolyZ q_minus_1() { return PolyZ({mpz_class(-1), mpz_class(1)}); }

struct Counter {
  long checks = 0;
  long failures = 0;
  void tally(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
  std::string summary() const {
    std::ostringstream os;
    os << checks << " checks, " << failures << " failures";
    return os.str();
  }
};

std::unique_ptr<CoxeterSystem> make_a3() {
  return CoxeterSystem::create(CoxeterMatrix::type_a(3));
}

std::unique_ptr<CoxeterSystem> make_b2() {
  return CoxeterSystem::create(CoxeterMatrix::dihedral(4));
}

void note(const SweepOptions& opt, const std::string& line) {
  if (opt.progress) opt.progress(line);
}

// ---------------------------------------------------------------- 1 & 2

CriterionResult worked_example(const SweepOptions& opt) {
  (void)opt;
  auto t0 = Clock::now();
  CriterionResult r{1, "worked example: A3, H={2}, R(1, 1231)"};
  auto sys = make_a3();
  GenSet H = gen_bit(1);
  ElemRef w = sys->from_word({0, 1, 2, 0});
  ElemRef u = sys->from_word({0});
  BruhatInterval iv = build_interval(*sys, w, H);
  bool ok = true;
  std::ostringstream details;
  for (XMode x : {XMode::q_mode, XMode::minus_one}) {
    PolyZ expect = x_factor(x) * q_minus_1() * q_minus_1();
    KLContext ctx(*sys, H, x);
    ok &= ctx.R(u, w) == expect;
    RTable t = MatchingEngine(iv.poset, x, Policy::first).run();
    ok &= t.rows.at(iv.index_of(u)) == expect;
    if (x == XMode::q_mode) details << "R = " << expect.to_string();
  }
  r.seconds = since(t0);
  ok &= r.seconds < 1.0;
  r.pass = ok;
  r.details = details.str();
  return r;
}

CriterionResult matching_count(const SweepOptions& opt) {
  (void)opt;
  auto t0 = Clock::now();
  CriterionResult r{2, "H-special matchings of the A3 example"};
  auto sys = make_a3();
  BruhatInterval iv =
      build_interval(*sys, sys->from_word({0, 1, 2, 0}), gen_bit(1));
  size_t n = h_special_matchings(iv.poset).size();
  r.pass = n == 3 && since(t0) < 1.0;
  r.details = std::to_string(n) + " found, 3 expected";
  r.seconds = since(t0);
  return r;
}

// ------------------------------------------------- combined sweep 3/4/6a/7/9

struct SweepCounters {
  Counter calc;       // criterion 3
  Counter pipeline;   // criterion 4
  Counter deodhar;    // criterion 6 (identity + degree bound + shifts)
  Counter fastpath;   // criterion 7
  Counter enumerate;  // criterion 9
  long skipped_cap = 0;
};

// Fast-path detection for one flagged pair (u, w) and one generator pair.
void check_fast_paths(CoxeterSystem& sys, KLContext& ctx, ElemRef u,
                      ElemRef w, Gen s, Gen t, Counter& counter) {
  GenSet st = gen_bit(s) | gen_bit(t);
  auto wd = sys.decompose_left(w, st);
  auto ud = sys.decompose_left(u, st);
  ElemRef w2 = wd.sub, w3 = wd.min_rep, u2 = ud.sub, u3 = ud.min_rep;
  CosetCase cc = classify_coset(sys, ctx.H(), u3, s, t);
  if (cc == CosetCase::empty) return;  // u would not be a representative
  if (cc == CosetCase::singleton) {
    // Coset meets the representatives only in u3, so u = u3.
    if (u2 != sys.identity()) {
      counter.tally(false);
      return;
    }
    PolyZ got = r_singleton_case(ctx.xmode(), sys.length(w2), ctx.R(u3, w3));
    counter.tally(got == ctx.R(u, w));
    return;
  }
  // The remaining closed forms need at most one of s, t below w3.
  bool s3 = sys.gen_leq(s, w3), t3 = sys.gen_leq(t, w3);
  if (s3 && t3) return;
  if (cc == CosetCase::full) {
    std::optional<Gen> p;
    if (s3) p = s;
    if (t3) p = t;
    PolyZ rp = p ? ctx.R(sys.mult_gen(u3, *p, Side::left), w3) : PolyZ();
    PolyZ got =
        r_full_coset_case(sys, ctx.xmode(), u2, w2, ctx.R(u3, w3), rp, p);
    counter.tally(got == ctx.R(u, w));
    return;
  }
  Gen r = cc == CosetCase::chain_s ? s : t;
  PolyZ rr = ctx.R(sys.mult_gen(u3, r, Side::left), w3);
  PolyZ got = r_chain_coset_case(sys, ctx.xmode(), u2, w2, s, t, r,
                                 ctx.R(u3, w3), rr);
  counter.tally(got == ctx.R(u, w));
}

// Inversion identity and degree bound for every flagged pair of [e, w].
void check_deodhar_identities(CoxeterSystem& sys, KLContext& ctx,
                              const BruhatInterval& iv, Counter& counter) {
  int top = iv.size() - 1;
  ElemRef w = iv.element(top);
  for (int uv = 0; uv < iv.size(); ++uv) {
    if (!iv.poset.flagged(uv)) continue;
    ElemRef u = iv.element(uv);
    const PolyZ& p = ctx.P(u, w);
    int d = sys.length(w) - sys.length(u);
    bool ok = u == w ? p == PolyZ::one()
                     : 2 * p.degree() <= d - 1 || p.is_zero();
    PolyZ rhs;
    for (int zv = 0; zv < iv.size(); ++zv) {
      if (!iv.poset.flagged(zv) || !iv.poset.leq(uv, zv)) continue;
      ElemRef z = iv.element(zv);
      rhs += ctx.R(u, z) * ctx.P(z, w);
    }
    ok = ok && p.reversed(d) == rhs;
    counter.tally(ok);
  }
}

void sweep_one(CoxeterSystem& sys, const SweepOptions& opt,
               SweepCounters& sc) {
  std::vector<ElemRef> elems = ball(sys, opt.max_len);
  GenSet all = full_gen_set(sys.rank());
  for (GenSet H = 0;; ++H) {
    KLContext cq(sys, H, XMode::q_mode), cm(sys, H, XMode::minus_one);
    for (ElemRef w : elems) {
      if (!sys.is_min_coset_rep(w, H)) continue;
      std::optional<BruhatInterval> built;
      try {
        built = build_interval(sys, w, H, opt.interval_cap);
      } catch (const std::length_error&) {
        ++sc.skipped_cap;
        continue;
      }
      BruhatInterval& iv = *built;

      auto specials = special_matchings(iv.poset);
      VertexSet dom = VertexSet::all(iv.poset);

      // Criterion 9 on small intervals of the reduced sweep (flag-free, so
      // restrict to H = 0 to avoid re-checking identical posets).
      if (H == 0 && sys.length(w) <= opt.reduced_max_len && iv.size() <= 60) {
        auto brute = brute_force_special_matchings(iv.poset);
        auto sorted = specials;
        std::sort(sorted.begin(), sorted.end());
        sc.enumerate.tally(sorted == brute);
      }

      // Criterion 3: every H-special matching calculates, in both modes.
      for (const auto& m : specials) {
        if (!is_h_special(iv.poset, m, dom)) continue;
        sc.calc.tally(matching_calculates(cq, iv, m, opt.inject_fault));
        sc.calc.tally(matching_calculates(cm, iv, m, opt.inject_fault));
      }

      // Criterion 4: the poset-only pipeline agrees with the word-based one.
      for (XMode x : {XMode::q_mode, XMode::minus_one}) {
        KLContext& ctx = x == XMode::q_mode ? cq : cm;
        RTable t = MatchingEngine(iv.poset, x, Policy::first).run();
        bool ok = true;
        for (auto& [uv, poly] : t.rows)
          ok = ok && poly == ctx.R(iv.element(uv), w);
        sc.pipeline.tally(ok);
      }

      // Criteria 6 (identities) and 7 (closed-form fast paths) on the
      // P-bounded part of the sweep.
      if (sys.length(w) <= opt.p_max_len) {
        check_deodhar_identities(sys, cq, iv, sc.deodhar);
        check_deodhar_identities(sys, cm, iv, sc.deodhar);
        for (int uv = 0; uv < iv.size(); ++uv) {
          if (!iv.poset.flagged(uv)) continue;
          ElemRef u = iv.element(uv);
          for (Gen s = 0; s < sys.rank(); ++s)
            for (Gen t = s + 1; t < sys.rank(); ++t) {
              check_fast_paths(sys, cq, u, w, s, t, sc.fastpath);
              check_fast_paths(sys, cm, u, w, s, t, sc.fastpath);
            }
        }
      }
    }
    if (H == all) break;
  }
}

// --------------------------------------------------------------- 5, 6b, 8

CriterionResult dihedral_forms(const SweepOptions& opt) {
  (void)opt;
  auto t0 = Clock::now();
  CriterionResult r{5, "dihedral closed forms, m in {2..8, inf}"};
  Counter c;
  for (unsigned m : {2u, 3u, 4u, 5u, 6u, 7u, 8u, 0u}) {
    auto sys = CoxeterSystem::create(CoxeterMatrix::dihedral(m));
    OrdinaryKL ord(*sys);
    for (ElemRef w : ball(*sys, 9)) {
      BruhatInterval iv = build_interval(*sys, w, 0);
      for (int uv = 0; uv < iv.size(); ++uv) {
        ElemRef u = iv.element(uv);
        int d = sys->length(w) - sys->length(u);
        PolyZ expect = d == 0 ? PolyZ::one() : dihedral_r_polynomial(d);
        c.tally(ord.R(u, w) == expect);
      }
    }
  }
  r.pass = c.failures == 0;
  r.details = c.summary();
  r.seconds = since(t0);
  return r;
}

Counter prop73_checks(CoxeterSystem& sys) {
  Counter c;
  OrdinaryKL ord(sys);
  GenSet all = full_gen_set(sys.rank());
  std::vector<ElemRef> elems = ball(sys, 1 << 20);  // finite group: everything
  for (GenSet H = 0;; ++H) {
    KLContext cq(sys, H, XMode::q_mode), cm(sys, H, XMode::minus_one);
    for (ElemRef u : elems) {
      if (!sys.is_min_coset_rep(u, H)) continue;
      for (ElemRef v : elems) {
        if (!sys.is_min_coset_rep(v, H)) continue;
        c.tally(check_parabolic_ordinary_sum(cq, ord, u, v));
        c.tally(check_longest_shift(cm, ord, u, v));
      }
    }
    if (H == all) break;
  }
  return c;
}

CriterionResult system_characterization(const SweepOptions& opt) {
  (void)opt;
  auto t0 = Clock::now();
  CriterionResult r{8, "systems for all special matchings (A3, B2)"};
  Counter c;
  for (int which = 0; which < 2; ++which) {
    auto sys = which == 0 ? make_a3() : make_b2();
    for (ElemRef w : ball(*sys, 6)) {
      if (w == sys->identity()) continue;
      BruhatInterval iv = build_interval(*sys, w, 0);
      for (const auto& m : special_matchings(iv.poset))
        c.tally(find_system_for_matching(iv, m).has_value());
    }
  }

  // The quadruple ({s2,s3}, s2, s1, M) with M = right multiplication by s2
  // on [e, s1 s2 s1] is a right system for w = s1 s2 s3 s1 whose associated
  // matching is not a multiplication matching.
  auto sys = make_a3();
  ElemRef w = sys->from_word({0, 1, 2, 0});
  BruhatInterval iv = build_interval(*sys, w, 0);
  SystemCandidate cand;
  cand.right = true;
  cand.J = gen_bit(1) | gen_bit(2);
  cand.s = 1;
  cand.t = 0;
  cand.dihedral = build_interval(
      *sys, sys->max_parabolic_below(w, gen_bit(0) | gen_bit(1)), 0);
  cand.m_st = multiplication_matching(cand.dihedral, 1, Side::right);
  bool example_ok = check_right_system(iv, cand).ok();
  if (example_ok) {
    Matching m = matching_from_system(iv, cand);
    for (Gen s : gens_of(sys->left_descents(w)))
      if (m == multiplication_matching(iv, s, Side::left)) example_ok = false;
    for (Gen s : gens_of(sys->right_descents(w)))
      if (m == multiplication_matching(iv, s, Side::right)) example_ok = false;
  }
  c.tally(example_ok);

  r.pass = c.failures == 0;
  r.details = c.summary();
  r.seconds = since(t0);
  return r;
}

CriterionResult mode_identity(const SweepOptions& opt) {
  (void)opt;
  auto t0 = Clock::now();
  CriterionResult r{10, "(q-1)(q-1-x) + q == (q-1-x)^2"};
  bool ok = true;
  for (XMode x : {XMode::q_mode, XMode::minus_one}) {
    PolyZ f = x_factor(x);
    ok &= q_minus_1() * f + PolyZ::monomial(1, 1) == f * f;
  }
  r.pass = ok;
  r.seconds = since(t0);
  return r;
}

}  // namespace

std::vector<CoxeterMatrix> sweep_systems() {
  std::vector<CoxeterMatrix> out;
  CoxeterMatrix r1;
  r1.rank = 1;
  r1.labels = {{1}};
  out.push_back(r1);
  const unsigned vals[] = {2, 3, 4, 5, 0};
  for (unsigned m : vals) out.push_back(CoxeterMatrix::dihedral(m));
  for (int a = 0; a < 5; ++a)
    for (int b = a; b < 5; ++b)
      for (int c = b; c < 5; ++c) {
        CoxeterMatrix m;
        m.rank = 3;
        m.labels = {{1, vals[a], vals[b]},
                    {vals[a], 1, vals[c]},
                    {vals[b], vals[c], 1}};
        out.push_back(m);
      }
  return out;
}

std::vector<ElemRef> ball(CoxeterSystem& sys, int max_len) {
  std::vector<ElemRef> out = {sys.identity()};
  std::vector<ElemRef> frontier = out;
  for (int l = 1; l <= max_len && !frontier.empty(); ++l) {
    std::vector<ElemRef> next;
    for (ElemRef e : frontier)
      for (Gen s = 0; s < sys.rank(); ++s) {
        if (gen_in(sys.right_descents(e), s)) continue;
        ElemRef f = sys.mult_gen(e, s, Side::right);
        if (std::find(next.begin(), next.end(), f) == next.end())
          next.push_back(f);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << "[" << (r.id < 10 ? " " : "") << r.id << "] " << r.name << " ";
  for (size_t i = r.name.size(); i < 52; ++i) os << '.';
  os << (r.pass ? " PASS" : " FAIL");
  char buf[32];
  snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
  os << buf;
  if (!r.details.empty()) os << "  " << r.details;
  return os.str();
}

std::vector<CriterionResult> run_acceptance(const SweepOptions& opt) {
  std::vector<CriterionResult> out;
  out.push_back(worked_example(opt));
  note(opt, format_result(out.back()));
  out.push_back(matching_count(opt));
  note(opt, format_result(out.back()));

  auto t0 = Clock::now();
  SweepCounters sc;
  auto systems = sweep_systems();
  for (size_t i = 0; i < systems.size(); ++i) {
    auto sys = CoxeterSystem::create(systems[i]);
    sweep_one(*sys, opt, sc);
    std::ostringstream os;
    os << "  sweep " << (i + 1) << "/" << systems.size() << " rank "
       << systems[i].rank << ": " << sc.calc.summary();
    note(opt, os.str());
  }
  double sweep_secs = since(t0);

  CriterionResult c3{3, "matching recurrence sweep (rank <= 3)"};
  c3.pass = sc.calc.failures == 0 && sc.calc.checks > 0;
  c3.details = sc.calc.summary() +
               (sc.skipped_cap
                    ? " (" + std::to_string(sc.skipped_cap) + " over cap)"
                    : "");
  c3.seconds = sweep_secs;
  out.push_back(c3);
  note(opt, format_result(out.back()));

  CriterionResult c4{4, "poset pipeline equals word pipeline"};
  c4.pass = sc.pipeline.failures == 0 && sc.pipeline.checks > 0;
  c4.details = sc.pipeline.summary();
  c4.seconds = sweep_secs;
  out.push_back(c4);
  note(opt, format_result(out.back()));

  out.push_back(dihedral_forms(opt));
  note(opt, format_result(out.back()));

  {
    auto t1 = Clock::now();
    CriterionResult c6{6, "inversion identity, degree bound, quotient shifts"};
    Counter shifts;
    {
      auto a3 = make_a3();
      shifts = prop73_checks(*a3);
    }
    {
      auto b2 = make_b2();
      Counter c2 = prop73_checks(*b2);
      shifts.checks += c2.checks;
      shifts.failures += c2.failures;
    }
    c6.pass = sc.deodhar.failures == 0 && sc.deodhar.checks > 0 &&
              shifts.failures == 0;
    c6.details = "identities " + sc.deodhar.summary() + "; shifts " +
                 shifts.summary();
    c6.seconds = sweep_secs + since(t1);
    out.push_back(c6);
    note(opt, format_result(out.back()));
  }

  CriterionResult c7{7, "coset closed-form fast paths"};
  c7.pass = sc.fastpath.failures == 0 && sc.fastpath.checks > 0;
  c7.details = sc.fastpath.summary();
  c7.seconds = sweep_secs;
  out.push_back(c7);
  note(opt, format_result(out.back()));

  out.push_back(system_characterization(opt));
  note(opt, format_result(out.back()));

  CriterionResult c9{9, "enumeration equals brute force (<= 60 vertices)"};
  c9.pass = sc.enumerate.failures == 0 && sc.enumerate.checks > 0;
  c9.details = sc.enumerate.summary();
  c9.seconds = sweep_secs;
  out.push_back(c9);
  note(opt, format_result(out.back()));

  out.push_back(mode_identity(opt));
  note(opt, format_result(out.back()));

  std::sort(out.begin(), out.end(),
            [](const CriterionResult& a, const CriterionResult& b) {
              return a.id < b.id;
            });
  return out;
}

}  // namespace coxkl
