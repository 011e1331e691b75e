#include "coxkl/engine.hpp"

#include <nlohmann/json.hpp>

namespace coxkl {

namespace {

PolyZ q_minus_1() { return PolyZ({mpz_class(-1), mpz_class(1)}); }

std::vector<std::string> coeff_strings(const PolyZ& p) {
  std::vector<std::string> v;
  for (const auto& c : p.coeffs()) v.push_back(c.get_str());
  return v;
}

nlohmann::json poset_json(const AbstractPoset& p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["rank"] = p.rank;
  auto covers = nlohmann::json::array();
  for (auto [a, b] : p.covers) covers.push_back({a, b});
  j["covers"] = covers;
  std::vector<bool> h(p.h.begin(), p.h.end());
  j["h"] = h;
  return j;
}

}  // namespace

StepCase matching_step(const Poset& p, const Matching& m, int u) {
  int v = m[u];
  if (v < 0) throw std::invalid_argument("matching_step: vertex unmatched");
  if (p.rank_of(v) < p.rank_of(u)) {
    if (!p.flagged(v))
      throw std::domain_error(
          "matching_step: flagged vertex matched down out of the flagged set");
    return StepCase::down;
  }
  return p.flagged(v) ? StepCase::up_in : StepCase::up_out;
}

MatchingEngine::MatchingEngine(Poset poset, XMode x, Policy policy,
                               const BruhatInterval* group, bool inject_fault)
    : p_(std::move(poset)),
      x_(x),
      policy_(policy),
      group_(group),
      fault_(inject_fault) {
  if (!p_.flagged(p_.min_vertex()) || !p_.flagged(p_.max_vertex()))
    throw std::invalid_argument("engine: minimum and maximum must be flagged");
  if (policy_ == Policy::prefer_left_mult && group_ == nullptr)
    throw std::invalid_argument("engine: prefer_left_mult needs group data");
}

const std::vector<Matching>& MatchingEngine::matchings_for(int top) {
  auto it = hsm_.find(top);
  if (it != hsm_.end()) return it->second;
  VertexSet dom = VertexSet::down_set(p_, top);
  std::vector<Matching> ms;
  if (policy_ == Policy::all_agree) {
    ms = h_special_matchings(p_, dom);
  } else if (policy_ == Policy::prefer_left_mult) {
    // lambda_s for the lowest left descent of the top element.
    CoxeterSystem& sys = *group_->sys;
    ElemRef w = group_->element(top);
    Gen s = Gen(std::countr_zero(sys.left_descents(w)));
    Matching m(p_.size(), -1);
    for (int v : dom.list) {
      int img = group_->index_of(sys.mult_gen(group_->element(v), s,
                                              Side::left));
      if (img < 0 || !dom.contains(img))
        throw std::logic_error("engine: left multiplication left the domain");
      m[v] = img;
    }
    ms.push_back(std::move(m));
  } else {
    auto m = first_h_special_matching(p_, dom);
    if (m) ms.push_back(std::move(*m));
  }
  if (ms.empty())
    throw std::domain_error(
        "engine: a subposet top admits no H-special matching; the input "
        "poset is not a quotient lower interval");
  return hsm_.emplace(top, std::move(ms)).first->second;
}

PolyZ MatchingEngine::step_value(int u, int top, const Matching& m) {
  int mtop = m[top];
  switch (matching_step(p_, m, u)) {
    case StepCase::down:
      return R(m[u], mtop);
    case StepCase::up_in:
      return q_minus_1() * R(u, mtop) + R(m[u], mtop).shifted(1);
    case StepCase::up_out:
      return (fault_ ? q_minus_1() : x_factor(x_)) * R(u, mtop);
  }
  throw std::logic_error("unreachable");
}

const PolyZ& MatchingEngine::R(int u, int top) {
  auto key = std::make_pair(u, top);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  PolyZ val;
  if (u == top) {
    val = PolyZ::one();
  } else if (!p_.leq(u, top)) {
    val = PolyZ::zero();
  } else {
    const auto& ms = matchings_for(top);
    val = step_value(u, top, ms[0]);
    for (size_t k = 1; k < ms.size(); ++k) {
      PolyZ other = step_value(u, top, ms[k]);
      if (other != val) {
        nlohmann::json dump;
        dump["poset"] = poset_json(p_.data());
        dump["u"] = u;
        dump["top"] = top;
        dump["matching_a"] = ms[0];
        dump["matching_b"] = ms[k];
        dump["value_a"] = coeff_strings(val);
        dump["value_b"] = coeff_strings(other);
        throw AgreementFailure(
            "two H-special matchings disagree on R(u, top)", dump.dump(2));
      }
    }
  }
  return memo_.emplace(key, std::move(val)).first->second;
}

RTable MatchingEngine::run() {
  RTable t;
  t.top = p_.max_vertex();
  for (int u = 0; u < p_.size(); ++u)
    if (p_.flagged(u) && p_.leq(u, t.top)) t.rows[u] = R(u, t.top);
  t.values = memo_;
  return t;
}

bool matching_calculates(KLContext& ctx, const BruhatInterval& iv,
                         const Matching& m, bool inject_fault) {
  int top = iv.size() - 1;
  ElemRef w = iv.element(top);
  ElemRef mw = iv.element(m[top]);
  PolyZ qm1 = q_minus_1();
  for (int uv = 0; uv < iv.size(); ++uv) {
    if (!iv.poset.flagged(uv)) continue;
    ElemRef u = iv.element(uv);
    PolyZ rhs;
    switch (matching_step(iv.poset, m, uv)) {
      case StepCase::down:
        rhs = ctx.R(iv.element(m[uv]), mw);
        break;
      case StepCase::up_in:
        rhs = qm1 * ctx.R(u, mw) + ctx.R(iv.element(m[uv]), mw).shifted(1);
        break;
      case StepCase::up_out:
        rhs = (inject_fault ? qm1 : x_factor(ctx.xmode())) * ctx.R(u, mw);
        break;
    }
    if (ctx.R(u, w) != rhs) return false;
  }
  return true;
}

bool transfer_check(const AbstractPoset& p, const AbstractPoset& q, XMode x) {
  Poset pp(p), qq(q);
  auto iso = find_isomorphism(pp, qq, true);
  if (!iso)
    throw std::invalid_argument(
        "transfer_check: no flag-preserving isomorphism");
  RTable tp = MatchingEngine(pp, x, Policy::first).run();
  RTable tq = MatchingEngine(qq, x, Policy::first).run();
  for (auto& [u, poly] : tp.rows) {
    auto it = tq.rows.find((*iso)[u]);
    if (it == tq.rows.end() || it->second != poly) return false;
  }
  return tp.rows.size() == tq.rows.size();
}

}  // namespace coxkl
