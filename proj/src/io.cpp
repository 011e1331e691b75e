#include "coxkl/io.hpp"

#include <sstream>

namespace coxkl {

using nlohmann::json;

CoxeterMatrix matrix_from_json(const json& j) {
  CoxeterMatrix m;
  if (!j.contains("rank") || !j.contains("labels"))
    throw std::invalid_argument("matrix JSON needs \"rank\" and \"labels\"");
  m.rank = j.at("rank").get<int>();
  m.labels = j.at("labels").get<std::vector<std::vector<unsigned>>>();
  m.validate();
  return m;
}

json matrix_to_json(const CoxeterMatrix& m) {
  return json{{"rank", m.rank}, {"labels", m.labels}};
}

AbstractPoset poset_from_json(const json& j) {
  AbstractPoset p;
  p.n = j.at("n").get<int>();
  p.rank = j.at("rank").get<std::vector<int>>();
  for (const auto& c : j.at("covers"))
    p.covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  for (const auto& b : j.at("h")) p.h.push_back(b.get<bool>() ? 1 : 0);
  return p;
}

json poset_to_json(const AbstractPoset& p) {
  json covers = json::array();
  for (auto [a, b] : p.covers) covers.push_back({a, b});
  std::vector<bool> h(p.h.begin(), p.h.end());
  return json{{"n", p.n}, {"rank", p.rank}, {"covers", covers}, {"h", h}};
}

Matching matching_from_json(const json& j) {
  return Matching(j.at("partner").get<std::vector<int32_t>>());
}

json matching_to_json(const Matching& m) { return json{{"partner", m}}; }

json poly_to_json(const PolyZ& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) {
    if (!c.fits_slong_p())
      throw std::domain_error("poly_to_json: coefficient exceeds int64");
    a.push_back(c.get_si());
  }
  return a;
}

PolyZ poly_from_json(const json& j) {
  std::vector<mpz_class> c;
  for (const auto& v : j) c.emplace_back(v.get<long>());
  return PolyZ(std::move(c));
}

json system_to_json(const SystemCandidate& c, const AxiomReport& r) {
  json axioms;
  const char* prefix = c.right ? "R" : "L";
  for (int k = 0; k < 5; ++k)
    axioms[prefix + std::to_string(k + 1)] = r.axiom[k];
  std::vector<int> J;
  for (Gen g : gens_of(c.J)) J.push_back(g + 1);
  return json{{"kind", c.right ? "right" : "left"},
              {"J", J},
              {"s", c.s + 1},
              {"t", c.t + 1},
              {"dihedral_partner", c.m_st},
              {"axioms", axioms}};
}

json rtable_to_json(const RTable& t) {
  json entries = json::array();
  for (const auto& [u, poly] : t.rows)
    entries.push_back(json{{"u", u}, {"poly", poly_to_json(poly)}});
  return json{{"top", t.top}, {"entries", entries}};
}

std::string poset_to_dot(const AbstractPoset& p, const Matching* matching) {
  std::ostringstream os;
  os << "graph hasse {\n  rankdir=BT;\n"
     << "  node [shape=circle, width=0.18, fixedsize=true, label=\"\"];\n";
  for (int v = 0; v < p.n; ++v) {
    os << "  v" << v;
    if (p.h[v])
      os << " [style=filled, fillcolor=black]";
    else
      os << " [style=solid]";
    os << ";\n";
  }
  for (auto [a, b] : p.covers) {
    os << "  v" << a << " -- v" << b;
    if (matching && (*matching)[a] == b)
      os << " [style=dashed, penwidth=3]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace coxkl
