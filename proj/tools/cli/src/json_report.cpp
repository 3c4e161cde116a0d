#include "isob_cli/json_report.hpp"

#include "isob/repthy.hpp"

namespace isob::cli {

namespace {

Json strings(const std::vector<std::string>& lines) {
  Json out = Json::array();
  for (const auto& s : lines) out.push_back(s);
  return out;
}

Json int_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

Json weights(std::span<const Weight> ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

}  // namespace

Json to_json(const Weight& w) {
  Json out = Json::array();
  for (const auto& c : w.coords) out.push_back(to_string(c));
  return out;
}

Json to_json(const WeightMultiset& set) {
  Json out = Json::array();
  for (const auto& [w, m] : set) out.push_back({{"weight", to_json(w)}, {"multiplicity", m}});
  return out;
}

Json to_json(const RootSystem& rs) {
  Json out;
  out["type"] = rs.type().name();
  out["algebra"] = rs.label();
  out["rank"] = rs.rank();
  out["ambient_dim"] = rs.ambient_dim();
  out["dim"] = to_string(algebra_dim(rs));
  out["weyl_group_order"] = to_string(rs.weyl_group_order());
  out["positive_roots"] = rs.positive_roots().size();
  out["cartan_matrix"] = int_matrix(rs.cartan_matrix());
  out["simple_roots"] = weights(rs.simple_roots());
  out["fundamental_weights"] = weights(rs.fundamental_weights());
  if (rs.rank() > 0) {
    out["highest_root"] = to_json(rs.highest_root());
    const SmallestRep s = smallest_nontrivial_dim(rs);
    out["smallest_rep"] = {{"dim", to_string(s.dim)}, {"fundamental_index", s.index + 1}};
  }
  return out;
}

Json to_json(const SymmetricPair& pair) {
  Json out;
  out["id"] = to_string(pair.id);
  out["g"] = pair.id.kind == PairKind::Complex ? pair.g.label() + " + " + pair.g.label() : pair.g.label();
  out["k"] = pair.k.label();
  out["dims"] = {{"g", to_string(pair.id.kind == PairKind::Complex ? 2 * algebra_dim(pair.g) : algebra_dim(pair.g))},
                 {"k", to_string(algebra_dim(pair.k))},
                 {"p", to_string(pair.dim_p)}};
  if (pair.isotropy_highest) {
    out["highest_weight"] = to_json(*pair.isotropy_highest);
    out["weights"] = to_json(isotropy_weights(pair));
  } else {
    out["highest_weight"] = nullptr;
    out["weights"] = nullptr;
  }
  out["notes"] = strings(pair.notes);
  return out;
}

Json to_json(const ObstructionReport& report) {
  Json out;
  out["pair"] = to_string(report.pair);
  out["verdict"] = to_string(report.verdict);
  out["method"] = to_string(report.method);
  out["dim_p"] = to_string(report.dim_p);
  Json cands = Json::array();
  for (const auto& c : report.candidates) {
    Json j;
    j["weight"] = to_json(c.weight);
    if (c.direction) j["family_direction"] = to_json(*c.direction);
    j["parameter_range"] = c.parameter_range;
    if (c.evidence)
      j["evidence"] = {{"kind", to_string(c.evidence->kind)},
                       {"value", to_string(c.evidence->value)},
                       {"dim_p", to_string(c.evidence->dim_p)}};
    else
      j["evidence"] = nullptr;
    j["eliminated"] = c.eliminated();
    j["detail"] = c.detail;
    cands.push_back(std::move(j));
  }
  out["candidates"] = std::move(cands);
  out["constraints_log"] = strings(report.constraints_log);
  out["notes"] = strings(report.notes);
  if (report.search_bound > 0) out["audit"] = {{"kernel_search_bound", report.search_bound}};
  return out;
}

Json to_json(const ChernPolynomial& c) {
  Json out = Json::array();
  for (const auto& piece : c.pieces) {
    Json terms = Json::object();
    for (const auto& [m, coeff] : piece.terms()) {
      std::string key;
      for (std::size_t i = 0; i < m.size(); ++i) key += (i ? "," : "") + std::to_string(m[i]);
      terms[key] = to_string(coeff);
    }
    out.push_back(std::move(terms));
  }
  return out;
}

Json to_json(const FlatKernelDescription& k) {
  auto cls = [](const CharacteristicClass& c) { return Json{{"name", c.name}, {"degree", c.degree}}; };
  Json out;
  out["n"] = k.n;
  Json gens = Json::array();
  for (const auto& g : k.kernel_generators) gens.push_back(cls(g));
  out["kernel_generators"] = std::move(gens);
  out["euler"] = k.euler ? cls(*k.euler) : Json(nullptr);
  out["euler_square"] = k.euler_square ? cls(*k.euler_square) : Json(nullptr);
  out["notes"] = strings(k.notes);
  return out;
}

}  // namespace isob::cli
