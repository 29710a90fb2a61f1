#include "lsc/json_io.hpp"

namespace lsc {

Json weight_to_json(const Weight& w) {
  Json out = Json::array();
  for (int i = 0; i < w.rank(); ++i) {
    if (w[i].is_integer())
      out.push_back(w[i].num());
    else
      out.push_back(w[i].to_string());
  }
  return out;
}

Weight weight_from_json(const Json& j, int expected_rank) {
  if (!j.is_array()) fail(Errc::ParseError, "weight must be an array");
  std::vector<Rat> c;
  for (const auto& x : j) {
    if (x.is_number_integer())
      c.emplace_back(x.get<long long>());
    else if (x.is_string())
      c.push_back(Rat::parse(x.get<std::string>()));
    else
      fail(Errc::ParseError, "weight entries must be integers or rational strings");
  }
  if (expected_rank >= 0 && static_cast<int>(c.size()) != expected_rank)
    fail(Errc::ParseError, "weight rank mismatch");
  return Weight(std::move(c));
}

Json gcm_to_json(const RootDatum& g) {
  Json out;
  out["type"] = g.label();
  Json m = Json::array();
  for (int i = 0; i < g.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < g.rank(); ++j) row.push_back(g.a(i, j));
    m.push_back(row);
  }
  out["matrix"] = m;
  return out;
}

RootDatum gcm_from_json(const Json& j) {
  if (j.is_string()) return RootDatum::from_type(j.get<std::string>());
  if (j.contains("matrix")) {
    std::vector<std::vector<long long>> m;
    for (const auto& row : j.at("matrix")) {
      m.emplace_back();
      for (const auto& x : row) m.back().push_back(x.get<long long>());
    }
    return RootDatum::from_matrix(m);
  }
  if (j.contains("type")) return RootDatum::from_type(j.at("type").get<std::string>());
  fail(Errc::ParseError, "root datum needs a 'type' or 'matrix' key");
}

Json decomposition_to_json(const RootDatum& g, const Decomposition& d) {
  Json out;
  out["lambda"] = weight_to_json(d.lambda);
  out["mu"] = weight_to_json(d.mu);
  Json comps = Json::array();
  for (const auto& [nu, c] : d.mult) {
    Json item;
    item["nu"] = weight_to_json(nu);
    item["mult"] = c;
    item["dim"] = weyl_dim(g, nu);
    comps.push_back(item);
  }
  out["components"] = comps;
  out["dim_check"] = d.dim_check(g);
  return out;
}

Json monomial_to_json(const Monomial& m) {
  Json out = Json::array();
  for (const auto& [i, b] : m.factors) {
    Json item;
    item["i"] = i + 1;
    item["b"] = b;
    out.push_back(item);
  }
  return out;
}

Monomial monomial_from_json(const Json& j) {
  std::vector<std::pair<int, long long>> f;
  for (const auto& item : j)
    f.emplace_back(item.at("i").get<int>() - 1, item.at("b").get<long long>());
  return Monomial::of(std::move(f));
}

Json folding_to_json(const Folding& f) {
  Json out;
  out["child"] = gcm_to_json(f.child());
  out["parent"] = gcm_to_json(f.parent());
  Json psi, gamma;
  for (int i = 0; i < f.child().rank(); ++i) {
    Json fiber = Json::array();
    for (int j : f.fiber(i)) fiber.push_back(j + 1);
    psi[std::to_string(i + 1)] = fiber;
    gamma[std::to_string(i + 1)] = f.gamma(i);
  }
  out["psi"] = psi;
  out["gamma"] = gamma;
  return out;
}

Folding folding_from_json(const Json& j) {
  RootDatum child = gcm_from_json(j.at("child"));
  RootDatum parent = gcm_from_json(j.at("parent"));
  std::vector<std::vector<int>> psi(child.rank());
  std::vector<long long> gamma(child.rank(), 0);
  for (const auto& [key, fiber] : j.at("psi").items()) {
    int i = std::stoi(key) - 1;
    if (i < 0 || i >= child.rank()) fail(Errc::ParseError, "psi key out of range");
    for (const auto& x : fiber) psi[i].push_back(x.get<int>() - 1);
  }
  for (const auto& [key, gv] : j.at("gamma").items()) {
    int i = std::stoi(key) - 1;
    if (i < 0 || i >= child.rank()) fail(Errc::ParseError, "gamma key out of range");
    gamma[i] = gv.get<long long>();
  }
  return Folding::of(std::move(child), std::move(parent), std::move(psi), std::move(gamma));
}

}  // namespace lsc
