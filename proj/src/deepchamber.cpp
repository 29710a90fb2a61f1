#include "lsc/deepchamber.hpp"

namespace lsc {

std::vector<Weight> polytope_vertices(const RootDatum& g, const ShiftedWeylPolytope& p) {
  std::vector<Weight> out;
  for (const Weight& w : weyl_orbit(g, p.shape)) out.push_back(p.base + w);
  return out;
}

bool is_deep(const RootDatum& g, const Weight& lambda, const Weight& mu) {
  if (!g.finite_type()) fail(Errc::NotFiniteType, "deep condition needs finite type");
  g.check_weight(lambda);
  g.check_weight(mu);
  if (!lambda.dominant() || !mu.dominant() || !lambda.integral() || !mu.integral())
    fail(Errc::NotDominant, "deep condition needs dominant integral weights");
  for (const Weight& wmu : weyl_orbit(g, mu))
    if (!(lambda + wmu).dominant()) return false;
  return true;
}

bool polytope_contains_point(const RootDatum& g, const ShiftedWeylPolytope& p,
                             const Weight& x) {
  if (!g.finite_type()) fail(Errc::NotFiniteType, "membership test needs finite type");
  g.check_weight(p.base);
  g.check_weight(p.shape);
  g.check_weight(x);
  if (!p.shape.dominant()) fail(Errc::NotDominant, "polytope shape must be dominant");
  Weight rep = g.dominant_representative(x - p.base).first;
  return dominance_leq(g, rep, p.shape, Cone::NonnegRationals);
}

bool polytope_contained(const RootDatum& g, const Quadruple& q) {
  ShiftedWeylPolytope big{q.l1, q.l2};
  for (const Weight& v : polytope_vertices(g, ShiftedWeylPolytope{q.l3, q.l4}))
    if (!polytope_contains_point(g, big, v)) return false;
  return true;
}

std::string polytope_dot(const RootDatum& g, const ShiftedWeylPolytope& p) {
  std::set<Weight> orbit_set = weyl_orbit(g, p.shape);
  std::vector<Weight> orbit(orbit_set.begin(), orbit_set.end());
  std::map<Weight, int> id;
  for (int k = 0; k < static_cast<int>(orbit.size()); ++k) id[orbit[k]] = k;

  std::string out = "graph weyl_polytope {\n";
  for (int k = 0; k < static_cast<int>(orbit.size()); ++k)
    out += "  v" + std::to_string(k) + " [label=\"" + (p.base + orbit[k]).to_string() +
           "\"];\n";
  for (int k = 0; k < static_cast<int>(orbit.size()); ++k) {
    for (int i = 0; i < g.rank(); ++i) {
      // descending edges only, so each polytope edge prints once; the label
      // is the beta-length of [w nu, s_beta w nu]
      if (!(orbit[k][i] > Rat(0))) continue;
      Weight other = g.reflect(i, orbit[k]);
      out += "  v" + std::to_string(k) + " -- v" + std::to_string(id.at(other)) +
             " [label=\"" + std::to_string(i + 1) + ":" + orbit[k][i].to_string() +
             "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

long long edge_beta_length(const RootDatum& g, const WeylWord& w, int beta,
                           const Weight& nu) {
  g.check_index(beta);
  WeylWord sw;
  sw.letters.push_back(beta);
  sw.letters.insert(sw.letters.end(), w.letters.begin(), w.letters.end());
  if (weyl_length(g, sw) != weyl_length(g, w) + 1)
    fail(Errc::LengthConditionFailed, "s_beta w must lengthen w");
  return g.apply(w, nu)[beta].as_integer();
}

std::optional<LSPath> apply_word_to_path(const RootDatum& g, const LSPath& start,
                                         const std::vector<int>& word) {
  LSPath x = start;
  for (int i : word) {
    auto y = f_op(g, x, i);
    if (!y) return std::nullopt;
    x = std::move(*y);
  }
  return x;
}

std::optional<LSPath> apply_word(const RootDatum& g, const Weight& shape,
                                 const std::vector<int>& word) {
  return apply_word_to_path(g, LSPath::straight(g, shape), word);
}

LiftReport lifting_check(const RootDatum& g, const Weight& lambda_primed, const Weight& mu,
                         const std::vector<int>& word, const std::vector<int>& word2) {
  Weight lambda = lambda_primed + mu;
  for (const Weight& w : {lambda_primed, mu, lambda})
    if (!w.dominant() || !w.integral())
      fail(Errc::NotDominant, "lifting needs dominant integral weights");

  LiftReport rep;
  auto p1 = apply_word(g, lambda_primed, word);
  auto q1 = apply_word(g, lambda_primed, word2);
  auto p2 = apply_word(g, lambda, word);
  auto q2 = apply_word(g, lambda, word2);

  rep.applicable_primed = p1.has_value();
  rep.applicable_lifted = p2.has_value();
  rep.distinct_primed = p1 && q1 && *p1 != *q1;
  rep.distinct_lifted = p2 && q2 && *p2 != *q2;

  bool lift_ok = !rep.applicable_primed || rep.applicable_lifted;
  bool distinct_ok = !rep.distinct_primed || rep.distinct_lifted;
  rep.pass = lift_ok && distinct_ok;
  return rep;
}

Decomposition deep_decompose(const RootDatum& g, const Weight& lambda, const Weight& mu) {
  if (!is_deep(g, lambda, mu))
    fail(Errc::NotDeep, "the weight-by-weight formula needs the deep condition");
  Decomposition d;
  d.lambda = lambda;
  d.mu = mu;
  for (const auto& [nu, m] : freudenthal(g, mu)) d.mult[lambda + nu] = m;
  return d;
}

bool deep_star_containment(const RootDatum& g, const Quadruple& q) {
  if (!star_hypothesis(g, q)) fail(Errc::HypothesisViolated, "star hypothesis fails");
  if (!is_deep(g, q.l1, q.l2) || !is_deep(g, q.l3, q.l4))
    fail(Errc::HypothesisViolated, "both pairs must be deep");
  return polytope_contained(g, q);
}

DemazureContainment demazure_word_containment(const RootDatum& g, const Weight& lambda2,
                                              const Weight& lambda4, const WeylWord& w,
                                              const std::vector<int>& word) {
  Weight diff = lambda2 - lambda4;
  if (!diff.dominant() || !diff.integral() || !lambda4.dominant() || !lambda4.integral())
    fail(Errc::NotDominantDifference, "lambda2 - lambda4 must be dominant integral");

  DemazureContainment rep;
  auto dem4 = demazure_subcrystal(g, lambda4, w);
  auto from4 = apply_word_to_path(g, extremal_element(g, lambda4, w), word);
  rep.antecedent = from4 && dem4.count(*from4) == 1;
  if (rep.antecedent) {
    auto dem2 = demazure_subcrystal(g, lambda2, w);
    auto from2 = apply_word_to_path(g, extremal_element(g, lambda2, w), word);
    rep.conclusion = from2 && dem2.count(*from2) == 1;
  }
  rep.pass = !rep.antecedent || rep.conclusion;
  return rep;
}

}  // namespace lsc
