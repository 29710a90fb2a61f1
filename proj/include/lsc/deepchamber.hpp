#pragma once

#include "lsc/schur.hpp"

namespace lsc {

// Translate of the Weyl polytope of `shape` by `base`: the convex hull of
// { base + w(shape) : w in W }. Vertices are materialized on demand.
struct ShiftedWeylPolytope {
  Weight base, shape;
};

std::vector<Weight> polytope_vertices(const RootDatum& g, const ShiftedWeylPolytope& p);

// lambda + w mu dominant for every Weyl element; equivalently the shifted
// polytope of (lambda, mu) lies in the closed fundamental chamber.
bool is_deep(const RootDatum& g, const Weight& lambda, const Weight& mu);

// Membership by the dominance characterization: x lies in the polytope iff
// the dominant representative of x - base is below shape in the rational
// dominance cone. Rational (non-integral) points are admitted.
bool polytope_contains_point(const RootDatum& g, const ShiftedWeylPolytope& p,
                             const Weight& x);

// P_{l3,l4} inside P_{l1,l2}, decided vertex by vertex.
bool polytope_contained(const RootDatum& g, const Quadruple& q);

// DOT export of the vertex graph: nodes are orbit translates, edges join a
// vertex to its simple reflections and carry the edge length w nu (beta^vee).
std::string polytope_dot(const RootDatum& g, const ShiftedWeylPolytope& p);

// w nu (beta^vee) for a simple root index beta with l(s_beta w) = l(w) + 1.
long long edge_beta_length(const RootDatum& g, const WeylWord& w, int beta,
                           const Weight& nu);

// Successive lowering along a word, first letter applied first.
std::optional<LSPath> apply_word(const RootDatum& g, const Weight& shape,
                                 const std::vector<int>& word);
std::optional<LSPath> apply_word_to_path(const RootDatum& g, const LSPath& start,
                                         const std::vector<int>& word);

struct LiftReport {
  bool applicable_primed = false;
  bool applicable_lifted = false;
  bool distinct_primed = false;
  bool distinct_lifted = false;
  bool pass = false;
};

// Replays the lifting statement at lambda = lambda' + mu: a word applicable
// at lambda' stays applicable at lambda, and words with distinct results at
// lambda' stay distinct at lambda.
LiftReport lifting_check(const RootDatum& g, const Weight& lambda_primed, const Weight& mu,
                         const std::vector<int>& word, const std::vector<int>& word2);

// For lambda deep past mu, the product decomposes weight by weight:
// every nu in the support of V(mu) contributes V(lambda + nu) with the
// weight-space multiplicity. Refuses when the deep condition fails.
Decomposition deep_decompose(const RootDatum& g, const Weight& lambda, const Weight& mu);

// Under the star hypothesis and both pairs deep, verifies the polytope
// containment. A false return on valid preconditions is a counterexample
// to a proved statement and is treated as fatal by the scan drivers.
bool deep_star_containment(const RootDatum& g, const Quadruple& q);

struct DemazureContainment {
  bool antecedent = false;  // word from the extremal element stays in B_w(l4)
  bool conclusion = false;  // the same word stays in B_w(l2)
  bool pass = false;        // antecedent implies conclusion on this instance
};

// Replays the containment observation for Demazure subcrystals along
// lambda2 = lambda4 + dominant.
DemazureContainment demazure_word_containment(const RootDatum& g, const Weight& lambda2,
                                              const Weight& lambda4, const WeylWord& w,
                                              const std::vector<int>& word);

}  // namespace lsc
