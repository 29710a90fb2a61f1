#pragma once

#include "lsc/tensor.hpp"

namespace lsc {

// Product of lowering operators f_{i_1}^{b_1} ... f_{i_t}^{b_t} with pairwise
// distinct indices, applied rightmost factor first.
struct Monomial {
  std::vector<std::pair<int, long long>> factors;

  static Monomial of(std::vector<std::pair<int, long long>> factors);

  size_t length() const { return factors.size(); }
  std::vector<int> indices() const;
  Weight root_sum(const RootDatum& g) const;  // sum of b_p alpha_{i_p}
  std::string to_string() const;
};

// Inequality criterion for the monomial applied to the straight path of
// shape lambda to be nonzero: lambda(alpha_{i_k}^vee) >= b_k +
// sum_{s>k} b_s a_{i_k,i_s} for every k. Valid over any symmetrizable
// Cartan matrix; in finite type it agrees with operator replay.
bool monomial_nonzero(const RootDatum& g, const Weight& lambda, const Monomial& m);

// Closed form for the string position of a nonzero monomial element in
// simply-laced type: eps_{i_r} = max{0, b_r + sum_{s<r} b_s a_{i_s,i_r}},
// and eps_j = 0 for colors outside the support.
long long epsilon_closed_form(const RootDatum& g, const Monomial& m, size_t r);
long long epsilon_closed_form_color(const RootDatum& g, const Monomial& m, int color);

// x = m applied to the straight path of shape `shape` is nonzero and
// mu-dominant, decided purely by the inequality families (simply-laced).
bool monomial_mu_dominant(const RootDatum& g, const Weight& shape, const Weight& mu,
                          const Monomial& m);

// When the inequalities hold, lambda + mu - sum b_p alpha_{i_p} carries a
// certified component of V(lambda) (x) V(mu); absent otherwise.
std::optional<Weight> component_from_monomial(const RootDatum& g, const Weight& lambda,
                                              const Weight& mu, const Monomial& m);

// For regular dominant lambda, mu and any set S of simple roots,
// lambda + mu - sum_{i in S} alpha_i is a component; the certificate is the
// ascending-order monomial with all multiplicities one.
Weight distinct_simple_sum_component(const RootDatum& g, const Weight& lambda,
                                     const Weight& mu, const std::vector<int>& indices,
                                     Monomial* certificate = nullptr);

// nu is a dominant representative of lambda + w mu for some Weyl element w.
bool is_prv(const RootDatum& g, const Weight& nu, const Weight& lambda, const Weight& mu);

// Bounded search for non-finite Weyl groups. `false` means no expression was
// found within the radius; it is not a proof of absence.
bool prv_search_bounded(const RootDatum& g, const Weight& nu, const Weight& lambda,
                        const Weight& mu, int radius);

struct KostantComponent {
  Weight nu;
  long long mult = 0;
  long long dim = 0;
  bool prv = false;
  bool simple_sum_certified = false;
};

struct KostantReport {
  Weight two_rho;
  std::vector<KostantComponent> components;
  std::vector<Weight> missing;  // dominant nu <= 2rho absent from the product
  std::vector<Weight> extra;    // components not <= 2rho (never expected)
  bool support_match = false;
  bool dim_ok = false;
};

// Decomposes V(rho) (x) V(rho) and compares its support with the dominant
// weights below 2rho.
KostantReport kostant_scan(const RootDatum& g, ScanOptions opts = {}, int max_rank = 4);

struct WahlReport {
  bool conditions_hold = false;           // the two triple conditions
  bool holds = false;                     // conditions plus a witness ordering
  Weight component;                       // lambda + mu - N beta when holds
  std::vector<int> s_lambda, s_mu, f_beta;
  std::vector<Monomial> witnesses;        // one; two with distinct eps profiles
                                          // when beta is not simple
  std::vector<std::vector<long long>> witness_eps;
};

// Wahl triple check: S_lambda and S_mu inside F_beta and lambda+mu-N beta
// dominant, with replayable monomial witnesses. beta must be a positive root
// that is a sum of distinct simple roots.
WahlReport wahl_check(const RootDatum& g, const Weight& lambda, const Weight& mu,
                      const Weight& beta, long long N);

// Component certified by coordinatewise min bounds: k_r <= min{lambda3_i,
// lambda4_i} yields lambda3 + lambda4 - sum k_r alpha_{i_r}.
Weight min_pair_component(const RootDatum& g, const Weight& lambda3, const Weight& lambda4,
                          const std::vector<std::pair<int, long long>>& pairs);

}  // namespace lsc
