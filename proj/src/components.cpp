#include "lsc/components.hpp"

#include <algorithm>
#include <set>

namespace lsc {

namespace {

void require_simply_laced(const RootDatum& g, const char* what) {
  if (!g.simply_laced()) fail(Errc::NotSimplyLaced, what);
}

}  // namespace

Monomial Monomial::of(std::vector<std::pair<int, long long>> factors) {
  std::set<int> seen;
  for (const auto& [i, b] : factors) {
    if (!seen.insert(i).second) fail(Errc::DuplicateIndices, "monomial indices must be distinct");
    if (b < 1) fail(Errc::ParseError, "monomial multiplicities must be >= 1");
  }
  Monomial m;
  m.factors = std::move(factors);
  return m;
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  out.reserve(factors.size());
  for (const auto& [i, b] : factors) out.push_back(i);
  return out;
}

Weight Monomial::root_sum(const RootDatum& g) const {
  Weight s = Weight::zero(g.rank());
  for (const auto& [i, b] : factors) s = s + g.simple_root(i) * Rat(b);
  return s;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [i, b] : factors) {
    if (!out.empty()) out += ",";
    out += std::to_string(i + 1) + ":" + std::to_string(b);
  }
  return out;
}

bool monomial_nonzero(const RootDatum& g, const Weight& lambda, const Monomial& m) {
  g.check_weight(lambda);
  if (!lambda.dominant() || !lambda.integral())
    fail(Errc::NotDominant, "nonvanishing criterion needs a dominant integral weight");
  const auto& f = m.factors;
  for (size_t k = 0; k < f.size(); ++k) {
    g.check_index(f[k].first);
    Rat rhs(f[k].second);
    for (size_t s = k + 1; s < f.size(); ++s)
      rhs += Rat(f[s].second * g.a(f[k].first, f[s].first));
    if (lambda[f[k].first] < rhs) return false;
  }
  return true;
}

long long epsilon_closed_form(const RootDatum& g, const Monomial& m, size_t r) {
  require_simply_laced(g, "closed-form string positions need simply-laced type");
  if (r >= m.factors.size()) fail(Errc::PositionOutOfRange, "monomial position " + std::to_string(r));
  long long v = m.factors[r].second;
  for (size_t s = 0; s < r; ++s)
    v += m.factors[s].second * g.a(m.factors[s].first, m.factors[r].first);
  return std::max(0LL, v);
}

long long epsilon_closed_form_color(const RootDatum& g, const Monomial& m, int color) {
  g.check_index(color);
  for (size_t r = 0; r < m.factors.size(); ++r)
    if (m.factors[r].first == color) return epsilon_closed_form(g, m, r);
  return 0;  // distinct indices keep off-support strings untouched
}

bool monomial_mu_dominant(const RootDatum& g, const Weight& shape, const Weight& mu,
                          const Monomial& m) {
  require_simply_laced(g, "monomial dominance criterion needs simply-laced type");
  g.check_weight(mu);
  if (!mu.dominant() || !mu.integral())
    fail(Errc::NotDominant, "dominance target must be dominant integral");
  if (!monomial_nonzero(g, shape, m)) return false;
  for (size_t r = 0; r < m.factors.size(); ++r)
    if (mu[m.factors[r].first] < Rat(epsilon_closed_form(g, m, r))) return false;
  return true;
}

std::optional<Weight> component_from_monomial(const RootDatum& g, const Weight& lambda,
                                              const Weight& mu, const Monomial& m) {
  if (!monomial_mu_dominant(g, lambda, mu, m)) return std::nullopt;
  return lambda + mu - m.root_sum(g);
}

Weight distinct_simple_sum_component(const RootDatum& g, const Weight& lambda,
                                     const Weight& mu, const std::vector<int>& indices,
                                     Monomial* certificate) {
  require_simply_laced(g, "distinct-simple-sum components need simply-laced type");
  if (!lambda.regular_dominant() || !mu.regular_dominant())
    fail(Errc::NotRegular, "both weights must be regular dominant");
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<int, long long>> factors;
  for (int i : sorted) factors.emplace_back(i, 1);
  Monomial m = Monomial::of(std::move(factors));
  auto nu = component_from_monomial(g, lambda, mu, m);
  if (!nu) fail(Errc::InvariantBroken, "regular weights must satisfy the criterion");
  if (certificate) *certificate = m;
  return *nu;
}

bool is_prv(const RootDatum& g, const Weight& nu, const Weight& lambda, const Weight& mu) {
  if (!g.finite_type()) fail(Errc::NotFiniteType, "PRV membership needs finite type");
  for (const Weight& wmu : weyl_orbit(g, mu))
    if (g.dominant_representative(lambda + wmu).first == nu) return true;
  return false;
}

bool prv_search_bounded(const RootDatum& g, const Weight& nu, const Weight& lambda,
                        const Weight& mu, int radius) {
  for (const Weight& wmu : orbit_bounded(g, mu, radius))
    if (!g.finite_type()) {
      // Affine/indefinite weights may not reach a dominant chamber; compare
      // against nu directly along its bounded orbit instead.
      if (orbit_bounded(g, nu, radius).count(lambda + wmu)) return true;
    } else if (g.dominant_representative(lambda + wmu).first == nu) {
      return true;
    }
  return false;
}

KostantReport kostant_scan(const RootDatum& g, ScanOptions opts, int max_rank) {
  if (!g.finite_type()) fail(Errc::NotFiniteType, "scan needs finite type");
  if (g.rank() > max_rank) fail(Errc::BudgetExceeded, "scan rank budget exceeded");

  const Weight rho = g.rho();
  KostantReport rep;
  rep.two_rho = rho + rho;
  Decomposition d = decompose(g, rho, rho, opts);
  rep.dim_ok = d.dim_check(g);

  std::set<Weight> expected;
  for (const Weight& nu : dominant_weights_below(g, rep.two_rho)) expected.insert(nu);

  for (const auto& [nu, c] : d.mult) {
    KostantComponent kc;
    kc.nu = nu;
    kc.mult = c;
    kc.dim = weyl_dim(g, nu);
    kc.prv = is_prv(g, nu, rho, rho);
    if (g.simply_laced()) {
      std::vector<Rat> coords = simple_root_coords(g, rep.two_rho - nu);
      bool zero_one = true;
      std::vector<int> support;
      for (int i = 0; i < g.rank(); ++i) {
        if (coords[i] == Rat(1))
          support.push_back(i);
        else if (coords[i] != Rat(0))
          zero_one = false;
      }
      if (zero_one && !support.empty()) {
        Monomial cert;
        kc.simple_sum_certified =
            distinct_simple_sum_component(g, rho, rho, support, &cert) == nu;
      }
      if (zero_one && support.empty()) kc.simple_sum_certified = nu == rep.two_rho;
    }
    if (!expected.count(nu)) rep.extra.push_back(nu);
    rep.components.push_back(std::move(kc));
  }
  for (const Weight& nu : expected)
    if (d.multiplicity(nu) == 0) rep.missing.push_back(nu);
  rep.support_match = rep.missing.empty() && rep.extra.empty();
  return rep;
}

WahlReport wahl_check(const RootDatum& g, const Weight& lambda, const Weight& mu,
                      const Weight& beta, long long N) {
  require_simply_laced(g, "Wahl triples are checked in simply-laced type");
  if (!g.finite_type()) fail(Errc::NotFiniteType, "Wahl check needs finite type");
  if (N < 1) fail(Errc::ParseError, "N must be >= 1");

  std::vector<Rat> coords = simple_root_coords(g, beta);
  std::vector<int> support;
  for (int i = 0; i < g.rank(); ++i) {
    if (coords[i] == Rat(1))
      support.push_back(i);
    else if (coords[i] != Rat(0))
      fail(Errc::NotDistinctSimpleSum, "beta must be a sum of distinct simple roots");
  }
  if (support.empty()) fail(Errc::NotDistinctSimpleSum, "beta must be nonzero");

  // A multiplicity-free sum of simple roots is a root exactly when its
  // support is connected; cross-check against the root closure.
  bool connected = subdiagram_classify(g, support).connected;
  auto roots = positive_roots(g);
  bool in_closure = std::count(roots.begin(), roots.end(), beta) == 1;
  if (connected != in_closure)
    fail(Errc::InvariantBroken, "support-connectivity criterion disagrees with root closure");
  if (!connected) fail(Errc::NotARoot, "beta support is not connected");

  WahlReport rep;
  for (int i = 0; i < g.rank(); ++i) {
    if (lambda[i] < Rat(N)) rep.s_lambda.push_back(i);
    if (mu[i] < Rat(N)) rep.s_mu.push_back(i);
    Weight diff = beta - g.simple_root(i);
    bool is_root = std::count(roots.begin(), roots.end(), diff) == 1;
    if (!is_root && !diff.is_zero()) rep.f_beta.push_back(i);
  }
  rep.component = lambda + mu - beta * Rat(N);

  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  rep.conditions_hold = subset(rep.s_lambda, rep.f_beta) && subset(rep.s_mu, rep.f_beta) &&
                        rep.component.dominant();
  if (!rep.conditions_hold) return rep;

  if (support.size() > 8) fail(Errc::BudgetExceeded, "witness search over too many orderings");
  std::vector<int> order = support;
  std::vector<Monomial> passing;
  std::vector<std::vector<long long>> profiles;
  do {
    std::vector<std::pair<int, long long>> factors;
    for (int i : order) factors.emplace_back(i, N);
    Monomial m = Monomial::of(std::move(factors));
    if (!monomial_mu_dominant(g, mu, lambda, m)) continue;
    std::vector<long long> prof;
    for (size_t r = 0; r < m.factors.size(); ++r) prof.push_back(epsilon_closed_form(g, m, r));
    passing.push_back(m);
    profiles.push_back(std::move(prof));
  } while (std::next_permutation(order.begin(), order.end()));

  if (passing.empty()) return rep;
  rep.holds = true;
  rep.witnesses.push_back(passing.front());
  rep.witness_eps.push_back(profiles.front());
  if (support.size() > 1) {
    auto color_profile = [&](size_t k) {
      std::vector<long long> per_color(g.rank(), 0);
      for (size_t r = 0; r < passing[k].factors.size(); ++r)
        per_color[passing[k].factors[r].first] = profiles[k][r];
      return per_color;
    };
    std::vector<long long> first = color_profile(0);
    for (size_t k = 1; k < passing.size(); ++k) {
      if (color_profile(k) != first) {
        rep.witnesses.push_back(passing[k]);
        rep.witness_eps.push_back(profiles[k]);
        break;
      }
    }
  }
  return rep;
}

Weight min_pair_component(const RootDatum& g, const Weight& lambda3, const Weight& lambda4,
                          const std::vector<std::pair<int, long long>>& pairs) {
  require_simply_laced(g, "min-pair components need simply-laced type");
  std::set<int> seen;
  Weight nu = lambda3 + lambda4;
  for (const auto& [i, k] : pairs) {
    g.check_index(i);
    if (!seen.insert(i).second) fail(Errc::DuplicateIndices, "indices must be distinct");
    if (k < 0) fail(Errc::MinBoundViolated, "negative multiplicity");
    if (Rat(k) > lambda3[i] || Rat(k) > lambda4[i])
      fail(Errc::MinBoundViolated,
           "k exceeds min of the pairings at index " + std::to_string(i + 1));
    nu = nu - g.simple_root(i) * Rat(k);
  }
  return nu;
}

}  // namespace lsc
