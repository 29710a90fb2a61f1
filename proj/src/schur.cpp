#include "lsc/schur.hpp"

#include <algorithm>

namespace lsc {

Quadruple Quadruple::of(Weight l1, Weight l2, Weight l3, Weight l4) {
  for (const Weight* w : {&l1, &l2, &l3, &l4})
    if (!w->dominant() || !w->integral())
      fail(Errc::NotDominant, "quadruple weights must be dominant integral");
  if (l1 + l2 != l3 + l4) fail(Errc::SumMismatch, "l1 + l2 must equal l3 + l4");
  return Quadruple{std::move(l1), std::move(l2), std::move(l3), std::move(l4)};
}

bool star_hypothesis(const RootDatum& g, const Quadruple& q) {
  if (!g.finite_type()) fail(Errc::NotFiniteType, "hypothesis quantifies over positive roots");
  for (const Weight* w : {&q.l1, &q.l2, &q.l3, &q.l4}) g.check_weight(*w);
  if (q.l1 + q.l2 != q.l3 + q.l4) fail(Errc::SumMismatch, "quadruple sums differ");
  auto abs = [](Rat x) { return x < Rat(0) ? -x : x; };
  bool holds = true;
  for (const Weight& alpha : positive_roots(g)) {
    Rat p1 = pair_coroot(g, q.l1, alpha), p2 = pair_coroot(g, q.l2, alpha);
    Rat p3 = pair_coroot(g, q.l3, alpha), p4 = pair_coroot(g, q.l4, alpha);
    bool abs_form = abs(p1 - p2) <= abs(p3 - p4);
    bool min_form = std::min(p3, p4) <= std::min(p1, p2);
    if (abs_form != min_form)
      fail(Errc::InvariantBroken, "the two hypothesis forms disagree at " + alpha.to_string());
    holds &= abs_form;
  }
  return holds;
}

TransferCertificate transfer_sigma(const RootDatum& g, const Quadruple& q,
                                   const std::vector<int>& indices) {
  std::set<int> dup(indices.begin(), indices.end());
  if (dup.size() != indices.size())
    fail(Errc::DuplicateIndices, "transfer indices must be distinct");
  SubdiagramReport sub = subdiagram_classify(g, indices);
  if (!sub.connected || !sub.ade)
    fail(Errc::HypothesisViolated, "indices must span a connected A/D/E subdiagram");

  auto ones = [](const std::vector<int>& idx) {
    std::vector<std::pair<int, long long>> f;
    for (int i : idx) f.emplace_back(i, 1);
    return Monomial::of(std::move(f));
  };
  if (!monomial_mu_dominant(g, q.l4, q.l3, ones(indices)))
    fail(Errc::HypothesisViolated,
         "the forward monomial is not nonzero and l3-dominant from shape l4");
  if (!star_hypothesis(g, q)) fail(Errc::HypothesisViolated, "star hypothesis fails");

  const size_t t = indices.size();
  if (t > 8) fail(Errc::BudgetExceeded, "permutation search over too many indices");
  std::vector<int> pos(t);
  for (size_t p = 0; p < t; ++p) pos[p] = static_cast<int>(p);
  do {
    std::vector<int> reordered(t);
    for (size_t p = 0; p < t; ++p) reordered[p] = indices[pos[p]];
    Monomial m = ones(reordered);
    if (monomial_mu_dominant(g, q.l2, q.l1, m)) return {pos, m};
  } while (std::next_permutation(pos.begin(), pos.end()));
  // Unreachable when the preconditions hold; reaching it would be a
  // counterexample to the transfer statement.
  fail(Errc::InvariantBroken, "no permutation satisfies the transferred criterion");
}

SupportTransferReport support_transfer(const RootDatum& g, const Quadruple& q,
                                       const std::vector<int>& beta_support,
                                       ScanOptions opts) {
  std::set<int> dup(beta_support.begin(), beta_support.end());
  if (dup.size() != beta_support.size())
    fail(Errc::BadSupport, "support indices must be distinct");
  SubdiagramReport sub = subdiagram_classify(g, beta_support);
  if (!sub.ade) fail(Errc::BadSupport, "support must be a union of A/D/E components");
  if (!star_hypothesis(g, q)) fail(Errc::HypothesisViolated, "star hypothesis fails");

  Weight beta = Weight::zero(g.rank());
  for (int i : beta_support) beta = beta + g.simple_root(i);
  SupportTransferReport rep;
  rep.nu = q.total() - beta;

  rep.mult34 = rep.nu.dominant() ? tensor_multiplicity(g, q.l3, q.l4, rep.nu, opts) : 0;
  if (rep.mult34 == 0) {
    rep.vacuous = true;
    rep.holds = true;
    return rep;
  }

  // Transfer componentwise: operators on mutually orthogonal index sets
  // commute, so the inequality families decouple.
  for (const SubdiagramComponent& comp : sub.components) {
    // Find some ordering of this component that is nonzero and l3-dominant
    // from shape l4; one exists whenever the multiplicity is positive.
    std::vector<int> order = comp.nodes;
    std::sort(order.begin(), order.end());
    bool found = false;
    do {
      std::vector<std::pair<int, long long>> f;
      for (int i : order) f.emplace_back(i, 1);
      Monomial m = Monomial::of(std::move(f));
      if (monomial_mu_dominant(g, q.l4, q.l3, m)) {
        found = true;
        rep.certificates.push_back(transfer_sigma(g, q, order).reordered);
        break;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    if (!found)
      fail(Errc::InvariantBroken,
           "positive multiplicity without a monomial witness on a component");
  }

  rep.mult12 = tensor_multiplicity(g, q.l1, q.l2, rep.nu, opts);
  rep.holds = rep.mult12 > 0;
  return rep;
}

SchurReport full_schur_check(const RootDatum& g, const Quadruple& q, ScanOptions opts) {
  if (!g.finite_type()) fail(Errc::NotFiniteType, "full comparison needs finite type");
  SchurReport rep;
  rep.d12 = decompose(g, q.l1, q.l2, opts);
  rep.d34 = decompose(g, q.l3, q.l4, opts);
  for (const auto& [nu, c] : rep.d12.mult) rep.table[nu].first = c;
  for (const auto& [nu, c] : rep.d34.mult) rep.table[nu].second = c;
  for (const auto& [nu, cc] : rep.table)
    if (cc.second > cc.first) rep.violations.push_back(nu);
  return rep;
}

}  // namespace lsc
