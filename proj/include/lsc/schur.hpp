#pragma once

#include "lsc/components.hpp"

namespace lsc {

// Four dominant integral weights with lambda1 + lambda2 = lambda3 + lambda4.
struct Quadruple {
  Weight l1, l2, l3, l4;

  static Quadruple of(Weight l1, Weight l2, Weight l3, Weight l4);
  Weight total() const { return l1 + l2; }
};

// For every positive root alpha:
//   |(l1 - l2)(alpha^vee)| <= |(l3 - l4)(alpha^vee)|,
// together with the equivalent min form
//   min{l3(a^vee), l4(a^vee)} <= min{l1(a^vee), l2(a^vee)};
// the two evaluations are asserted to agree root by root.
bool star_hypothesis(const RootDatum& g, const Quadruple& q);

struct TransferCertificate {
  std::vector<int> sigma;  // positions into the input tuple, 0-based
  Monomial reordered;      // multiplicity-one monomial in the transferred order
};

// Given indices spanning a connected A/D/E subdiagram, with the forward
// monomial nonzero and l3-dominant from shape l4, finds the lexicographically
// least permutation making the reordered monomial nonzero and l1-dominant
// from shape l2. Exhaustive over the t! orderings; crystal-free.
TransferCertificate transfer_sigma(const RootDatum& g, const Quadruple& q,
                                   const std::vector<int>& indices);

struct SupportTransferReport {
  Weight nu;                              // lambda - beta
  long long mult34 = 0, mult12 = 0;
  bool vacuous = false;                   // mult34 == 0
  bool holds = false;                     // mult34 > 0 implies mult12 > 0
  std::vector<Monomial> certificates;     // per connected support component
};

// For beta a sum of distinct simple roots over an A/D/E union: positivity of
// lambda - beta in V(l3) (x) V(l4) transfers to V(l1) (x) V(l2), certified
// component by component.
SupportTransferReport support_transfer(const RootDatum& g, const Quadruple& q,
                                       const std::vector<int>& beta_support,
                                       ScanOptions opts = {});

struct SchurReport {
  Decomposition d12, d34;
  std::map<Weight, std::pair<long long, long long>> table;  // nu -> (c12, c34)
  std::vector<Weight> violations;                           // c34 > c12
  bool dominance_holds() const { return violations.empty(); }
};

// Computes both full decompositions and reports every nu whose multiplicity
// decreases; reports facts only.
SchurReport full_schur_check(const RootDatum& g, const Quadruple& q, ScanOptions opts = {});

}  // namespace lsc
