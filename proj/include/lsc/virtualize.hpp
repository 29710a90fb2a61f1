#pragma once

#include "lsc/components.hpp"

namespace lsc {

// Realization of a crystal for `child` inside a simply-laced `parent`
// crystal: psi maps each child node to a fiber of parent nodes (pairwise
// orthogonal, jointly covering the parent diagram) and gamma holds the
// scaling factors. Construction checks the structural fiber conditions and
// then self-validates against the child character oracles on a battery of
// small highest weights; a folding that fails either check is rejected.
class Folding {
 public:
  static Folding of(RootDatum child, RootDatum parent, std::vector<std::vector<int>> psi,
                    std::vector<long long> gamma,
                    std::vector<Weight> validation_battery = {},
                    long long validation_budget = 200000);

  // Shipped tables for the classical realizations: B_n inside D_{n+1},
  // C_n inside A_{2n-1}, F4 inside E6, G2 inside D4.
  static Folding standard(const std::string& child_type);

  // Trivial folding of a simply-laced type onto itself.
  static Folding identity(const RootDatum& g);

  const RootDatum& child() const { return child_; }
  const RootDatum& parent() const { return parent_; }
  const std::vector<int>& fiber(int i) const { return psi_[i]; }
  long long gamma(int i) const { return gamma_[i]; }
  const std::vector<std::vector<int>>& psi() const { return psi_; }
  const std::vector<long long>& gammas() const { return gamma_; }

 private:
  Folding(RootDatum child, RootDatum parent, std::vector<std::vector<int>> psi,
          std::vector<long long> gamma)
      : child_(std::move(child)),
        parent_(std::move(parent)),
        psi_(std::move(psi)),
        gamma_(std::move(gamma)) {}

  RootDatum child_, parent_;
  std::vector<std::vector<int>> psi_;
  std::vector<long long> gamma_;
};

// Element of the virtual crystal: a parent path tagged with its child shape.
struct VirtualElement {
  LSPath carrier;
  Weight child_shape;

  bool operator==(const VirtualElement& o) const { return carrier == o.carrier; }
  std::strong_ordering operator<=>(const VirtualElement& o) const {
    return carrier <=> o.carrier;
  }
};

// Embedded highest weight: coordinate gamma_i * lambda(alpha_i^vee) on every
// parent node of the fiber of i.
Weight virtualize_weight(const Folding& f, const Weight& child_lambda);

VirtualElement virtual_highest(const Folding& f, const Weight& child_lambda);

// Virtual operators: the product of the parent operators over the fiber,
// each raised to the scaling factor. Absent when any factor is absent.
std::optional<VirtualElement> v_f(const Folding& f, const VirtualElement& x, int i);
std::optional<VirtualElement> v_e(const Folding& f, const VirtualElement& x, int i);

// Scaled string data; the parent values must be constant on the fiber and
// divisible by the scaling factor, otherwise the folding data is broken.
long long v_epsilon(const Folding& f, const VirtualElement& x, int i);
long long v_phi(const Folding& f, const VirtualElement& x, int i);
Weight child_weight(const Folding& f, const VirtualElement& x);

struct VirtualCrystal {
  std::vector<VirtualElement> nodes;
  std::vector<std::vector<int>> f_edges, e_edges;  // -1 encodes absent
  std::vector<Weight> wt;                           // child weights
  std::vector<std::vector<long long>> eps, phi;     // child string data

  int size() const { return static_cast<int>(nodes.size()); }
};

// Closure of the embedded highest element under the virtual lowering
// operators, with the same determinism contract as the direct closure.
VirtualCrystal virtual_generate(const Folding& f, const Weight& child_lambda,
                                GenOptions opts = {});

// Closed form for the child string position of a nonzero lowering monomial,
// evaluated on the expanded parent word with c_u = b_u gamma_{i_u}. The
// value is computed at every fiber position and must agree across the fiber.
long long folded_epsilon_closed_form(const Folding& f, const Weight& child_lambda,
                                     const Monomial& m, size_t r);

// Tensor component certified through the folded inequalities: child-side
// nonvanishing for lambda, folded string bounds for mu.
std::optional<Weight> folded_component_from_monomial(const Folding& f, const Weight& lambda,
                                                     const Weight& mu, const Monomial& m);

// Decomposition of V(lambda) (x) V(mu) for the child type, computed entirely
// inside the virtual crystal.
Decomposition virtual_decompose(const Folding& f, const Weight& lambda, const Weight& mu,
                                GenOptions opts = {});

}  // namespace lsc
