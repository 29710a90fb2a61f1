#pragma once

#include <list>
#include <memory>
#include <shared_mutex>

#include "lsc/pathcrystal.hpp"

namespace lsc {

// Multiplicity table of a tensor product V(lambda) (x) V(mu).
struct Decomposition {
  Weight lambda, mu;
  std::map<Weight, long long> mult;

  long long multiplicity(const Weight& nu) const {
    auto it = mult.find(nu);
    return it == mult.end() ? 0 : it->second;
  }
  // Sum of mult * dim V(nu) against dim V(lambda) * dim V(mu).
  bool dim_check(const RootDatum& g) const;
  bool operator==(const Decomposition& o) const = default;
};

using TensorPair = std::pair<LSPath, LSPath>;

// Raising acts on the first factor when phi(first) >= eps(second); lowering
// when the inequality is strict. Absent encodes 0.
std::optional<TensorPair> tensor_e(const RootDatum& g, const TensorPair& p, int i);
std::optional<TensorPair> tensor_f(const RootDatum& g, const TensorPair& p, int i);

// Operational string positions of a pair (counted applications).
long long pair_epsilon(const RootDatum& g, const TensorPair& p, int i);
long long pair_phi(const RootDatum& g, const TensorPair& p, int i);

// eps_i(pi) <= lambda(alpha_i^vee) for all i.
bool is_lambda_dominant(const RootDatum& g, const LSPath& pi, const Weight& lambda);

struct ScanOptions {
  int jobs = 1;
};

// Number of lambda-dominant elements of B(mu) of weight nu - lambda.
long long tensor_multiplicity(const RootDatum& g, const Weight& lambda, const Weight& mu,
                              const Weight& nu, ScanOptions opts = {});

// Full decomposition by scanning the lambda-dominant elements of B(mu).
Decomposition decompose(const RootDatum& g, const Weight& lambda, const Weight& mu,
                        ScanOptions opts = {});

// Weight multiplicities of V(mu) from the path model.
long long weight_multiplicity(const RootDatum& g, const Weight& mu, const Weight& nu);
std::map<Weight, long long> weight_support(const RootDatum& g, const Weight& mu);

// --- Independent character-level oracles. These share no code with the
// path model: only the root datum. -----------------------------------------

long long weyl_dim(const RootDatum& g, const Weight& lambda);
std::map<Weight, long long> freudenthal(const RootDatum& g, const Weight& mu);

// Dominant weights nu <= mu in dominance order, mu dominant integral.
std::vector<Weight> dominant_weights_below(const RootDatum& g, const Weight& mu);

// --- Crystal graph cache -----------------------------------------------------

// Process-wide store keyed by (canonical Cartan matrix, highest weight),
// bounded by a node budget with oldest-first eviction. Safe for concurrent
// readers with single-writer inserts.
class CrystalCache {
 public:
  static CrystalCache& instance();

  std::shared_ptr<const CrystalGraph> get(const RootDatum& g, const Weight& lambda);
  void set_node_budget(long long nodes);
  void clear();

 private:
  CrystalCache() = default;

  mutable std::shared_mutex mu_;
  long long budget_ = 1LL << 22;
  long long total_nodes_ = 0;
  std::list<std::string> order_;
  std::map<std::string, std::shared_ptr<const CrystalGraph>> store_;
};

}  // namespace lsc
