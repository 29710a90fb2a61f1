#include "lsc/tensor.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <thread>

namespace lsc {

namespace {

void require_finite(const RootDatum& g, const char* what) {
  if (!g.finite_type()) fail(Errc::NotFiniteType, what);
}

void require_dominant_integral(const Weight& w, const char* what) {
  if (!w.dominant() || !w.integral()) fail(Errc::NotDominant, what);
}

}  // namespace

bool Decomposition::dim_check(const RootDatum& g) const {
  long long total = 0;
  for (const auto& [nu, c] : mult) total += c * weyl_dim(g, nu);
  return total == weyl_dim(g, lambda) * weyl_dim(g, mu);
}

// --- tensor rule ---------------------------------------------------------------

std::optional<TensorPair> tensor_e(const RootDatum& g, const TensorPair& p, int i) {
  if (phi(p.first, i) >= epsilon(p.second, i)) {
    auto x = e_op(g, p.first, i);
    if (!x) return std::nullopt;
    return TensorPair{std::move(*x), p.second};
  }
  auto y = e_op(g, p.second, i);
  if (!y) return std::nullopt;
  return TensorPair{p.first, std::move(*y)};
}

std::optional<TensorPair> tensor_f(const RootDatum& g, const TensorPair& p, int i) {
  if (phi(p.first, i) > epsilon(p.second, i)) {
    auto x = f_op(g, p.first, i);
    if (!x) return std::nullopt;
    return TensorPair{std::move(*x), p.second};
  }
  auto y = f_op(g, p.second, i);
  if (!y) return std::nullopt;
  return TensorPair{p.first, std::move(*y)};
}

long long pair_epsilon(const RootDatum& g, const TensorPair& p, int i) {
  long long n = 0;
  TensorPair cur = p;
  while (auto next = tensor_e(g, cur, i)) {
    cur = std::move(*next);
    ++n;
  }
  return n;
}

long long pair_phi(const RootDatum& g, const TensorPair& p, int i) {
  long long n = 0;
  TensorPair cur = p;
  while (auto next = tensor_f(g, cur, i)) {
    cur = std::move(*next);
    ++n;
  }
  return n;
}

bool is_lambda_dominant(const RootDatum& g, const LSPath& pi, const Weight& lambda) {
  g.check_weight(lambda);
  require_dominant_integral(lambda, "lambda-dominance needs dominant integral lambda");
  for (int i = 0; i < g.rank(); ++i)
    if (Rat(epsilon(pi, i)) > lambda[i]) return false;
  return true;
}

// --- multiplicity scans ----------------------------------------------------------

namespace {

// Shared scan over B(mu): apply `visit` to every lambda-dominant node.
template <typename Visit>
void scan_dominant_nodes(const CrystalGraph& gr, const Weight& lambda, int jobs,
                         Visit visit) {
  const int n = gr.datum().rank();
  auto admissible = [&](int v) {
    for (int i = 0; i < n; ++i)
      if (Rat(gr.eps(v, i)) > lambda[i]) return false;
    return true;
  };
  if (jobs <= 1 || gr.size() < 1024) {
    for (int v = 0; v < gr.size(); ++v)
      if (admissible(v)) visit(v);
    return;
  }
  std::vector<std::vector<int>> hits(jobs);
  std::vector<std::thread> pool;
  int chunk = (gr.size() + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (int v = w * chunk; v < std::min(gr.size(), (w + 1) * chunk); ++v)
        if (admissible(v)) hits[w].push_back(v);
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& part : hits)
    for (int v : part) visit(v);
}

}  // namespace

long long tensor_multiplicity(const RootDatum& g, const Weight& lambda, const Weight& mu,
                              const Weight& nu, ScanOptions opts) {
  require_finite(g, "tensor multiplicity needs finite type");
  g.check_weight(lambda);
  g.check_weight(mu);
  g.check_weight(nu);
  require_dominant_integral(lambda, "tensor multiplicity needs dominant weights");
  require_dominant_integral(mu, "tensor multiplicity needs dominant weights");
  auto gr = CrystalCache::instance().get(g, mu);
  Weight target = nu - lambda;
  long long count = 0;
  scan_dominant_nodes(*gr, lambda, opts.jobs, [&](int v) {
    if (gr->weight(v) == target) ++count;
  });
  return count;
}

Decomposition decompose(const RootDatum& g, const Weight& lambda, const Weight& mu,
                        ScanOptions opts) {
  require_finite(g, "decomposition needs finite type");
  g.check_weight(lambda);
  g.check_weight(mu);
  require_dominant_integral(lambda, "decomposition needs dominant weights");
  require_dominant_integral(mu, "decomposition needs dominant weights");
  auto gr = CrystalCache::instance().get(g, mu);
  Decomposition d;
  d.lambda = lambda;
  d.mu = mu;
  scan_dominant_nodes(*gr, lambda, opts.jobs,
                      [&](int v) { ++d.mult[lambda + gr->weight(v)]; });
  return d;
}

long long weight_multiplicity(const RootDatum& g, const Weight& mu, const Weight& nu) {
  require_finite(g, "weight multiplicity needs finite type");
  auto gr = CrystalCache::instance().get(g, mu);
  long long count = 0;
  for (int v = 0; v < gr->size(); ++v)
    if (gr->weight(v) == nu) ++count;
  return count;
}

std::map<Weight, long long> weight_support(const RootDatum& g, const Weight& mu) {
  require_finite(g, "weight support needs finite type");
  auto gr = CrystalCache::instance().get(g, mu);
  std::map<Weight, long long> table;
  for (int v = 0; v < gr->size(); ++v) ++table[gr->weight(v)];
  return table;
}

// --- character-level oracles -------------------------------------------------

long long weyl_dim(const RootDatum& g, const Weight& lambda) {
  require_finite(g, "Weyl dimension formula needs finite type");
  require_dominant_integral(lambda, "Weyl dimension formula needs dominant integral weight");
  Weight rho = g.rho();
  Rat dim(1);
  for (const Weight& beta : positive_roots(g))
    dim *= bilinear(g, lambda + rho, beta) / bilinear(g, rho, beta);
  return dim.as_integer();
}

std::vector<Weight> dominant_weights_below(const RootDatum& g, const Weight& mu) {
  require_finite(g, "weight enumeration needs finite type");
  require_dominant_integral(mu, "weight enumeration needs dominant integral weight");
  Weight lowest = g.antidominant_representative(mu);
  std::vector<Rat> cmax = simple_root_coords(g, mu - lowest);
  const int n = g.rank();
  std::vector<long long> box(n);
  for (int i = 0; i < n; ++i) box[i] = cmax[i].as_integer();

  std::vector<Weight> out;
  std::vector<long long> c(n, 0);
  while (true) {
    Weight nu = mu;
    for (int i = 0; i < n; ++i)
      if (c[i] != 0) nu = nu - g.simple_root(i) * Rat(c[i]);
    if (nu.dominant()) out.push_back(nu);
    int k = 0;
    while (k < n && c[k] == box[k]) c[k++] = 0;
    if (k == n) break;
    ++c[k];
  }
  return out;
}

std::map<Weight, long long> freudenthal(const RootDatum& g, const Weight& mu) {
  require_finite(g, "Freudenthal recursion needs finite type");
  require_dominant_integral(mu, "Freudenthal recursion needs dominant integral weight");
  const Weight rho = g.rho();
  const std::vector<Weight> roots = positive_roots(g);

  std::vector<Weight> dominants = dominant_weights_below(g, mu);
  auto height = [&](const Weight& x) {
    std::vector<Rat> c = simple_root_coords(g, x);
    Rat h(0);
    for (const Rat& v : c) h += v;
    return h.as_integer();
  };
  std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
    long long ha = height(mu - a), hb = height(mu - b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  std::map<Weight, long long> dom_mult;
  auto mult_of = [&](const Weight& x) -> long long {
    Weight rep = g.dominant_representative(x).first;
    auto it = dom_mult.find(rep);
    return it == dom_mult.end() ? 0 : it->second;
  };

  Rat top_norm = bilinear(g, mu + rho, mu + rho);
  for (const Weight& nu : dominants) {
    if (nu == mu) {
      dom_mult[mu] = 1;
      continue;
    }
    Rat sum(0);
    long long budget = height(mu - nu);
    for (const Weight& beta : roots) {
      long long hb = height(beta);
      for (long long k = 1; k * hb <= budget; ++k) {
        long long m = mult_of(nu + beta * Rat(k));
        if (m != 0) sum += Rat(m) * bilinear(g, nu + beta * Rat(k), beta);
      }
    }
    Rat denom = top_norm - bilinear(g, nu + rho, nu + rho);
    dom_mult[nu] = (Rat(2) * sum / denom).as_integer();
  }

  std::map<Weight, long long> table;
  for (const auto& [nu, m] : dom_mult) {
    if (m == 0) continue;
    for (const Weight& w : weyl_orbit(g, nu)) table[w] = m;
  }
  return table;
}

// --- cache --------------------------------------------------------------------

CrystalCache& CrystalCache::instance() {
  static CrystalCache cache;
  return cache;
}

std::shared_ptr<const CrystalGraph> CrystalCache::get(const RootDatum& g,
                                                      const Weight& lambda) {
  std::string key = g.key() + "|" + lambda.to_string();
  {
    std::shared_lock lock(mu_);
    auto it = store_.find(key);
    if (it != store_.end()) return it->second;
  }
  auto built = std::make_shared<const CrystalGraph>(generate_crystal(g, lambda));
  std::unique_lock lock(mu_);
  auto [it, fresh] = store_.try_emplace(key, built);
  if (fresh) {
    order_.push_back(key);
    total_nodes_ += built->size();
    while (total_nodes_ > budget_ && order_.size() > 1) {
      auto victim = store_.find(order_.front());
      total_nodes_ -= victim->second->size();
      store_.erase(victim);
      order_.pop_front();
    }
  }
  return it->second;
}

void CrystalCache::set_node_budget(long long nodes) {
  std::unique_lock lock(mu_);
  budget_ = nodes;
}

void CrystalCache::clear() {
  std::unique_lock lock(mu_);
  store_.clear();
  order_.clear();
  total_nodes_ = 0;
}

}  // namespace lsc
