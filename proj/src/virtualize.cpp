#include "lsc/virtualize.hpp"

#include <algorithm>
#include <set>

namespace lsc {

namespace {

std::vector<Weight> default_battery(const RootDatum& child) {
  std::vector<Weight> battery;
  const int n = child.rank();
  if (n <= 2) {
    // all dominant integral weights with coordinates <= 1
    std::vector<long long> c(n, 0);
    while (true) {
      battery.push_back(Weight(std::vector<Rat>(c.begin(), c.end())));
      int k = 0;
      while (k < n && c[k] == 1) c[k++] = 0;
      if (k == n) break;
      ++c[k];
    }
  } else {
    battery.push_back(Weight::zero(n));
    battery.push_back(child.fundamental_weight(0));
    battery.push_back(child.fundamental_weight(n - 1));
  }
  return battery;
}

}  // namespace

Folding Folding::of(RootDatum child, RootDatum parent, std::vector<std::vector<int>> psi,
                    std::vector<long long> gamma, std::vector<Weight> validation_battery,
                    long long validation_budget) {
  const int n = child.rank();
  if (static_cast<int>(psi.size()) != n || static_cast<int>(gamma.size()) != n)
    fail(Errc::InvariantBroken, "psi and gamma must cover every child node");
  if (!parent.simply_laced()) fail(Errc::InvariantBroken, "parent must be simply laced");

  std::set<int> covered;
  for (int i = 0; i < n; ++i) {
    if (gamma[i] < 1) fail(Errc::InvariantBroken, "scaling factors must be positive");
    if (psi[i].empty()) fail(Errc::InvariantBroken, "empty fiber");
    std::sort(psi[i].begin(), psi[i].end());
    for (int j : psi[i]) {
      parent.check_index(j);
      if (!covered.insert(j).second) fail(Errc::InvariantBroken, "fibers must be disjoint");
    }
    for (int j : psi[i])
      for (int j2 : psi[i])
        if (j != j2 && parent.a(j, j2) != 0)
          fail(Errc::InvariantBroken, "fiber nodes must be mutually orthogonal");
  }
  if (static_cast<int>(covered.size()) != parent.rank())
    fail(Errc::InvariantBroken, "fibers must cover the parent diagram");

  // Fiber-constant row sums compatible with the child Cartan matrix and the
  // scaling factors: a_{k,i} gamma_k = gamma_i sum_{j in psi(i)} a~_{l,j}
  // for every l in psi(k).
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      long long ref = 0;
      bool first = true;
      for (int l : psi[k]) {
        long long s = 0;
        for (int j : psi[i]) s += parent.a(l, j);
        if (first) {
          ref = s;
          first = false;
        } else if (s != ref) {
          fail(Errc::InvariantBroken, "parent rows not constant on fibers");
        }
      }
      if (child.a(k, i) * gamma[k] != gamma[i] * ref)
        fail(Errc::InvariantBroken, "child matrix incompatible with fibers and scalings");
    }
  }

  Folding f(std::move(child), std::move(parent), std::move(psi), std::move(gamma));

  // Mandatory character validation on a battery of small highest weights.
  if (validation_battery.empty()) validation_battery = default_battery(f.child_);
  for (const Weight& lam : validation_battery) {
    GenOptions opts;
    opts.node_budget = validation_budget;
    VirtualCrystal vc = virtual_generate(f, lam, opts);
    if (f.child_.finite_type()) {
      if (vc.size() != weyl_dim(f.child_, lam))
        fail(Errc::SelfValidationFailed,
             "virtual crystal size disagrees with the child dimension at " + lam.to_string());
      std::map<Weight, long long> table;
      for (const Weight& w : vc.wt) ++table[w];
      if (table != freudenthal(f.child_, lam))
        fail(Errc::SelfValidationFailed,
             "virtual character disagrees with the child weight table at " + lam.to_string());
    }
  }
  return f;
}

Folding Folding::standard(const std::string& child_type) {
  if (child_type.size() < 2) fail(Errc::UnsupportedChildType, child_type);
  char fam = child_type[0];
  int n = 0;
  try {
    n = std::stoi(child_type.substr(1));
  } catch (...) {
    fail(Errc::UnsupportedChildType, child_type);
  }

  if (fam == 'B' && n >= 2) {
    RootDatum child = RootDatum::from_type(child_type);
    RootDatum parent = RootDatum::from_type("D" + std::to_string(n + 1));
    std::vector<std::vector<int>> psi(n);
    std::vector<long long> gamma(n, 2);
    for (int i = 0; i + 1 < n; ++i) psi[i] = {i};
    psi[n - 1] = {n - 1, n};
    gamma[n - 1] = 1;
    return of(std::move(child), std::move(parent), std::move(psi), std::move(gamma));
  }
  if (fam == 'C' && n >= 2) {
    RootDatum child = RootDatum::from_type(child_type);
    RootDatum parent = RootDatum::from_type("A" + std::to_string(2 * n - 1));
    std::vector<std::vector<int>> psi(n);
    std::vector<long long> gamma(n, 1);
    for (int i = 0; i + 1 < n; ++i) psi[i] = {i, 2 * n - 2 - i};
    psi[n - 1] = {n - 1};
    gamma[n - 1] = 2;
    return of(std::move(child), std::move(parent), std::move(psi), std::move(gamma));
  }
  if (child_type == "F4") {
    // E6 chain 1-2-3-4-5 with node 6 on node 3 (1-based); the flip fixes
    // nodes 3 and 6 and swaps the chain ends.
    return of(RootDatum::from_type("F4"), RootDatum::from_type("E6"),
              {{5}, {2}, {1, 3}, {0, 4}}, {2, 2, 1, 1});
  }
  if (child_type == "G2") {
    // Triality orbits of D4: the short child node carries the outer orbit.
    return of(RootDatum::from_type("G2"), RootDatum::from_type("D4"), {{0, 2, 3}, {1}},
              {1, 3});
  }
  fail(Errc::UnsupportedChildType, "no shipped folding for " + child_type);
}

Folding Folding::identity(const RootDatum& g) {
  if (!g.simply_laced()) fail(Errc::NotSimplyLaced, "identity folding needs simply-laced type");
  std::vector<std::vector<int>> psi(g.rank());
  for (int i = 0; i < g.rank(); ++i) psi[i] = {i};
  return of(g, g, std::move(psi), std::vector<long long>(g.rank(), 1));
}

Weight virtualize_weight(const Folding& f, const Weight& child_lambda) {
  f.child().check_weight(child_lambda);
  if (!child_lambda.dominant() || !child_lambda.integral())
    fail(Errc::NotDominant, "embedding needs a dominant integral child weight");
  Weight out = Weight::zero(f.parent().rank());
  for (int i = 0; i < f.child().rank(); ++i)
    for (int j : f.fiber(i)) out[j] = Rat(f.gamma(i)) * child_lambda[i];
  return out;
}

VirtualElement virtual_highest(const Folding& f, const Weight& child_lambda) {
  return {LSPath::straight(f.parent(), virtualize_weight(f, child_lambda)), child_lambda};
}

std::optional<VirtualElement> v_f(const Folding& f, const VirtualElement& x, int i) {
  f.child().check_index(i);
  LSPath cur = x.carrier;
  for (int j : f.fiber(i)) {
    for (long long k = 0; k < f.gamma(i); ++k) {
      auto y = f_op(f.parent(), cur, j);
      if (!y) return std::nullopt;
      cur = std::move(*y);
    }
  }
  return VirtualElement{std::move(cur), x.child_shape};
}

std::optional<VirtualElement> v_e(const Folding& f, const VirtualElement& x, int i) {
  f.child().check_index(i);
  LSPath cur = x.carrier;
  for (int j : f.fiber(i)) {
    for (long long k = 0; k < f.gamma(i); ++k) {
      auto y = e_op(f.parent(), cur, j);
      if (!y) return std::nullopt;
      cur = std::move(*y);
    }
  }
  return VirtualElement{std::move(cur), x.child_shape};
}

namespace {

long long scaled_fiber_value(const Folding& f, const VirtualElement& x, int i,
                             long long (*measure)(const LSPath&, int)) {
  long long ref = 0;
  bool first = true;
  for (int j : f.fiber(i)) {
    long long v = measure(x.carrier, j);
    if (first) {
      ref = v;
      first = false;
    } else if (v != ref) {
      fail(Errc::InvariantBroken, "parent string data not constant on the fiber");
    }
  }
  if (ref % f.gamma(i) != 0)
    fail(Errc::InvariantBroken, "parent string data not divisible by the scaling factor");
  return ref / f.gamma(i);
}

}  // namespace

long long v_epsilon(const Folding& f, const VirtualElement& x, int i) {
  return scaled_fiber_value(f, x, i, &epsilon);
}

long long v_phi(const Folding& f, const VirtualElement& x, int i) {
  return scaled_fiber_value(f, x, i, &phi);
}

Weight child_weight(const Folding& f, const VirtualElement& x) {
  Weight parent_wt = x.carrier.endpoint();
  Weight out = Weight::zero(f.child().rank());
  for (int i = 0; i < f.child().rank(); ++i) {
    Rat ref;
    bool first = true;
    for (int j : f.fiber(i)) {
      Rat v = parent_wt[j] / Rat(f.gamma(i));
      if (first) {
        ref = v;
        first = false;
      } else if (v != ref) {
        fail(Errc::InvariantBroken, "parent weight not constant on the fiber");
      }
    }
    if (!ref.is_integer()) fail(Errc::InvariantBroken, "child weight not integral");
    out[i] = ref;
  }
  return out;
}

VirtualCrystal virtual_generate(const Folding& f, const Weight& child_lambda,
                                GenOptions opts) {
  if (!f.child().finite_type() && opts.node_budget < 0)
    fail(Errc::NotFiniteType, "virtual closure needs finite type or a node budget");
  const int n = f.child().rank();
  VirtualElement start = virtual_highest(f, child_lambda);

  VirtualCrystal vc;
  vc.nodes.push_back(start);
  vc.f_edges.push_back(std::vector<int>(n, -1));
  std::map<VirtualElement, int> index{{start, 0}};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      for (int i = 0; i < n; ++i) {
        auto kid = v_f(f, vc.nodes[v], i);
        if (!kid) continue;
        auto [it, fresh] = index.try_emplace(*kid, vc.size());
        if (fresh) {
          vc.nodes.push_back(std::move(*kid));
          vc.f_edges.emplace_back(n, -1);
          next.push_back(it->second);
          if (opts.node_budget >= 0 &&
              static_cast<long long>(vc.nodes.size()) > opts.node_budget)
            fail(Errc::BudgetExceeded, "virtual crystal node budget exceeded");
        }
        vc.f_edges[v][i] = it->second;
      }
    }
    frontier = std::move(next);
  }

  const int sz = vc.size();
  vc.e_edges.assign(sz, std::vector<int>(n, -1));
  for (int v = 0; v < sz; ++v)
    for (int i = 0; i < n; ++i)
      if (vc.f_edges[v][i] >= 0) vc.e_edges[vc.f_edges[v][i]][i] = v;

  vc.wt.resize(sz);
  vc.eps.assign(sz, std::vector<long long>(n, 0));
  vc.phi.assign(sz, std::vector<long long>(n, 0));
  int highest_count = 0;
  for (int v = 0; v < sz; ++v) {
    vc.wt[v] = child_weight(f, vc.nodes[v]);
    bool top = true;
    for (int i = 0; i < n; ++i) {
      vc.eps[v][i] = v_epsilon(f, vc.nodes[v], i);
      vc.phi[v][i] = v_phi(f, vc.nodes[v], i);
      top &= vc.eps[v][i] == 0;
      if ((vc.eps[v][i] > 0) != (vc.e_edges[v][i] >= 0))
        fail(Errc::InvariantBroken, "virtual raising edge inconsistent with epsilon");
      if ((vc.phi[v][i] > 0) != (vc.f_edges[v][i] >= 0))
        fail(Errc::InvariantBroken, "virtual lowering edge inconsistent with phi");
      if (vc.phi[v][i] - vc.eps[v][i] != vc.wt[v][i].as_integer())
        fail(Errc::InvariantBroken, "virtual string data inconsistent with the weight");
    }
    highest_count += top;
  }
  if (highest_count != 1)
    fail(Errc::InvariantBroken, "virtual crystal has no unique highest node");
  return vc;
}

long long folded_epsilon_closed_form(const Folding& f, const Weight& child_lambda,
                                     const Monomial& m, size_t r) {
  if (r >= m.factors.size())
    fail(Errc::PositionOutOfRange, "monomial position " + std::to_string(r));
  if (!monomial_nonzero(f.child(), child_lambda, m))
    fail(Errc::HypothesisViolated, "closed form needs a nonzero monomial element");

  // Expanded parent word with multiplicities c_u = b_u gamma_{i_u}.
  std::vector<std::pair<int, long long>> word;
  std::vector<std::pair<size_t, size_t>> span(m.factors.size());  // [begin, end)
  for (size_t p = 0; p < m.factors.size(); ++p) {
    span[p].first = word.size();
    for (int j : f.fiber(m.factors[p].first))
      word.emplace_back(j, m.factors[p].second * f.gamma(m.factors[p].first));
    span[p].second = word.size();
  }

  const RootDatum& par = f.parent();
  long long ref = 0;
  bool first = true;
  for (size_t l = span[r].first; l < span[r].second; ++l) {
    long long v = word[l].second;
    for (size_t u = 0; u < l; ++u) v += word[u].second * par.a(word[u].first, word[l].first);
    v = std::max(0LL, v);
    if (first) {
      ref = v;
      first = false;
    } else if (v != ref) {
      fail(Errc::InvariantBroken, "expanded string values disagree across the fiber");
    }
  }
  if (ref % f.gamma(m.factors[r].first) != 0)
    fail(Errc::InvariantBroken, "expanded string value not divisible by the scaling factor");
  return ref / f.gamma(m.factors[r].first);
}

std::optional<Weight> folded_component_from_monomial(const Folding& f, const Weight& lambda,
                                                     const Weight& mu, const Monomial& m) {
  const RootDatum& child = f.child();
  for (const Weight& w : {lambda, mu})
    if (!w.dominant() || !w.integral())
      fail(Errc::NotDominant, "component check needs dominant integral weights");
  if (!monomial_nonzero(child, lambda, m)) return std::nullopt;
  for (size_t r = 0; r < m.factors.size(); ++r)
    if (mu[m.factors[r].first] < Rat(folded_epsilon_closed_form(f, lambda, m, r)))
      return std::nullopt;
  return lambda + mu - m.root_sum(child);
}

Decomposition virtual_decompose(const Folding& f, const Weight& lambda, const Weight& mu,
                                GenOptions opts) {
  VirtualCrystal vc = virtual_generate(f, mu, opts);
  Decomposition d;
  d.lambda = lambda;
  d.mu = mu;
  const int n = f.child().rank();
  for (int v = 0; v < vc.size(); ++v) {
    bool adm = true;
    for (int i = 0; i < n && adm; ++i) adm = Rat(vc.eps[v][i]) <= lambda[i];
    if (adm) ++d.mult[lambda + vc.wt[v]];
  }
  return d;
}

}  // namespace lsc
