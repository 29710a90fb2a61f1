#include "lsc/pathcrystal.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <thread>

namespace lsc {

// --- LSPath ------------------------------------------------------------------

LSPath LSPath::straight(const RootDatum& g, const Weight& lambda) {
  if (lambda.rank() != g.rank()) fail(Errc::IndexOutOfRange, "weight rank mismatch");
  if (!lambda.dominant() || !lambda.integral())
    fail(Errc::NotDominant, "straight path needs a dominant integral weight");
  return make(lambda, {Segment{lambda, Rat(1)}});
}

LSPath LSPath::make(Weight shape, std::vector<Segment> segs) {
  std::vector<Segment> canon;
  Rat total(0);
  for (auto& s : segs) {
    if (s.len < Rat(0)) fail(Errc::InvariantBroken, "negative segment duration");
    if (s.len.is_zero()) continue;
    total += s.len;
    if (!canon.empty() && canon.back().dir == s.dir)
      canon.back().len += s.len;
    else
      canon.push_back(std::move(s));
  }
  if (canon.empty() || total != Rat(1))
    fail(Errc::InvariantBroken, "path durations must sum to 1");
  LSPath p;
  p.shape_ = std::move(shape);
  p.segs_ = std::move(canon);
  return p;
}

Weight LSPath::endpoint() const {
  Weight e = Weight::zero(shape_.rank());
  for (const auto& s : segs_) e = e + s.dir * s.len;
  return e;
}

std::string LSPath::to_string() const {
  std::string out = "[";
  for (size_t k = 0; k < segs_.size(); ++k) {
    if (k) out += " ";
    out += segs_[k].dir.to_string() + "*" + segs_[k].len.to_string();
  }
  return out + "]";
}

// --- height profiles and root operators ---------------------------------------

namespace {

struct Profile {
  std::vector<Rat> t, h;  // breakpoint times and heights, t[0]=0, t.back()=1
};

Profile profile_of(const LSPath& pi, int i) {
  Profile p;
  p.t.reserve(pi.segments().size() + 1);
  p.h.reserve(pi.segments().size() + 1);
  Rat t(0), h(0);
  p.t.push_back(t);
  p.h.push_back(h);
  for (const auto& s : pi.segments()) {
    t += s.len;
    h += s.len * s.dir[i];
    p.t.push_back(t);
    p.h.push_back(h);
  }
  return p;
}

Rat min_of(const Profile& p) { return *std::min_element(p.h.begin(), p.h.end()); }

}  // namespace

Rat height_min(const LSPath& pi, int i) {
  if (i < 0 || i >= pi.shape().rank()) fail(Errc::IndexOutOfRange, "color out of range");
  return min_of(profile_of(pi, i));
}

long long epsilon(const LSPath& pi, int i) { return (-height_min(pi, i)).as_integer(); }

long long phi(const LSPath& pi, int i) {
  Profile p = profile_of(pi, i);
  return (p.h.back() - min_of(p)).as_integer();
}

std::optional<LSPath> f_op(const RootDatum& g, const LSPath& pi, int i) {
  g.check_index(i);
  Profile p = profile_of(pi, i);
  Rat m = min_of(p);
  if (p.h.back() - m < Rat(1)) return std::nullopt;
  (void)(-m).as_integer();  // supported class has integral minima

  // Cut at the last attainment of the minimum and the first later time the
  // height reaches m+1; reflect the directions in between, translate after.
  size_t x = 0;
  for (size_t k = 0; k < p.h.size(); ++k)
    if (p.h[k] == m) x = k;
  Rat target = m + Rat(1);
  size_t yseg = p.t.size();
  Rat ycut;
  for (size_t k = x; k + 1 < p.t.size(); ++k) {
    if (p.h[k + 1] >= target) {
      Rat frac = (target - p.h[k]) / (p.h[k + 1] - p.h[k]);
      ycut = p.t[k] + frac * (p.t[k + 1] - p.t[k]);
      yseg = k;
      break;
    }
  }
  if (yseg == p.t.size()) fail(Errc::InvariantBroken, "missing cut point");

  const auto& segs = pi.segments();
  std::vector<Segment> out;
  out.reserve(segs.size() + 1);
  for (size_t s = 0; s < segs.size(); ++s) {
    if (s < x) {
      out.push_back(segs[s]);
    } else if (s < yseg) {
      out.push_back({g.reflect(i, segs[s].dir), segs[s].len});
    } else if (s == yseg) {
      Rat l1 = ycut - p.t[s], l2 = p.t[s + 1] - ycut;
      if (l1 > Rat(0)) out.push_back({g.reflect(i, segs[s].dir), l1});
      if (l2 > Rat(0)) out.push_back({segs[s].dir, l2});
    } else {
      out.push_back(segs[s]);
    }
  }
  return LSPath::make(pi.shape(), std::move(out));
}

std::optional<LSPath> e_op(const RootDatum& g, const LSPath& pi, int i) {
  g.check_index(i);
  Profile p = profile_of(pi, i);
  Rat m = min_of(p);
  if (-m < Rat(1)) return std::nullopt;
  (void)(-m).as_integer();

  // Mirror construction: cut at the first attainment of the minimum and the
  // last earlier time the height was at m+1.
  size_t x = 0;
  for (size_t k = 0; k < p.h.size(); ++k)
    if (p.h[k] == m) {
      x = k;
      break;
    }
  Rat target = m + Rat(1);
  size_t yseg = p.t.size();
  Rat ycut;
  for (size_t k = x; k-- > 0;) {
    if (p.h[k] >= target) {
      Rat frac = (p.h[k] - target) / (p.h[k] - p.h[k + 1]);
      ycut = p.t[k] + frac * (p.t[k + 1] - p.t[k]);
      yseg = k;
      break;
    }
  }
  if (yseg == p.t.size()) fail(Errc::InvariantBroken, "missing cut point");

  const auto& segs = pi.segments();
  std::vector<Segment> out;
  out.reserve(segs.size() + 1);
  for (size_t s = 0; s < segs.size(); ++s) {
    if (s < yseg) {
      out.push_back(segs[s]);
    } else if (s == yseg) {
      Rat l1 = ycut - p.t[s], l2 = p.t[s + 1] - ycut;
      if (l1 > Rat(0)) out.push_back({segs[s].dir, l1});
      if (l2 > Rat(0)) out.push_back({g.reflect(i, segs[s].dir), l2});
    } else if (s < x) {
      out.push_back({g.reflect(i, segs[s].dir), segs[s].len});
    } else {
      out.push_back(segs[s]);
    }
  }
  return LSPath::make(pi.shape(), std::move(out));
}

std::optional<LSPath> apply_lowering_monomial(
    const RootDatum& g, const Weight& lambda,
    const std::vector<std::pair<int, long long>>& factors) {
  LSPath x = LSPath::straight(g, lambda);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    for (long long k = 0; k < it->second; ++k) {
      auto y = f_op(g, x, it->first);
      if (!y) return std::nullopt;
      x = std::move(*y);
    }
  }
  return x;
}

// --- crystal graphs ------------------------------------------------------------

CrystalGraph::CrystalGraph(RootDatum g, std::vector<LSPath> nodes,
                           std::vector<std::vector<int>> f_edges,
                           std::vector<std::vector<int>> e_edges, std::vector<Weight> wt,
                           std::vector<std::vector<long long>> eps,
                           std::vector<std::vector<long long>> phi)
    : g_(std::move(g)),
      nodes_(std::move(nodes)),
      f_edges_(std::move(f_edges)),
      e_edges_(std::move(e_edges)),
      wt_(std::move(wt)),
      eps_(std::move(eps)),
      phi_(std::move(phi)) {
  for (int v = 0; v < size(); ++v) index_.emplace(nodes_[v], v);
}

std::optional<int> CrystalGraph::index_of(const LSPath& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CrystalGraph generate_crystal(const RootDatum& g, const Weight& lambda, GenOptions opts) {
  if (!g.finite_type() && opts.node_budget < 0)
    fail(Errc::NotFiniteType, "crystal closure needs finite type or an explicit node budget");

  const int n = g.rank();
  LSPath start = LSPath::straight(g, lambda);
  std::vector<LSPath> nodes{start};
  std::map<LSPath, int> index{{start, 0}};
  std::vector<std::vector<int>> f_edges{std::vector<int>(n, -1)};
  std::vector<int> frontier{0};

  while (!frontier.empty()) {
    std::vector<std::vector<std::optional<LSPath>>> kids(frontier.size());
    auto expand = [&](size_t lo, size_t hi) {
      for (size_t q = lo; q < hi; ++q) {
        kids[q].resize(n);
        for (int i = 0; i < n; ++i) kids[q][i] = f_op(g, nodes[frontier[q]], i);
      }
    };
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || frontier.size() < 64) {
      expand(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      size_t chunk = (frontier.size() + jobs - 1) / jobs;
      for (size_t lo = 0; lo < frontier.size(); lo += chunk)
        pool.emplace_back(expand, lo, std::min(lo + chunk, frontier.size()));
      for (auto& th : pool) th.join();
    }
    // Deterministic merge: frontier order, then ascending color.
    std::vector<int> next;
    for (size_t q = 0; q < frontier.size(); ++q) {
      for (int i = 0; i < n; ++i) {
        if (!kids[q][i]) continue;
        auto [it, fresh] = index.try_emplace(*kids[q][i], static_cast<int>(nodes.size()));
        if (fresh) {
          nodes.push_back(std::move(*kids[q][i]));
          f_edges.emplace_back(n, -1);
          next.push_back(it->second);
          if (opts.node_budget >= 0 &&
              static_cast<long long>(nodes.size()) > opts.node_budget)
            fail(Errc::BudgetExceeded, "crystal node budget exceeded");
        }
        f_edges[frontier[q]][i] = it->second;
      }
    }
    frontier = std::move(next);
  }

  const int sz = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> e_edges(sz, std::vector<int>(n, -1));
  for (int v = 0; v < sz; ++v)
    for (int i = 0; i < n; ++i)
      if (f_edges[v][i] >= 0) e_edges[f_edges[v][i]][i] = v;

  std::vector<Weight> wt(sz);
  std::vector<std::vector<long long>> eps(sz, std::vector<long long>(n));
  std::vector<std::vector<long long>> phis(sz, std::vector<long long>(n));
  int highest_count = 0;
  for (int v = 0; v < sz; ++v) {
    wt[v] = nodes[v].endpoint();
    bool top = true;
    for (int i = 0; i < n; ++i) {
      eps[v][i] = epsilon(nodes[v], i);
      phis[v][i] = phi(nodes[v], i);
      top &= eps[v][i] == 0;
      // string neighbors must exist exactly when the position functions
      // say they do
      if ((eps[v][i] > 0) != (e_edges[v][i] >= 0))
        fail(Errc::InvariantBroken, "raising edge inconsistent with epsilon");
      if ((phis[v][i] > 0) != (f_edges[v][i] >= 0))
        fail(Errc::InvariantBroken, "lowering edge inconsistent with phi");
    }
    highest_count += top;
  }
  if (highest_count != 1) fail(Errc::InvariantBroken, "crystal has no unique highest node");

  return CrystalGraph(g, std::move(nodes), std::move(f_edges), std::move(e_edges),
                      std::move(wt), std::move(eps), std::move(phis));
}

StembridgeReport check_stembridge(const CrystalGraph& gr) {
  const RootDatum& g = gr.datum();
  if (!g.simply_laced()) fail(Errc::NotSimplyLaced, "local axioms apply to simply-laced type");
  const int n = g.rank();
  StembridgeReport rep;
  auto note = [&](int v, int i, int j, const std::string& what) {
    rep.violations.push_back("node " + std::to_string(v) + " colors (" + std::to_string(i) +
                             "," + std::to_string(j) + "): " + what);
  };
  for (int v = 0; v < gr.size(); ++v) {
    for (int i = 0; i < n; ++i) {
      int y = gr.e_edge(v, i);
      if (y < 0) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        ++rep.edges_checked;
        long long de = gr.eps(y, j) - gr.eps(v, j);
        if (de != 0 && de != 1) note(v, i, j, "eps jump " + std::to_string(de));
        if (de == 1 && g.a(i, j) == 0) note(v, i, j, "eps raised across orthogonal colors");
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (gr.eps(v, i) <= 0 || gr.eps(v, j) <= 0) continue;
        int ei = gr.e_edge(v, i);
        if (gr.eps(ei, j) != gr.eps(v, j)) continue;
        int ej = gr.e_edge(v, j);
        int eji = gr.e_edge(ei, j);
        int eij = ej >= 0 ? gr.e_edge(ej, i) : -1;
        if (eji < 0 || eij < 0 || eji != eij) note(v, i, j, "e_i e_j != e_j e_i");
        if (ej >= 0 && gr.phi(ej, i) != gr.phi(v, i)) note(v, i, j, "phi not preserved");
      }
    }
  }
  return rep;
}

std::set<LSPath> demazure_subcrystal(const RootDatum& g, const Weight& lambda,
                                     const WeylWord& w) {
  if (!is_reduced(g, w)) fail(Errc::NotReducedWord, "word is not reduced");
  std::set<LSPath> cur{LSPath::straight(g, lambda)};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    std::set<LSPath> next;
    for (const LSPath& x : cur) {
      LSPath y = x;
      next.insert(y);
      while (auto z = f_op(g, y, *it)) {
        y = std::move(*z);
        next.insert(y);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

LSPath extremal_element(const RootDatum& g, const Weight& lambda, const WeylWord& w) {
  if (!is_reduced(g, w)) fail(Errc::NotReducedWord, "word is not reduced");
  LSPath x = LSPath::straight(g, lambda);
  Weight target = lambda;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int i = *it;
    Rat c = target[i];
    long long cnt = c > Rat(0) ? c.as_integer() : 0;
    for (long long k = 0; k < cnt; ++k) {
      auto y = f_op(g, x, i);
      if (!y) fail(Errc::InvariantBroken, "string shorter than extremal descent");
      x = std::move(*y);
    }
    target = g.reflect(i, target);
  }
  if (x.endpoint() != target) fail(Errc::InvariantBroken, "extremal endpoint mismatch");
  return x;
}

std::string to_dot(const CrystalGraph& gr) {
  std::vector<int> order(gr.size());
  for (int v = 0; v < gr.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return gr.node(a) < gr.node(b); });
  std::vector<int> rank(gr.size());
  for (int k = 0; k < gr.size(); ++k) rank[order[k]] = k;

  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n";
  for (int k = 0; k < gr.size(); ++k)
    os << "  n" << k << " [label=\"" << gr.weight(order[k]).to_string() << "\"];\n";
  for (int k = 0; k < gr.size(); ++k) {
    int v = order[k];
    for (int i = 0; i < gr.datum().rank(); ++i)
      if (gr.f_edge(v, i) >= 0)
        os << "  n" << k << " -> n" << rank[gr.f_edge(v, i)] << " [label=\"" << i + 1
           << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace lsc
