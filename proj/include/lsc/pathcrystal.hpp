#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lsc/rootdata.hpp"

namespace lsc {

struct Segment {
  Weight dir;
  Rat len;  // > 0, durations along a path sum to 1

  bool operator==(const Segment& o) const = default;
  std::strong_ordering operator<=>(const Segment& o) const = default;
};

// Piecewise-linear path from 0, stored in canonical form: no zero-duration
// segments, consecutive directions distinct, durations summing to 1. Crystal
// elements are compared and hashed by this canonical form. The dominant
// shape it was generated from is carried as metadata.
class LSPath {
 public:
  // The straight path from 0 to lambda (lambda dominant integral). For
  // lambda = 0 this is the constant path, on which every operator is absent.
  static LSPath straight(const RootDatum& g, const Weight& lambda);

  // Canonicalizing constructor; verifies durations are positive and sum to 1.
  static LSPath make(Weight shape, std::vector<Segment> segs);

  const Weight& shape() const { return shape_; }
  const std::vector<Segment>& segments() const { return segs_; }
  Weight endpoint() const;

  bool operator==(const LSPath& o) const { return segs_ == o.segs_; }
  std::strong_ordering operator<=>(const LSPath& o) const { return segs_ <=> o.segs_; }

  std::string to_string() const;

 private:
  LSPath() = default;
  Weight shape_;
  std::vector<Segment> segs_;
};

// Exact minimum over [0,1] of t -> <path(t), alpha_i^vee>. The minimum of a
// piecewise-linear function is attained at a breakpoint.
Rat height_min(const LSPath& pi, int i);

// Position functions computed from the height profile; on the supported
// class (paths generated from a straight dominant path) the minima are
// integral, otherwise Errc::NonIntegralMinimum is raised.
long long epsilon(const LSPath& pi, int i);
long long phi(const LSPath& pi, int i);

// Littelmann root operators. Absent return encodes 0.
std::optional<LSPath> f_op(const RootDatum& g, const LSPath& pi, int i);
std::optional<LSPath> e_op(const RootDatum& g, const LSPath& pi, int i);

// Applies f_{i_1}^{b_1} ... f_{i_t}^{b_t} to the straight path of shape
// lambda, rightmost factor first; absent if any step is absent.
std::optional<LSPath> apply_lowering_monomial(
    const RootDatum& g, const Weight& lambda,
    const std::vector<std::pair<int, long long>>& factors);

struct GenOptions {
  long long node_budget = -1;  // required for non-finite type
  int jobs = 1;
};

// Finite crystal graph: closure of the highest-weight path under the
// lowering operators, with per-node weight and string data precomputed.
// Immutable after construction.
class CrystalGraph {
 public:
  CrystalGraph(RootDatum g, std::vector<LSPath> nodes,
               std::vector<std::vector<int>> f_edges, std::vector<std::vector<int>> e_edges,
               std::vector<Weight> wt, std::vector<std::vector<long long>> eps,
               std::vector<std::vector<long long>> phi);

  const RootDatum& datum() const { return g_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const LSPath& node(int v) const { return nodes_[v]; }
  const std::vector<LSPath>& nodes() const { return nodes_; }
  int highest() const { return 0; }

  // -1 encodes absent
  int f_edge(int v, int i) const { return f_edges_[v][i]; }
  int e_edge(int v, int i) const { return e_edges_[v][i]; }

  const Weight& weight(int v) const { return wt_[v]; }
  long long eps(int v, int i) const { return eps_[v][i]; }
  long long phi(int v, int i) const { return phi_[v][i]; }

  std::optional<int> index_of(const LSPath& p) const;

 private:
  RootDatum g_;
  std::vector<LSPath> nodes_;
  std::vector<std::vector<int>> f_edges_, e_edges_;
  std::vector<Weight> wt_;
  std::vector<std::vector<long long>> eps_, phi_;
  std::map<LSPath, int> index_;
};

// Breadth-first closure of the straight path under all lowering operators.
// Colors are explored in increasing index order and node ids follow the
// discovery order, so the result is identical for any job count.
CrystalGraph generate_crystal(const RootDatum& g, const Weight& lambda, GenOptions opts = {});

struct StembridgeReport {
  long long edges_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Verifies the two local axioms for simply-laced crystals on every
// applicable node/color pair of the graph.
StembridgeReport check_stembridge(const CrystalGraph& gr);

// Iterated string closure along a reduced word, rightmost letter first.
std::set<LSPath> demazure_subcrystal(const RootDatum& g, const Weight& lambda,
                                     const WeylWord& w);

// f-string descent to the extremal element of weight w(lambda).
LSPath extremal_element(const RootDatum& g, const Weight& lambda, const WeylWord& w);

// DOT export with nodes in lexicographic canonical-form order, labeled by
// endpoint weight; edge labels are 1-based colors.
std::string to_dot(const CrystalGraph& gr);

}  // namespace lsc
