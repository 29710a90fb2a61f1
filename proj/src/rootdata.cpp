#include "lsc/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace lsc {

// --- Weight ----------------------------------------------------------------

bool Weight::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Weight::integral() const {
  for (const auto& x : c_)
    if (!x.is_integer()) return false;
  return true;
}

bool Weight::dominant() const {
  for (const auto& x : c_)
    if (x < Rat(0)) return false;
  return true;
}

bool Weight::regular_dominant() const {
  for (const auto& x : c_)
    if (x < Rat(1)) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  std::vector<Rat> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return Weight(std::move(r));
}

Weight Weight::operator-(const Weight& o) const {
  std::vector<Rat> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
  return Weight(std::move(r));
}

Weight Weight::operator-() const {
  std::vector<Rat> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return Weight(std::move(r));
}

Weight Weight::operator*(const Rat& k) const {
  std::vector<Rat> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
  return Weight(std::move(r));
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].to_string();
  }
  return s + ")";
}

// --- local linear algebra ----------------------------------------------------

namespace {

using Mat = std::vector<std::vector<long long>>;

Rat det_rational(std::vector<std::vector<Rat>> m) {
  int n = static_cast<int>(m.size());
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Rat det_of(const Mat& a) {
  std::vector<std::vector<Rat>> m(a.size(), std::vector<Rat>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) m[i][j] = Rat(a[i][j]);
  return det_rational(std::move(m));
}

// Sylvester test on the symmetrized matrix; valid because the symmetrizer
// is positive diagonal, so the minors of A and DA share signs.
bool leading_minors_positive(const Mat& a) {
  int n = static_cast<int>(a.size());
  for (int k = 1; k <= n; ++k) {
    Mat sub(k, std::vector<long long>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = a[i][j];
    if (!(det_of(sub) > Rat(0))) return false;
  }
  return true;
}

Mat submatrix(const Mat& a, const std::vector<int>& nodes) {
  Mat s(nodes.size(), std::vector<long long>(nodes.size()));
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = 0; j < nodes.size(); ++j) s[i][j] = a[nodes[i]][nodes[j]];
  return s;
}

std::vector<std::vector<int>> connected_components(const Mat& a) {
  int n = static_cast<int>(a.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<int> q{start};
    comp[start] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      out[id].push_back(v);
      for (int u = 0; u < n; ++u)
        if (u != v && a[v][u] != 0 && comp[u] < 0) {
          comp[u] = id;
          q.push_back(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

// Backtracking search for p with A[i][j] == B[p[i]][p[j]].
std::optional<std::vector<int>> find_isomorphism(const Mat& A, const Mat& B) {
  if (A.size() != B.size()) return std::nullopt;
  int n = static_cast<int>(A.size());
  auto invariant = [](const Mat& m, int v) {
    std::vector<std::pair<long long, long long>> inv;
    for (size_t u = 0; u < m.size(); ++u)
      if (static_cast<int>(u) != v && m[v][u] != 0) inv.emplace_back(m[v][u], m[u][v]);
    std::sort(inv.begin(), inv.end());
    return inv;
  };
  std::vector<std::vector<std::pair<long long, long long>>> invA(n), invB(n);
  for (int v = 0; v < n; ++v) {
    invA[v] = invariant(A, v);
    invB[v] = invariant(B, v);
  }
  std::vector<int> p(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || invA[i] != invB[c]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = A[i][j] == B[c][p[j]] && A[j][i] == B[p[j]][c];
      if (!ok) continue;
      p[i] = c;
      used[c] = true;
      if (rec(i + 1)) return true;
      used[c] = false;
      p[i] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return p;
}

Mat standard_matrix(char fam, int n);

// Recognize the type of a connected finite-type component by its diagram
// shape, then certify by explicit permutation against the standard matrix.
std::string recognize_finite_label(const Mat& a) {
  int n = static_cast<int>(a.size());
  if (n == 1) return "A1";
  struct Edge {
    int u, v;
    long long w;
  };
  std::vector<Edge> edges;
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[i][j] != 0) {
        edges.push_back({i, j, a[i][j] * a[j][i]});
        ++deg[i];
        ++deg[j];
      }
  std::string label = "?";
  if (static_cast<int>(edges.size()) == n - 1) {
    int triple = 0, dbl = 0;
    for (auto& e : edges) {
      if (e.w == 3) ++triple;
      if (e.w == 2) ++dbl;
    }
    int maxdeg = *std::max_element(deg.begin(), deg.end());
    if (triple == 1 && n == 2) {
      label = "G2";
    } else if (dbl == 1 && maxdeg <= 2) {
      const Edge& e = *std::find_if(edges.begin(), edges.end(),
                                    [](const Edge& x) { return x.w == 2; });
      if (n == 2) {
        label = "B2";
      } else {
        int leaf = deg[e.u] == 1 ? e.u : (deg[e.v] == 1 ? e.v : -1);
        if (leaf < 0) {
          if (n == 4) label = "F4";
        } else {
          int other = leaf == e.u ? e.v : e.u;
          // Row of the short root carries the -2.
          label = (a[leaf][other] == -2 ? "B" : "C") + std::to_string(n);
        }
      }
    } else if (dbl == 0 && triple == 0) {
      if (maxdeg <= 2) {
        label = "A" + std::to_string(n);
      } else if (maxdeg == 3 && std::count(deg.begin(), deg.end(), 3) == 1) {
        // Arm lengths from the branch node identify D/E.
        int branch = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
        std::vector<int> arms;
        for (int j = 0; j < n; ++j) {
          if (j == branch || a[branch][j] == 0) continue;
          int len = 1, prev = branch, cur = j;
          while (true) {
            int next = -1;
            for (int k = 0; k < n; ++k)
              if (k != prev && k != cur && a[cur][k] != 0) next = k;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() == 3 && arms[0] == 1) {
          if (arms[1] == 1)
            label = "D" + std::to_string(n);
          else if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
            label = "E" + std::to_string(n);
        }
      }
    }
  }
  if (label == "?") return label;
  Mat std_m = standard_matrix(label[0], n);
  if (!find_isomorphism(std_m, a)) return "?";
  return label;
}

Mat standard_matrix(char fam, int n) {
  auto chain = [](int m) {
    Mat a(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i) {
      a[i][i] = 2;
      if (i + 1 < m) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  switch (fam) {
    case 'A':
      if (n < 1) break;
      return chain(n);
    case 'B': {
      if (n < 2) break;
      Mat a = chain(n);
      a[n - 1][n - 2] = -2;  // alpha_n short
      return a;
    }
    case 'C': {
      if (n < 2) break;
      Mat a = chain(n);
      a[n - 2][n - 1] = -2;  // alpha_n long
      return a;
    }
    case 'D': {
      if (n < 3) break;
      Mat a = chain(n - 1);
      a.resize(n);
      for (auto& row : a) row.resize(n, 0);
      a[n - 1][n - 1] = 2;
      // Both fork nodes attach to node n-2 (0-based n-3).
      a[n - 2][n - 3] = a[n - 3][n - 2] = -1;
      a[n - 1][n - 3] = a[n - 3][n - 1] = -1;
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      return a;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      Mat a = chain(n - 1);
      a.resize(n);
      for (auto& row : a) row.resize(n, 0);
      a[n - 1][n - 1] = 2;
      a[n - 1][2] = a[2][n - 1] = -1;  // extra node on the third chain node
      return a;
    }
    case 'F': {
      if (n != 4) break;
      Mat a = chain(4);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      return a;
    }
    case 'G': {
      if (n != 2) break;
      return {{2, -3}, {-1, 2}};  // alpha_1 short
    }
    default:
      break;
  }
  fail(Errc::ParseError, std::string("no standard Cartan matrix ") + fam + std::to_string(n));
}

// Untwisted affine extension: append alpha_0 = -theta to a finite matrix.
Mat untwisted_extension(const Mat& finite_std) {
  RootDatum g = RootDatum::from_matrix(finite_std);
  Weight theta = highest_root(g);
  int n = static_cast<int>(finite_std.size());
  Mat e(n + 1, std::vector<long long>(n + 1, 0));
  e[0][0] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[i + 1][j + 1] = finite_std[i][j];
  for (int j = 0; j < n; ++j) {
    Rat aj0 = -theta[j];                                    // -<theta, alpha_j^vee>
    Rat a0j = -pair_coroot(g, g.simple_root(j), theta);     // -<alpha_j, theta^vee>
    e[j + 1][0] = aj0.as_integer();
    e[0][j + 1] = a0j.as_integer();
  }
  return e;
}

struct ComponentClass {
  TypeClass tc;
  std::string label;
};

ComponentClass classify_component(const Mat& comp) {
  if (leading_minors_positive(comp)) {
    return {TypeClass::Finite, recognize_finite_label(comp)};
  }
  int n = static_cast<int>(comp.size());
  bool affine = det_of(comp).is_zero();
  if (affine) {
    for (int v = 0; v < n && affine; ++v) {
      std::vector<int> rest;
      for (int u = 0; u < n; ++u)
        if (u != v) rest.push_back(u);
      Mat sub = submatrix(comp, rest);
      for (const auto& piece : connected_components(sub))
        if (!leading_minors_positive(submatrix(sub, piece))) affine = false;
    }
  }
  if (!affine) return {TypeClass::Indefinite, "indefinite"};
  // Try to name it as the untwisted extension of a finite type.
  for (int v = 0; v < n; ++v) {
    std::vector<int> rest;
    for (int u = 0; u < n; ++u)
      if (u != v) rest.push_back(u);
    Mat sub = submatrix(comp, rest);
    if (connected_components(sub).size() != 1) continue;
    std::string lab = recognize_finite_label(sub);
    if (lab == "?") continue;
    Mat ext = untwisted_extension(standard_matrix(lab[0], n - 1));
    if (find_isomorphism(ext, comp)) return {TypeClass::Affine, lab + "~"};
  }
  return {TypeClass::Affine, "affine"};
}

}  // namespace

// --- RootDatum ---------------------------------------------------------------

RootDatum RootDatum::from_matrix(const std::vector<std::vector<long long>>& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) fail(Errc::NotGCM, "empty matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) fail(Errc::NotGCM, "matrix not square");
    if (a[i][i] != 2) fail(Errc::NotGCM, "diagonal entry != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) fail(Errc::NotGCM, "positive off-diagonal entry");
      if ((a[i][j] == 0) != (a[j][i] == 0)) fail(Errc::NotGCM, "zero pattern not symmetric");
    }
  }

  RootDatum g;
  g.n_ = n;
  g.a_ = a;

  // Symmetrizer: propagate along edges, verify on closing edges, then
  // clear denominators per component.
  std::vector<Rat> d(n);
  auto comps = connected_components(a);
  for (const auto& comp : comps) {
    std::map<int, Rat> dc;
    std::deque<int> q{comp[0]};
    dc[comp[0]] = Rat(1);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : comp) {
        if (u == v || a[v][u] == 0) continue;
        Rat want = dc[v] * Rat(a[v][u], a[u][v]);
        auto it = dc.find(u);
        if (it == dc.end()) {
          dc[u] = want;
          q.push_back(u);
        } else if (it->second != want) {
          fail(Errc::NotSymmetrizable, "no positive symmetrizer exists");
        }
      }
    }
    long long lcm = 1;
    for (auto& [v, dv] : dc) lcm = std::lcm(lcm, dv.den());
    long long gcd = 0;
    for (auto& [v, dv] : dc) gcd = std::gcd(gcd, (dv * Rat(lcm)).as_integer());
    for (auto& [v, dv] : dc) d[v] = dv * Rat(lcm, gcd);
  }
  g.sym_.resize(n);
  for (int i = 0; i < n; ++i) g.sym_[i] = d[i].as_integer();

  // Classification per indecomposable component.
  bool any_affine = false, any_indef = false;
  std::string label;
  for (const auto& comp : comps) {
    ComponentClass cc = classify_component(submatrix(a, comp));
    any_affine |= cc.tc == TypeClass::Affine;
    any_indef |= cc.tc == TypeClass::Indefinite;
    if (!label.empty()) label += "x";
    label += cc.label;
  }
  g.type_class_ = any_indef  ? TypeClass::Indefinite
                  : any_affine ? TypeClass::Affine
                               : TypeClass::Finite;
  g.label_ = label;
  return g;
}

RootDatum RootDatum::from_type(const std::string& label) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : label) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);

  Mat total;
  for (const std::string& p : parts) {
    if (p.size() < 2) fail(Errc::ParseError, "bad type label '" + p + "'");
    bool affine = p.back() == '~';
    std::string core = affine ? p.substr(0, p.size() - 1) : p;
    char fam = core[0];
    int rank = 0;
    try {
      rank = std::stoi(core.substr(1));
    } catch (...) {
      fail(Errc::ParseError, "bad type label '" + p + "'");
    }
    Mat m = standard_matrix(fam, rank);
    if (affine) m = untwisted_extension(m);
    size_t off = total.size();
    total.resize(off + m.size());
    for (auto& row : total) row.resize(off + m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j) total[off + i][off + j] = m[i][j];
  }
  return from_matrix(total);
}

bool RootDatum::simply_laced() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && a_[i][j] < -1) return false;
  return true;
}

void RootDatum::check_index(int i) const {
  if (i < 0 || i >= n_) fail(Errc::IndexOutOfRange, "index " + std::to_string(i));
}

void RootDatum::check_weight(const Weight& w) const {
  if (w.rank() != n_)
    fail(Errc::IndexOutOfRange, "weight rank " + std::to_string(w.rank()) +
                                    " does not match rank " + std::to_string(n_));
}

Weight RootDatum::simple_root(int j) const {
  check_index(j);
  std::vector<Rat> c(n_);
  for (int i = 0; i < n_; ++i) c[i] = Rat(a_[i][j]);
  return Weight(std::move(c));
}

Weight RootDatum::fundamental_weight(int i) const {
  check_index(i);
  std::vector<Rat> c(n_);
  c[i] = Rat(1);
  return Weight(std::move(c));
}

Weight RootDatum::rho() const {
  return Weight(std::vector<Rat>(n_, Rat(1)));
}

Rat RootDatum::pair(const Weight& w, int i) const {
  check_index(i);
  check_weight(w);
  return w[i];
}

Weight RootDatum::reflect(int i, const Weight& w) const {
  check_index(i);
  check_weight(w);
  Rat k = w[i];
  if (k.is_zero()) return w;
  return w - simple_root(i) * k;
}

Weight RootDatum::apply(const WeylWord& w, const Weight& x) const {
  Weight y = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) y = reflect(*it, y);
  return y;
}

std::pair<Weight, WeylWord> RootDatum::dominant_representative(const Weight& x) const {
  if (!finite_type()) fail(Errc::NotFiniteType, "dominant representative needs finite type");
  Weight y = x;
  std::vector<int> applied;
  while (true) {
    int desc = -1;
    for (int i = 0; i < n_; ++i)
      if (y[i] < Rat(0)) {
        desc = i;
        break;
      }
    if (desc < 0) break;
    y = reflect(desc, y);
    applied.push_back(desc);
  }
  WeylWord w;
  w.letters.assign(applied.rbegin(), applied.rend());
  return {y, w};
}

Weight RootDatum::antidominant_representative(const Weight& x) const {
  if (!finite_type()) fail(Errc::NotFiniteType, "antidominant representative needs finite type");
  Weight y = x;
  while (true) {
    int asc = -1;
    for (int i = 0; i < n_; ++i)
      if (y[i] > Rat(0)) {
        asc = i;
        break;
      }
    if (asc < 0) break;
    y = reflect(asc, y);
  }
  return y;
}

std::string RootDatum::key() const {
  std::ostringstream os;
  os << n_ << ":";
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) os << a_[i][j] << ",";
  return os.str();
}

// --- roots -------------------------------------------------------------------

std::vector<std::vector<long long>> positive_roots_simple_coords(const RootDatum& g) {
  if (!g.finite_type()) fail(Errc::NotFiniteType, "positive roots need finite type");
  int n = g.rank();
  std::set<std::vector<long long>> roots;
  std::vector<std::vector<long long>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  auto pairing = [&](const std::vector<long long>& c, int i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += c[j] * g.a(i, j);
    return s;
  };
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& c : frontier) {
      for (int i = 0; i < n; ++i) {
        // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0 where p
        // is the depth of the alpha_i-string below beta.
        long long p = 0;
        std::vector<long long> down = c;
        while (true) {
          down[i] -= 1;
          bool neg = down[i] < 0;
          if (neg || !roots.count(down)) break;
          ++p;
        }
        if (p - pairing(c, i) <= 0) continue;
        std::vector<long long> up = c;
        up[i] += 1;
        if (roots.insert(up).second) next.push_back(up);
        if (roots.size() > 100000) fail(Errc::BudgetExceeded, "root closure too large");
      }
    }
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

std::vector<Weight> positive_roots(const RootDatum& g) {
  std::vector<Weight> out;
  for (const auto& c : positive_roots_simple_coords(g)) {
    Weight w = Weight::zero(g.rank());
    for (int j = 0; j < g.rank(); ++j)
      if (c[j] != 0) w = w + g.simple_root(j) * Rat(c[j]);
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight highest_root(const RootDatum& g) {
  auto coords = positive_roots_simple_coords(g);
  long long best = -1;
  std::vector<long long> arg;
  for (const auto& c : coords) {
    long long h = std::accumulate(c.begin(), c.end(), 0LL);
    if (h > best) {
      best = h;
      arg = c;
    }
  }
  Weight w = Weight::zero(g.rank());
  for (int j = 0; j < g.rank(); ++j)
    if (arg[j] != 0) w = w + g.simple_root(j) * Rat(arg[j]);
  return w;
}

std::set<Weight> weyl_orbit(const RootDatum& g, const Weight& w) {
  if (!g.finite_type()) fail(Errc::NotFiniteType, "orbit enumeration needs finite type");
  std::set<Weight> seen{w};
  std::deque<Weight> q{w};
  while (!q.empty()) {
    Weight x = q.front();
    q.pop_front();
    for (int i = 0; i < g.rank(); ++i) {
      Weight y = g.reflect(i, x);
      if (seen.insert(y).second) q.push_back(y);
    }
  }
  return seen;
}

std::set<Weight> orbit_bounded(const RootDatum& g, const Weight& w, int radius) {
  std::set<Weight> seen{w};
  std::deque<std::pair<Weight, int>> q{{w, 0}};
  while (!q.empty()) {
    auto [x, d] = q.front();
    q.pop_front();
    if (d == radius) continue;
    for (int i = 0; i < g.rank(); ++i) {
      Weight y = g.reflect(i, x);
      if (seen.insert(y).second) q.emplace_back(y, d + 1);
    }
  }
  return seen;
}

std::vector<Weight> positive_real_roots_bounded(const RootDatum& g, int radius) {
  const int n = g.rank();
  // Work in simple-root coordinates: reflections act without inverting the
  // Cartan matrix, and positivity is a sign readoff.
  std::set<std::vector<long long>> seen;
  std::deque<std::pair<std::vector<long long>, int>> q;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    q.emplace_back(e, 0);
  }
  auto pairing = [&](const std::vector<long long>& c, int i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += c[j] * g.a(i, j);
    return s;
  };
  std::set<std::vector<long long>> positives(seen);
  while (!q.empty()) {
    auto [c, d] = q.front();
    q.pop_front();
    if (d == radius) continue;
    for (int i = 0; i < n; ++i) {
      std::vector<long long> r = c;
      r[i] -= pairing(c, i);
      if (!seen.insert(r).second) continue;
      q.emplace_back(r, d + 1);
      bool pos = true;
      for (long long x : r) pos &= x >= 0;
      if (pos) positives.insert(r);
    }
  }
  std::vector<Weight> out;
  for (const auto& c : positives) {
    Weight w = Weight::zero(n);
    for (int j = 0; j < n; ++j)
      if (c[j] != 0) w = w + g.simple_root(j) * Rat(c[j]);
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rat> simple_root_coords(const RootDatum& g, const Weight& x) {
  if (!g.finite_type()) fail(Errc::NotFiniteType, "Cartan matrix not invertible");
  g.check_weight(x);
  int n = g.rank();
  // Solve A c = x by Gaussian elimination.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(g.a(i, j));
    m[i][n] = x[i];
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) fail(Errc::NotFiniteType, "singular Cartan matrix");
    std::swap(m[piv], m[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Rat> out(n);
  for (int i = 0; i < n; ++i) out[i] = m[i][n] / m[i][i];
  return out;
}

bool dominance_leq(const RootDatum& g, const Weight& lo, const Weight& hi, Cone cone) {
  std::vector<Rat> c = simple_root_coords(g, hi - lo);
  for (const Rat& x : c) {
    if (x < Rat(0)) return false;
    if (cone == Cone::NonnegIntegers && !x.is_integer()) return false;
  }
  return true;
}

Rat bilinear(const RootDatum& g, const Weight& x, const Weight& y) {
  std::vector<Rat> c = simple_root_coords(g, y);
  Rat s(0);
  for (int j = 0; j < g.rank(); ++j) s += Rat(g.symmetrizer()[j]) * x[j] * c[j];
  return s;
}

Rat pair_coroot(const RootDatum& g, const Weight& lambda, const Weight& beta) {
  Rat bb = bilinear(g, beta, beta);
  if (bb.is_zero()) fail(Errc::NotARoot, "zero-length vector has no coroot");
  return Rat(2) * bilinear(g, lambda, beta) / bb;
}

// --- Weyl words ----------------------------------------------------------------

int weyl_length(const RootDatum& g, const WeylWord& w) {
  int count = 0;
  for (const Weight& beta : positive_roots(g)) {
    std::vector<Rat> c = simple_root_coords(g, g.apply(w, beta));
    for (const Rat& x : c) {
      if (x < Rat(0)) {
        ++count;
        break;
      }
      if (x > Rat(0)) break;
    }
  }
  return count;
}

bool is_reduced(const RootDatum& g, const WeylWord& w) {
  return weyl_length(g, w) == static_cast<int>(w.letters.size());
}

bool weyl_equal(const RootDatum& g, const WeylWord& u, const WeylWord& w) {
  Weight ref = g.rho();
  return g.apply(u, ref) == g.apply(w, ref);
}

WeylWord longest_element(const RootDatum& g) {
  return g.dominant_representative(-g.rho()).second;
}

// --- subdiagrams -----------------------------------------------------------------

SubdiagramReport subdiagram_classify(const RootDatum& g, const std::vector<int>& nodes) {
  for (int v : nodes) g.check_index(v);
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  SubdiagramReport rep;
  if (sorted.empty()) {
    rep.connected = true;
    rep.ade = true;
    return rep;
  }
  Mat sub = submatrix(g.matrix(), sorted);
  auto comps = connected_components(sub);
  rep.connected = comps.size() == 1;
  rep.ade = true;
  for (const auto& comp : comps) {
    Mat cm = submatrix(sub, comp);
    SubdiagramComponent c;
    for (int local : comp) c.nodes.push_back(sorted[local]);
    if (leading_minors_positive(cm)) {
      c.label = recognize_finite_label(cm);
    } else {
      c.label = "?";
    }
    char fam = c.label.empty() ? '?' : c.label[0];
    if (fam != 'A' && fam != 'D' && fam != 'E') rep.ade = false;
    rep.components.push_back(std::move(c));
  }
  return rep;
}

}  // namespace lsc
