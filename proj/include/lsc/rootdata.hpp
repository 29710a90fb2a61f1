#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lsc/rational.hpp"

namespace lsc {

// A weight written in the fundamental-weight basis, so pairing with the
// i-th simple coroot is a coordinate readoff and the j-th simple root is
// the j-th column of the Cartan matrix.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rat> coords) : c_(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<Rat>(rank)); }

  int rank() const { return static_cast<int>(c_.size()); }
  const Rat& operator[](int i) const { return c_[i]; }
  Rat& operator[](int i) { return c_[i]; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;
  bool integral() const;
  bool dominant() const;            // all pairings >= 0
  bool regular_dominant() const;    // all pairings >= 1

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(const Rat& k) const;

  bool operator==(const Weight& o) const { return c_ == o.c_; }
  std::strong_ordering operator<=>(const Weight& o) const { return c_ <=> o.c_; }

  std::string to_string() const;

 private:
  std::vector<Rat> c_;
};

// A Weyl group element as a word in the simple reflections; letters act
// left to right, i.e. the word [i, j] sends x to s_i(s_j(x)). Equality of
// group elements is decided by the action on a regular dominant weight.
struct WeylWord {
  std::vector<int> letters;

  static WeylWord identity() { return {}; }
  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
};

enum class TypeClass { Finite, Affine, Indefinite };

inline const char* type_class_name(TypeClass t) {
  switch (t) {
    case TypeClass::Finite: return "finite";
    case TypeClass::Affine: return "affine";
    case TypeClass::Indefinite: return "indefinite";
  }
  return "?";
}

// Validated generalized Cartan matrix together with the derived data every
// other module needs: type classification, a positive integral symmetrizer,
// and the Weyl action. Immutable after construction; all member functions
// are const and safe to call concurrently.
class RootDatum {
 public:
  // validate_gcm: checks the GCM axioms, computes a symmetrizer and the
  // finite/affine/indefinite classification with a type label.
  static RootDatum from_matrix(const std::vector<std::vector<long long>>& a);

  // Standard Cartan matrices, nodes numbered as in Kac's tables.
  // Accepts "A3", "B2", "C4", "D4", "E6".."E8", "F4", "G2", "A1~", and
  // products such as "A2xA1".
  static RootDatum from_type(const std::string& label);

  int rank() const { return n_; }
  long long a(int i, int j) const { return a_[i][j]; }
  const std::vector<std::vector<long long>>& matrix() const { return a_; }

  TypeClass type_class() const { return type_class_; }
  const std::string& label() const { return label_; }
  bool finite_type() const { return type_class_ == TypeClass::Finite; }
  bool simply_laced() const;

  // Symmetrizer d with d_i a_ij = d_j a_ji, positive integers with gcd 1
  // per connected component.
  const std::vector<long long>& symmetrizer() const { return sym_; }

  void check_index(int i) const;
  void check_weight(const Weight& w) const;

  Weight simple_root(int j) const;       // column j of the Cartan matrix
  Weight fundamental_weight(int i) const;
  Weight rho() const;                    // all coordinates 1

  // lambda(alpha_i^vee)
  Rat pair(const Weight& w, int i) const;

  // s_i(w) = w - w(alpha_i^vee) alpha_i
  Weight reflect(int i, const Weight& w) const;

  Weight apply(const WeylWord& w, const Weight& x) const;

  // Unique dominant element of the Weyl orbit plus a word carrying x to it.
  // Requires finite type.
  std::pair<Weight, WeylWord> dominant_representative(const Weight& x) const;

  // Unique antidominant element of the orbit (w_0 applied to the dominant
  // representative). Requires finite type.
  Weight antidominant_representative(const Weight& x) const;

  std::string key() const;  // canonical serialization, used as cache key

 private:
  RootDatum() = default;

  int n_ = 0;
  std::vector<std::vector<long long>> a_;
  std::vector<long long> sym_;
  TypeClass type_class_ = TypeClass::Indefinite;
  std::string label_;
};

// --- Roots, orbits, dominance -------------------------------------------

// All positive roots in the fundamental-weight basis, by height closure
// from the simple roots. Requires finite type.
std::vector<Weight> positive_roots(const RootDatum& g);

// Positive roots as coefficient vectors on the simple roots.
std::vector<std::vector<long long>> positive_roots_simple_coords(const RootDatum& g);

// Highest root of an irreducible finite root system.
Weight highest_root(const RootDatum& g);

// Full Weyl orbit by closure under the simple reflections. Requires finite
// type (use orbit_bounded for a word-length-limited search otherwise).
std::set<Weight> weyl_orbit(const RootDatum& g, const Weight& w);

// Orbit elements reachable with at most `radius` simple reflections.
std::set<Weight> orbit_bounded(const RootDatum& g, const Weight& w, int radius);

// Positive real roots reachable from the simple roots with at most `radius`
// reflections; the bounded substitute for the full enumeration outside
// finite type.
std::vector<Weight> positive_real_roots_bounded(const RootDatum& g, int radius);

enum class Cone { NonnegIntegers, NonnegRationals };

// True iff hi - lo is a combination of simple roots with coefficients in
// the chosen cone (dominance order for NonnegIntegers). Requires finite type.
bool dominance_leq(const RootDatum& g, const Weight& lo, const Weight& hi, Cone cone);

// Coefficients of x on the simple roots (solves the Cartan system exactly).
std::vector<Rat> simple_root_coords(const RootDatum& g, const Weight& x);

// Symmetrized invariant form normalized so (alpha_i, alpha_i) = 2 d_i.
Rat bilinear(const RootDatum& g, const Weight& x, const Weight& y);

// lambda(beta^vee) = 2 (lambda, beta) / (beta, beta) for a root beta.
Rat pair_coroot(const RootDatum& g, const Weight& lambda, const Weight& beta);

// --- Weyl words -----------------------------------------------------------

// Length as number of positive roots sent negative. Requires finite type.
int weyl_length(const RootDatum& g, const WeylWord& w);
bool is_reduced(const RootDatum& g, const WeylWord& w);
bool weyl_equal(const RootDatum& g, const WeylWord& u, const WeylWord& w);
WeylWord longest_element(const RootDatum& g);  // some reduced word for w_0

// --- Subdiagram classification -------------------------------------------

struct SubdiagramComponent {
  std::string label;            // "A3", "B2", ... or "?" when not finite
  std::vector<int> nodes;       // original indices, ascending
};

struct SubdiagramReport {
  bool connected = false;
  bool ade = false;             // disjoint union of finite A/D/E components
  std::vector<SubdiagramComponent> components;
};

SubdiagramReport subdiagram_classify(const RootDatum& g, const std::vector<int>& nodes);

}  // namespace lsc
