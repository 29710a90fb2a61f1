#include "doctest.h"

#include <algorithm>
#include <set>

#include "lsc/rootdata.hpp"

using namespace lsc;

namespace {

Weight W(std::vector<long long> v) {
  std::vector<Rat> c(v.begin(), v.end());
  return Weight(std::move(c));
}

}  // namespace

TEST_CASE("gcm validation and classification") {
  RootDatum a2 = RootDatum::from_matrix({{2, -1}, {-1, 2}});
  CHECK(a2.label() == "A2");
  CHECK(a2.type_class() == TypeClass::Finite);
  CHECK(a2.simply_laced());

  RootDatum a1aff = RootDatum::from_matrix({{2, -2}, {-2, 2}});
  CHECK(a1aff.type_class() == TypeClass::Affine);
  CHECK(a1aff.label() == "A1~");

  // Principal minors 2 and 1 are positive, so this is finite (G2 shape).
  RootDatum g2 = RootDatum::from_matrix({{2, -1}, {-3, 2}});
  CHECK(g2.type_class() == TypeClass::Finite);
  CHECK(g2.label() == "G2");

  CHECK_THROWS_AS(RootDatum::from_matrix({{1, 0}, {0, 2}}), Error);      // diagonal
  CHECK_THROWS_AS(RootDatum::from_matrix({{2, 1}, {1, 2}}), Error);      // positive off-diag
  CHECK_THROWS_AS(RootDatum::from_matrix({{2, -1}, {0, 2}}), Error);     // zero symmetry
  CHECK_THROWS_AS(RootDatum::from_matrix({{2}, {2, 2}}), Error);         // not square

  // 3-cycle whose edge ratios cannot be balanced: valid GCM axioms but
  // not symmetrizable.
  CHECK_THROWS_AS(RootDatum::from_matrix({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}), Error);
}

TEST_CASE("standard types round-trip through classification") {
  for (const char* label : {"A1", "A2", "A5", "B2", "B3", "C3", "D4", "D5",
                            "E6", "E7", "E8", "F4", "G2"}) {
    RootDatum g = RootDatum::from_type(label);
    CHECK(g.type_class() == TypeClass::Finite);
    CHECK(g.label() == label);
  }
  // B2 and C2 coincide up to relabeling; classification canonicalizes to B2.
  CHECK(RootDatum::from_type("C2").label() == "B2");
  CHECK(RootDatum::from_type("A2xA1").label() == "A2xA1");
  CHECK(RootDatum::from_type("A2~").type_class() == TypeClass::Affine);
  CHECK(RootDatum::from_type("D4~").label() == "D4~");

  RootDatum indef = RootDatum::from_matrix({{2, -2, -1}, {-2, 2, -1}, {-1, -1, 2}});
  CHECK(indef.type_class() == TypeClass::Indefinite);
}

TEST_CASE("symmetrizer") {
  RootDatum b2 = RootDatum::from_type("B2");
  CHECK(b2.symmetrizer() == std::vector<long long>{2, 1});
  RootDatum g2 = RootDatum::from_type("G2");
  CHECK(g2.symmetrizer() == std::vector<long long>{1, 3});
  RootDatum a3 = RootDatum::from_type("A3");
  CHECK(a3.symmetrizer() == std::vector<long long>{1, 1, 1});
}

TEST_CASE("pairing and reflection") {
  RootDatum a2 = RootDatum::from_type("A2");
  CHECK(a2.pair(W({1, 2}), 0) == Rat(1));
  CHECK(a2.pair(a2.simple_root(0), 1) == Rat(-1));
  RootDatum a3 = RootDatum::from_type("A3");
  CHECK(a3.pair(a3.rho(), 2) == Rat(1));
  CHECK_THROWS_AS(a2.pair(W({1, 1}), 5), Error);

  CHECK(a2.reflect(0, W({1, 1})) == W({-1, 2}));
  CHECK(a2.reflect(1, W({3, 0})) == W({3, 0}));  // fixed point
  RootDatum a1 = RootDatum::from_type("A1");
  CHECK(a1.reflect(0, W({5})) == W({-5}));

  // involution on a sample of weights
  for (long long x = -2; x <= 2; ++x)
    for (long long y = -2; y <= 2; ++y)
      for (int i = 0; i < 2; ++i)
        CHECK(a2.reflect(i, a2.reflect(i, W({x, y}))) == W({x, y}));
}

TEST_CASE("dominant representative") {
  RootDatum a2 = RootDatum::from_type("A2");
  auto [d1, w1] = a2.dominant_representative(W({-1, 2}));
  CHECK(d1 == W({1, 1}));
  CHECK(w1.letters == std::vector<int>{0});

  auto [d2, w2] = a2.dominant_representative(W({2, 0}));
  CHECK(d2 == W({2, 0}));
  CHECK(w2.empty());

  auto [d3, w3] = a2.dominant_representative(W({-1, -1}));
  CHECK(d3 == W({1, 1}));
  CHECK(w3.size() == 3);  // -rho = w_0 rho, and l(w_0) = 3 in A2
  CHECK(a2.apply(w3, W({-1, -1})) == W({1, 1}));

  CHECK(a2.antidominant_representative(W({1, 1})) == W({-1, -1}));
}

TEST_CASE("positive roots") {
  RootDatum a2 = RootDatum::from_type("A2");
  auto r = positive_roots(a2);
  CHECK(r.size() == 3);
  CHECK(std::count(r.begin(), r.end(), W({1, 1})) == 1);  // theta = alpha1 + alpha2

  CHECK(positive_roots(RootDatum::from_type("A3")).size() == 6);
  CHECK(positive_roots(RootDatum::from_type("B2")).size() == 4);
  CHECK(positive_roots(RootDatum::from_type("D4")).size() == 12);
  CHECK(positive_roots(RootDatum::from_type("G2")).size() == 6);
  CHECK(positive_roots(RootDatum::from_type("F4")).size() == 24);

  CHECK_THROWS_AS(positive_roots(RootDatum::from_type("A1~")), Error);

  // Every positive root reflects to a dominant root.
  RootDatum b2 = RootDatum::from_type("B2");
  auto roots = positive_roots(b2);
  for (const Weight& beta : roots) {
    Weight dom = b2.dominant_representative(beta).first;
    CHECK(dom.dominant());
    CHECK(std::count(roots.begin(), roots.end(), dom) == 1);
  }
  CHECK(highest_root(a2) == W({1, 1}));
}

TEST_CASE("weyl orbits") {
  RootDatum a2 = RootDatum::from_type("A2");
  CHECK(weyl_orbit(a2, a2.rho()).size() == 6);
  std::set<Weight> omega1_orbit = weyl_orbit(a2, W({1, 0}));
  CHECK(omega1_orbit == std::set<Weight>{W({1, 0}), W({-1, 1}), W({0, -1})});
  CHECK(weyl_orbit(a2, Weight::zero(2)) == std::set<Weight>{Weight::zero(2)});

  // |W| via the regular orbit, classical orders
  CHECK(weyl_orbit(RootDatum::from_type("A3"), RootDatum::from_type("A3").rho()).size() == 24);
  CHECK(weyl_orbit(RootDatum::from_type("B2"), RootDatum::from_type("B2").rho()).size() == 8);
  CHECK(weyl_orbit(RootDatum::from_type("G2"), RootDatum::from_type("G2").rho()).size() == 12);
  CHECK(weyl_orbit(RootDatum::from_type("D4"), RootDatum::from_type("D4").rho()).size() == 192);

  CHECK(orbit_bounded(a2, a2.rho(), 1).size() == 3);
}

TEST_CASE("dominance order") {
  RootDatum a2 = RootDatum::from_type("A2");
  CHECK(dominance_leq(a2, Weight::zero(2), a2.rho(), Cone::NonnegIntegers));
  CHECK(!dominance_leq(a2, W({1, 0}), W({0, 1}), Cone::NonnegIntegers));
  CHECK(dominance_leq(a2, W({1, 1}), W({1, 1}), Cone::NonnegIntegers));
  // omega2 - omega1 has simple-root coordinates (-1/3, 1/3)
  auto c = simple_root_coords(a2, W({0, 1}) - W({1, 0}));
  CHECK(c == std::vector<Rat>{Rat(-1, 3), Rat(1, 3)});
  // rational cone admits fractional coefficients
  CHECK(dominance_leq(a2, a2.rho() * Rat(1, 2), a2.rho(), Cone::NonnegRationals));
  CHECK(!dominance_leq(a2, a2.rho() * Rat(1, 2), a2.rho(), Cone::NonnegIntegers));
}

TEST_CASE("dominance is a partial order on sampled dominant weights") {
  RootDatum a2 = RootDatum::from_type("A2");
  std::vector<Weight> box;
  for (long long x = 0; x <= 2; ++x)
    for (long long y = 0; y <= 2; ++y) box.push_back(W({x, y}));
  for (const Weight& a : box) {
    CHECK(dominance_leq(a2, a, a, Cone::NonnegIntegers));
    for (const Weight& b : box) {
      if (a != b) {
        bool ab = dominance_leq(a2, a, b, Cone::NonnegIntegers);
        bool ba = dominance_leq(a2, b, a, Cone::NonnegIntegers);
        CHECK(!(ab && ba));
      }
      for (const Weight& cw : box) {
        if (dominance_leq(a2, a, b, Cone::NonnegIntegers) &&
            dominance_leq(a2, b, cw, Cone::NonnegIntegers))
          CHECK(dominance_leq(a2, a, cw, Cone::NonnegIntegers));
      }
    }
  }
}

TEST_CASE("bilinear form and coroot pairings") {
  RootDatum b2 = RootDatum::from_type("B2");
  // (alpha_i, alpha_i) = 2 d_i
  CHECK(bilinear(b2, b2.simple_root(0), b2.simple_root(0)) == Rat(4));
  CHECK(bilinear(b2, b2.simple_root(1), b2.simple_root(1)) == Rat(2));
  // simple coroot pairing recovers the matrix
  CHECK(pair_coroot(b2, b2.simple_root(1), b2.simple_root(0)) == Rat(-1));
  CHECK(pair_coroot(b2, b2.simple_root(0), b2.simple_root(1)) == Rat(-2));
  // symmetry on a few samples
  RootDatum g2 = RootDatum::from_type("G2");
  CHECK(bilinear(g2, W({1, 2}), W({3, 1})) == bilinear(g2, W({3, 1}), W({1, 2})));
}

TEST_CASE("weyl word machinery") {
  RootDatum a2 = RootDatum::from_type("A2");
  WeylWord s0{{0}}, s01{{0, 1}}, s010{{0, 1, 0}}, s101{{1, 0, 1}};
  CHECK(weyl_length(a2, WeylWord::identity()) == 0);
  CHECK(weyl_length(a2, s0) == 1);
  CHECK(weyl_length(a2, s01) == 2);
  CHECK(weyl_length(a2, s010) == 3);
  CHECK(is_reduced(a2, s010));
  CHECK(!is_reduced(a2, WeylWord{{0, 0}}));
  CHECK(weyl_equal(a2, s010, s101));  // both are w_0
  CHECK(!weyl_equal(a2, s0, s01));

  WeylWord w0 = longest_element(a2);
  CHECK(w0.size() == 3);
  CHECK(is_reduced(a2, w0));
  CHECK(a2.apply(w0, a2.rho()) == -a2.rho());

  CHECK(longest_element(RootDatum::from_type("A3")).size() == 6);
  CHECK(longest_element(RootDatum::from_type("D4")).size() == 12);
}

TEST_CASE("subdiagram classification") {
  RootDatum a5 = RootDatum::from_type("A5");
  auto r1 = subdiagram_classify(a5, {0, 1, 2});
  CHECK(r1.connected);
  CHECK(r1.ade);
  REQUIRE(r1.components.size() == 1);
  CHECK(r1.components[0].label == "A3");

  RootDatum d4 = RootDatum::from_type("D4");
  auto r2 = subdiagram_classify(d4, {0, 1, 2, 3});
  CHECK(r2.connected);
  CHECK(r2.ade);
  CHECK(r2.components[0].label == "D4");

  auto r3 = subdiagram_classify(a5, {0, 2, 4});
  CHECK(!r3.connected);
  CHECK(r3.ade);
  CHECK(r3.components.size() == 3);
  for (const auto& c : r3.components) CHECK(c.label == "A1");

  RootDatum b3 = RootDatum::from_type("B3");
  auto r4 = subdiagram_classify(b3, {1, 2});
  CHECK(r4.connected);
  CHECK(!r4.ade);
  CHECK(r4.components[0].label == "B2");
}
