#include "doctest.h"

#include "lsc/deepchamber.hpp"
#include "test_oracles.hpp"

using namespace lsc;

namespace {

Weight W(std::vector<long long> v) {
  std::vector<Rat> c(v.begin(), v.end());
  return Weight(std::move(c));
}

}  // namespace

TEST_CASE("deep condition") {
  RootDatum a2 = RootDatum::from_type("A2");
  CHECK(is_deep(a2, W({2, 2}), W({1, 1})));
  CHECK(!is_deep(a2, W({1, 0}), W({1, 0})));  // (1,0) + w_0(1,0) = (1,-1)
  CHECK(is_deep(a2, W({1, 0}), Weight::zero(2)));
  CHECK(is_deep(a2, W({3, 1}), W({1, 0})));
  CHECK_THROWS_AS(is_deep(a2, W({-1, 0}), W({1, 1})), Error);
}

TEST_CASE("polytope membership by dominance") {
  RootDatum a1 = RootDatum::from_type("A1");
  ShiftedWeylPolytope interval{W({3}), W({1})};  // [2w, 4w]
  CHECK(polytope_contains_point(a1, interval, W({4})));
  CHECK(polytope_contains_point(a1, interval, W({2})));
  CHECK(polytope_contains_point(a1, interval, W({3})));
  CHECK(!polytope_contains_point(a1, interval, W({5})));
  CHECK(!polytope_contains_point(a1, interval, W({1})));

  RootDatum a2 = RootDatum::from_type("A2");
  ShiftedWeylPolytope hull{Weight::zero(2), a2.rho()};
  CHECK(polytope_contains_point(a2, hull, a2.rho() * Rat(1, 2)));  // rational point
  for (const Weight& v : polytope_vertices(a2, hull))
    CHECK(polytope_contains_point(a2, hull, v));
  CHECK(!polytope_contains_point(a2, hull, W({2, 0})));
}

TEST_CASE("membership agrees with the simplex-search oracle") {
  for (const char* type : {"A1", "A2", "B2", "A3"}) {
    RootDatum g = RootDatum::from_type(type);
    ShiftedWeylPolytope p{g.rho(), g.rho() + g.fundamental_weight(0)};
    std::vector<Weight> verts = polytope_vertices(g, p);
    // probe a grid of rational points around the polytope
    std::vector<Rat> probes{Rat(0), Rat(1), Rat(2), Rat(1, 2), Rat(5, 2), Rat(-1)};
    int agreements = 0;
    for (const Rat& a : probes)
      for (const Rat& b : probes) {
        std::vector<Rat> c(g.rank(), b);
        c[0] = a;
        Weight x{std::move(c)};
        bool fast = polytope_contains_point(g, p, x);
        bool slow = testing::caratheodory_member(g, verts, x);
        CHECK(fast == slow);
        ++agreements;
      }
    CHECK(agreements == 36);
  }
}

TEST_CASE("vertices satisfy the ambient sandwich") {
  RootDatum a2 = RootDatum::from_type("A2");
  Weight mu = W({2, 1}), nu = W({1, 1});
  Weight lambda = mu + nu;
  Weight low = mu + a2.antidominant_representative(nu);
  for (const Weight& v : polytope_vertices(a2, ShiftedWeylPolytope{mu, nu})) {
    CHECK(dominance_leq(a2, v, lambda, Cone::NonnegRationals));
    CHECK(dominance_leq(a2, low, v, Cone::NonnegRationals));
  }
}

TEST_CASE("polytope containment") {
  RootDatum a1 = RootDatum::from_type("A1");
  CHECK(polytope_contained(a1, Quadruple::of(W({3}), W({1}), W({4}), W({0}))));
  RootDatum a2 = RootDatum::from_type("A2");
  Quadruple refl = Quadruple::of(W({2, 2}), W({1, 1}), W({2, 2}), W({1, 1}));
  CHECK(polytope_contained(a2, refl));
  // a strictly bigger inner polytope is rejected
  CHECK(!polytope_contained(a2, Quadruple::of(W({3, 3}), W({0, 0}), W({2, 2}), W({1, 1}))));
}

TEST_CASE("edge lengths") {
  RootDatum a2 = RootDatum::from_type("A2");
  CHECK(edge_beta_length(a2, WeylWord::identity(), 0, a2.rho()) == 1);
  CHECK(edge_beta_length(a2, WeylWord{{0}}, 1, a2.rho()) == 2);
  CHECK(edge_beta_length(a2, WeylWord::identity(), 1, W({3, 0})) == 0);  // degenerate edge
  CHECK_THROWS_AS(edge_beta_length(a2, WeylWord{{0}}, 0, a2.rho()), Error);
}

TEST_CASE("lifting replay") {
  RootDatum a1 = RootDatum::from_type("A1");
  LiftReport triv = lifting_check(a1, W({1}), W({0}), {0}, {});
  CHECK(triv.pass);

  LiftReport basic = lifting_check(a1, W({1}), W({1}), {0}, {});
  CHECK(basic.applicable_primed);
  CHECK(basic.applicable_lifted);
  CHECK(basic.pass);

  RootDatum a2 = RootDatum::from_type("A2");
  std::vector<std::vector<int>> words = {{0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}, {1, 0, 1},
                                         {0, 1, 1}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1, 0}};
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      LiftReport rep = lifting_check(a2, a2.rho(), a2.rho(), w1, w2);
      CHECK(rep.pass);
    }
}

TEST_CASE("deep products decompose weight by weight") {
  RootDatum a2 = RootDatum::from_type("A2");
  Decomposition d = deep_decompose(a2, W({2, 2}), W({1, 1}));
  std::map<Weight, long long> expected{{W({3, 3}), 1}, {W({1, 4}), 1}, {W({4, 1}), 1},
                                       {W({0, 3}), 1}, {W({3, 0}), 1}, {W({1, 1}), 1},
                                       {W({2, 2}), 2}};
  CHECK(d.mult == expected);
  CHECK(d.mult == decompose(a2, W({2, 2}), W({1, 1})).mult);

  RootDatum a1 = RootDatum::from_type("A1");
  Decomposition cg = deep_decompose(a1, W({5}), W({2}));
  CHECK(cg.mult == std::map<Weight, long long>{{W({7}), 1}, {W({5}), 1}, {W({3}), 1}});

  CHECK(deep_decompose(a2, W({2, 1}), Weight::zero(2)).mult ==
        std::map<Weight, long long>{{W({2, 1}), 1}});

  CHECK_THROWS_AS(deep_decompose(a2, W({1, 0}), W({1, 0})), Error);
}

TEST_CASE("containment under the star hypothesis for deep pairs") {
  RootDatum a1 = RootDatum::from_type("A1");
  CHECK(deep_star_containment(a1, Quadruple::of(W({3}), W({1}), W({4}), W({0}))));

  RootDatum a2 = RootDatum::from_type("A2");
  Quadruple eq = Quadruple::of(W({2, 2}), W({1, 1}), W({2, 2}), W({1, 1}));
  CHECK(deep_star_containment(a2, eq));

  Quadruple shallow = Quadruple::of(W({1, 0}), W({1, 0}), W({2, 0}), W({0, 0}));
  CHECK_THROWS_AS(deep_star_containment(a2, shallow), Error);
}

TEST_CASE("demazure containment replay") {
  RootDatum a2 = RootDatum::from_type("A2");
  Weight rho = a2.rho(), two_rho = rho + rho;

  DemazureContainment id = demazure_word_containment(a2, two_rho, rho, WeylWord::identity(), {});
  CHECK(id.antecedent);  // the extremal element is its own Demazure crystal
  CHECK(id.pass);

  WeylWord w{{0, 1}};
  DemazureContainment empty = demazure_word_containment(a2, two_rho, rho, w, {});
  CHECK(empty.antecedent);
  CHECK(empty.conclusion);

  for (const std::vector<int>& word :
       {std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{0, 1},
        std::vector<int>{1, 0}, std::vector<int>{0, 1, 0}}) {
    DemazureContainment rep = demazure_word_containment(a2, two_rho, rho, w, word);
    CHECK(rep.pass);
  }

  CHECK_THROWS_AS(demazure_word_containment(a2, rho, two_rho, w, {}), Error);
}
