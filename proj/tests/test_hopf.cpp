#include "doctest.h"
#include "helpers.hpp"
#include "treehopf/hopf.hpp"

using namespace treehopf;

namespace {

const Alphabet kOne;
const Alphabet kTwo = Alphabet::from_csv("1,2");
const Alphabet kAbc = Alphabet::from_csv("1,2,3");

Word w(const std::string& s, const Alphabet& a = kTwo) { return parse_word(s, a); }
Forest f(const std::string& s, const Alphabet& a = kOne) { return parse_forest(s, a); }
PlanarForest p(const std::string& s, const Alphabet& a = kAbc) { return parse_planar(s, a); }

}  // namespace

TEST_CASE("shuffle product") {
  CHECK(shuffle(w("1"), w("2")) == LinComb<Word>::single(w("12")) + LinComb<Word>::single(w("21")));
  CHECK(shuffle(w("12"), Word{}) == LinComb<Word>::single(w("12")));
  LinComb<Word> expect = LinComb<Word>::single(w("112"), 2) + LinComb<Word>::single(w("121"));
  CHECK(shuffle(w("12"), w("1")) == expect);
}

TEST_CASE("deconcatenation and its duality with concatenation") {
  TensorLC<Word> d = deconcat(w("12"));
  TensorLC<Word> expect;
  expect.add({Word{}, w("12")}, 1);
  expect.add({w("1"), w("2")}, 1);
  expect.add({w("12"), Word{}}, 1);
  CHECK(d == expect);
  CHECK(concat(Word{}, w("21")) == w("21"));

  // <delta_a . delta_b, x> = <delta_a (x) delta_b, deconcat(x)> for deg <= 4
  for (int dx = 0; dx <= 4; ++dx)
    for (const Word& x : words_of_degree(dx, kTwo)) {
      auto dec = deconcat(x);
      for (int da = 0; da <= dx; ++da)
        for (const Word& a : words_of_degree(da, kTwo))
          for (const Word& b : words_of_degree(dx - da, kTwo)) {
            Rational lhs = concat(a, b) == x ? 1 : 0;
            CHECK(dec.coeff({a, b}) == lhs);
          }
    }
}

TEST_CASE("BCK coproduct") {
  SUBCASE("single vertex") {
    TensorLC<Forest> expect;
    expect.add({f("[]"), Forest{}}, 1);
    expect.add({Forest{}, f("[]")}, 1);
    CHECK(bck_coproduct(f("[]")) == expect);
  }
  SUBCASE("one edge") {
    TensorLC<Forest> expect;
    expect.add({f("[[]]"), Forest{}}, 1);
    expect.add({Forest{}, f("[[]]")}, 1);
    expect.add({f("[]"), f("[]")}, 1);
    CHECK(bck_coproduct(f("[[]]")) == expect);
  }
  SUBCASE("cherry") {
    TensorLC<Forest> expect;
    expect.add({f("[[][]]"), Forest{}}, 1);
    expect.add({Forest{}, f("[[][]]")}, 1);
    expect.add({f("[]"), f("[[]]")}, 2);
    expect.add({f("[] []"), f("[]")}, 1);
    CHECK(bck_coproduct(f("[[][]]")) == expect);
  }
  SUBCASE("multiplicative on forests") {
    for (int da = 1; da + 1 <= 4; ++da)
      for (const Forest& a : forests_of_degree(da, kOne))
        for (const Forest& b : forests_of_degree(4 - da, kOne)) {
          TensorLC<Forest> lhs = bck_coproduct(forest_mul(a, b));
          TensorLC<Forest> rhs;
          for (const auto& [x, cx] : bck_coproduct(a))
            for (const auto& [y, cy] : bck_coproduct(b))
              rhs.add({forest_mul(x.first, y.first), forest_mul(x.second, y.second)}, cx * cy);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("CEFM coproduct") {
  {
    TensorLC<Forest> expect;
    expect.add({f("[]"), f("[]")}, 1);
    CHECK(cefm_coproduct(f("[]")) == expect);
  }
  {
    TensorLC<Forest> expect;
    expect.add({f("[] []"), f("[[]]")}, 1);
    expect.add({f("[[]]"), f("[]")}, 1);
    CHECK(cefm_coproduct(f("[[]]")) == expect);
  }
  {
    // left legs of the worked contraction example
    auto val = cefm_coproduct(f("[[[]][]]"));
    LinComb<Forest> left_legs;
    for (const auto& [k, c] : val) left_legs.add(k.first, c);
    CHECK(left_legs.coeff(f("[] [] [] []")) == 1);
    CHECK(left_legs.coeff(f("[[]] [] []")) == 3);   // three 2-vertex blocks
    CHECK(left_legs.coeff(f("[[[]]] []")) == 1);
    CHECK(left_legs.coeff(f("[[][]] []")) == 1);
    CHECK(left_legs.coeff(f("[[]] [[]]")) == 1);
    CHECK(left_legs.coeff(f("[[[]][]]")) == 1);
    // right legs attached to [[]] [] []
    TensorLC<Forest> expect_part;
    CHECK(val.coeff({f("[[]] [] []"), f("[[][]]")}) == 2);
    CHECK(val.coeff({f("[[]] [] []"), f("[[[]]]")}) == 1);
  }
  CHECK_THROWS_AS(cefm_coproduct(parse_forest("[2]", kTwo)), std::domain_error);
}

TEST_CASE("MKW coproduct") {
  SUBCASE("no edges") {
    TensorLC<PlanarForest> expect;
    expect.add({p("[1]"), PlanarForest{}}, 1);
    expect.add({PlanarForest{}, p("[1]")}, 1);
    CHECK(mkw_coproduct(p("[1]")) == expect);
  }
  SUBCASE("paper-oriented example tree") {
    TensorLC<PlanarForest> expect;
    expect.add({p("[1[3][2]]"), PlanarForest{}}, 1);
    expect.add({PlanarForest{}, p("[1[3][2]]")}, 1);
    expect.add({p("[2]"), p("[1[3]]")}, 1);
    expect.add({p("[3] [2]"), p("[1]")}, 1);
    CHECK(mkw_coproduct(p("[1[3][2]]")) == expect);
    // the mirror single cut is not admissible
    CHECK(mkw_coproduct(p("[1[2][3]]")).coeff({p("[2]"), p("[1[3]]")}) == 0);
    CHECK(mkw_coproduct(p("[1[2][3]]")).coeff({p("[3]"), p("[1[2]]")}) == 1);
  }
  SUBCASE("duality with the planar Grossman-Larson product") {
    auto check_duality = [](const Alphabet& a, int cap) {
      for (int dx = 0; dx <= cap; ++dx)
        for (const PlanarForest& x : planar_forests_of_degree(dx, a)) {
          auto cop = mkw_coproduct(x);
          for (int dl = 0; dl <= dx; ++dl)
            for (const PlanarForest& l : planar_forests_of_degree(dl, a))
              for (const PlanarForest& r : planar_forests_of_degree(dx - dl, a))
                CHECK(cop.coeff({l, r}) == gl_planar(l, r).coeff(x));
        }
    };
    check_duality(kOne, 4);
    check_duality(kTwo, 3);
  }
}

TEST_CASE("pre-Lie grafting") {
  CHECK(prelie_graft(t_vertex(0), t_vertex(0)) == LinComb<Tree>::single(f("[[]]").trees[0]));
  LinComb<Tree> expect = LinComb<Tree>::single(f("[[][]]").trees[0]) +
                         LinComb<Tree>::single(f("[[[]]]").trees[0]);
  CHECK(prelie_graft(t_vertex(0), f("[[]]").trees[0]) == expect);

  SUBCASE("left pre-Lie relation on generator triples") {
    auto graft = [](const LinComb<Tree>& a, const LinComb<Tree>& b) {
      return prelie_graft_lc(a, b);
    };
    std::vector<Tree> gens;
    for (int d = 1; d <= 3; ++d)
      for (const Tree& t : trees_of_degree(d, kTwo)) gens.push_back(t);
    for (const Tree& x : gens)
      for (const Tree& y : gens)
        for (const Tree& z : gens) {
          if (x.degree() + y.degree() + z.degree() > 5) continue;
          auto X = LinComb<Tree>::single(x);
          auto Y = LinComb<Tree>::single(y);
          auto Z = LinComb<Tree>::single(z);
          auto lhs = graft(X, graft(Y, Z)) - graft(graft(X, Y), Z);
          auto rhs = graft(Y, graft(X, Z)) - graft(graft(Y, X), Z);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("post-Lie grafting") {
  CHECK(postlie_graft(p("[1]"), p("[2]")) == LinComb<PlanarForest>::single(p("[2[1]]")));
  // grafting appends in bracket order (paper's factorization fixes this)
  LinComb<PlanarForest> expect =
      LinComb<PlanarForest>::single(p("[2[3][1]]")) + LinComb<PlanarForest>::single(p("[2[3[1]]]"));
  CHECK(postlie_graft(p("[1]"), p("[2[3]]")) == expect);

  SUBCASE("post-Lie relations with the concatenation bracket") {
    auto cat = [](const LinComb<PlanarForest>& a, const LinComb<PlanarForest>& b) {
      return of_concat_lc(a, b);
    };
    auto graft = [](const LinComb<PlanarForest>& a, const LinComb<PlanarForest>& b) {
      return postlie_graft_lc(a, b);
    };
    std::vector<PlanarForest> gens;
    for (int d = 1; d <= 2; ++d)
      for (const PlanarTree& t : planar_trees_of_degree(d, kTwo))
        gens.push_back(PlanarForest{{t}});
    for (const auto& x : gens)
      for (const auto& y : gens)
        for (const auto& z : gens) {
          if (x.degree() + y.degree() + z.degree() > 5) continue;
          auto X = LinComb<PlanarForest>::single(x);
          auto Y = LinComb<PlanarForest>::single(y);
          auto Z = LinComb<PlanarForest>::single(z);
          // x -> [y,z] = [x->y, z] + [y, x->z]
          CHECK(graft(X, bracket(Y, Z, cat)) ==
                bracket(graft(X, Y), Z, cat) + bracket(Y, graft(X, Z), cat));
          // [y,x] -> z = x->(y->z) - (x->y)->z - y->(x->z) + (y->x)->z
          // (the concatenation bracket sits in the mirror orientation of the
          // appending graft)
          CHECK(graft(bracket(Y, X, cat), Z) == graft(X, graft(Y, Z)) - graft(graft(X, Y), Z) -
                                                    graft(Y, graft(X, Z)) + graft(graft(Y, X), Z));
        }
  }

  SUBCASE("D-algebra laws") {
    // x -> (a.b) = (x->a).b + a.(x->b) and x -> (a->b) = (x.a)->b + (x->a)->b
    std::mt19937 rng(5);
    for (int it = 0; it < 80; ++it) {
      PlanarTree xt = random_planar_tree(rng, 1 + static_cast<int>(rng() % 2), kTwo);
      PlanarForest x{{xt}};
      PlanarForest a = random_planar_forest(rng, 1 + static_cast<int>(rng() % 2), kTwo);
      PlanarForest b = random_planar_forest(rng, 1 + static_cast<int>(rng() % 2), kTwo);
      if (x.degree() + a.degree() + b.degree() > 4 + 1) continue;
      auto X = LinComb<PlanarForest>::single(x);
      auto A = LinComb<PlanarForest>::single(a);
      auto B = LinComb<PlanarForest>::single(b);
      CHECK(postlie_graft(x, of_concat(a, b)) ==
            of_concat_lc(postlie_graft(x, a), B) + of_concat_lc(A, postlie_graft(x, b)));
      CHECK(postlie_graft_lc(X, postlie_graft(a, b)) ==
            postlie_graft(of_concat(a, x), b) + postlie_graft_lc(postlie_graft(x, a), B));
    }
  }
}

TEST_CASE("planar Grossman-Larson") {
  // the concatenation part lands on the mirrored side of the grafted part
  LinComb<PlanarForest> expect =
      LinComb<PlanarForest>::single(p("[2] [1]")) + LinComb<PlanarForest>::single(p("[2[1]]"));
  CHECK(gl_planar(p("[1]"), p("[2]")) == expect);
  CHECK(gl_planar(PlanarForest{}, p("[1[3][2]]")) ==
        LinComb<PlanarForest>::single(p("[1[3][2]]")));

  SUBCASE("associativity, one letter, degree <= 3") {
    std::vector<PlanarForest> all;
    for (int d = 0; d <= 3; ++d)
      for (const auto& x : planar_forests_of_degree(d, kOne)) all.push_back(x);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) {
          if (a.degree() + b.degree() + c.degree() > 4) continue;
          auto lhs = gl_planar_lc(gl_planar(a, b), LinComb<PlanarForest>::single(c));
          auto rhs = gl_planar_lc(LinComb<PlanarForest>::single(a), gl_planar(b, c));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("antipodes") {
  CHECK(antipode_bck(f("[]")) == -LinComb<Forest>::single(f("[]")));
  CHECK(antipode_shuffle(w("12")) == LinComb<Word>::single(w("21")));
  CHECK(antipode_bck(f("[[]]")) ==
        LinComb<Forest>::single(f("[] []")) - LinComb<Forest>::single(f("[[]]")));

  SUBCASE("defining identity: m(S (x) Id)Delta = unit eps") {
    for (int d = 1; d <= 3; ++d) {
      for (const Forest& x : forests_of_degree(d, kOne)) {
        LinComb<Forest> acc;
        for (const auto& [pr, c] : bck_coproduct(x))
          for (const auto& [s, cs] : antipode_bck(pr.first))
            acc.add(forest_mul(s, pr.second), c * cs);
        CHECK(acc == LinComb<Forest>{});
      }
      for (const PlanarForest& x : planar_forests_of_degree(d, kOne)) {
        LinComb<PlanarForest> acc;
        for (const auto& [pr, c] : mkw_coproduct(x))
          for (const auto& [s, cs] : antipode_mkw(pr.first))
            for (const auto& [m, cm] : of_shuffle(s, pr.second)) acc.add(m, c * cs * cm);
        CHECK(acc == LinComb<PlanarForest>{});
      }
      for (const Word& x : words_of_degree(d, kTwo)) {
        LinComb<Word> acc;
        for (const auto& [pr, c] : deconcat(x))
          for (const auto& [s, cs] : antipode_shuffle(pr.first))
            for (const auto& [m, cm] : shuffle(s, pr.second)) acc.add(m, c * cs * cm);
        CHECK(acc == LinComb<Word>{});
      }
    }
  }
}

TEST_CASE("concatenation and star brackets") {
  auto cat = [](const LinComb<PlanarForest>& a, const LinComb<PlanarForest>& b) {
    return of_concat_lc(a, b);
  };
  auto star = [](const LinComb<PlanarForest>& a, const LinComb<PlanarForest>& b) {
    return gl_planar_lc(a, b);
  };
  auto one = LinComb<PlanarForest>::single(p("[1]"));
  auto two = LinComb<PlanarForest>::single(p("[2]"));
  CHECK(bracket(one, one, star) == LinComb<PlanarForest>{});

  // [t1,t2]_* = t1->t2 - t2->t1 + [t1,t2], with the concatenation bracket in
  // the mirror orientation of the grafting
  auto lhs = bracket(one, two, star);
  auto rhs = postlie_graft(p("[1]"), p("[2]")) - postlie_graft(p("[2]"), p("[1]")) +
             bracket(two, one, cat);
  CHECK(lhs == rhs);

  SUBCASE("Jacobi identity for the star bracket") {
    std::vector<LinComb<PlanarForest>> gens;
    for (int d = 1; d <= 2; ++d)
      for (const PlanarTree& t : planar_trees_of_degree(d, kTwo))
        gens.push_back(LinComb<PlanarForest>::single(PlanarForest{{t}}));
    for (const auto& x : gens)
      for (const auto& y : gens)
        for (const auto& z : gens) {
          auto jac = bracket(x, bracket(y, z, star), star) +
                     bracket(y, bracket(z, x, star), star) +
                     bracket(z, bracket(x, y, star), star);
          CHECK(jac == LinComb<PlanarForest>{});
        }
  }
}

TEST_CASE("grading: products and coproducts are homogeneous") {
  std::mt19937 rng(17);
  for (int it = 0; it < 100; ++it) {
    PlanarForest x = random_planar_forest(rng, 1 + static_cast<int>(rng() % 4), kTwo);
    for (const auto& [pr, c] : mkw_coproduct(x))
      CHECK(pr.first.degree() + pr.second.degree() == x.degree());
    Forest y = random_forest(rng, 1 + static_cast<int>(rng() % 4), kTwo);
    for (const auto& [pr, c] : bck_coproduct(y))
      CHECK(pr.first.degree() + pr.second.degree() == y.degree());
    PlanarForest z = random_planar_forest(rng, 1 + static_cast<int>(rng() % 3), kTwo);
    for (const auto& [k, c] : gl_planar(x, z))
      CHECK(k.degree() == x.degree() + z.degree());
  }
}
