#include "doctest.h"
#include "helpers.hpp"
#include "treehopf/forest.hpp"

using namespace treehopf;

namespace {

// independent count oracles
long long catalan(int n) {
  // C_0..: 1,1,2,5,14,42,132
  std::vector<long long> c{1};
  for (int i = 1; i <= n; ++i) {
    long long s = 0;
    for (int k = 0; k < i; ++k) s += c[k] * c[i - 1 - k];
    c.push_back(s);
  }
  return c[n];
}

// rooted (non-planar, undecorated) trees with n vertices, via the standard
// divisor-sum recurrence
std::vector<long long> rooted_tree_counts(int maxn) {
  std::vector<long long> r(maxn + 1, 0);
  r[1] = 1;
  for (int n = 1; n < maxn; ++n) {
    long long acc = 0;
    for (int k = 1; k <= n; ++k) {
      long long dsum = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) dsum += d * r[d];
      acc += dsum * r[n + 1 - k];
    }
    r[n + 1] = acc / n;
  }
  return r;
}

}  // namespace

TEST_CASE("bracket parsing and canonical forms") {
  Alphabet one;
  Alphabet abc = Alphabet::from_csv("1,2,3");

  auto pf = parse_planar("[1[3][2]]", abc);
  REQUIRE(pf.trees.size() == 1);
  CHECK(pf.trees[0].letter == 0);
  REQUIRE(pf.trees[0].children.size() == 2);
  CHECK(pf.trees[0].children[0].letter == 2);
  CHECK(pf.trees[0].children[1].letter == 1);
  CHECK(render(pf, abc) == "[1[3][2]]");

  CHECK(parse_planar("", abc).empty());
  CHECK(parse_forest("", abc).empty());

  // multiset symmetry of non-planar forests
  CHECK(parse_forest("[1[2]] [1]", abc) == parse_forest("[1] [1[2]]", abc));
  // non-planar children are a multiset, planar children are not
  CHECK(parse_forest("[1[2][3]]", abc) == parse_forest("[1[3][2]]", abc));
  CHECK(parse_planar("[1[2][3]]", abc) != parse_planar("[1[3][2]]", abc));

  // undecorated notation parses with a one-letter alphabet only
  CHECK(render(parse_forest("[[][]]", one), one) == "[[][]]");
  CHECK_THROWS_AS(parse_planar("[[][]]", abc), ParseError);
  CHECK_THROWS_AS(parse_planar("[1[4]]", abc), ParseError);
  CHECK_THROWS_AS(parse_planar("[1", abc), ParseError);
  CHECK_THROWS_AS(parse_word("14", abc), ParseError);

  // canonical order puts the larger subtree first (paper's display order)
  CHECK(render(parse_forest("[[][[]]]", one), one) == "[[[]][]]");
  CHECK(render(parse_forest("[[]] [] []", one), one) == "[[]] [] []");
  CHECK(render(parse_forest("[] [] [[]]", one), one) == "[[]] [] []");
}

TEST_CASE("canonicalize is idempotent on random trees") {
  std::mt19937 rng(42);
  Alphabet ab = Alphabet::from_csv("1,2");
  for (int i = 0; i < 1000; ++i) {
    int deg = 1 + static_cast<int>(rng() % 6);
    Tree t = random_tree(rng, deg, ab);
    CHECK(canonicalize(t) == t);  // construction already canonicalizes
    CHECK(canonicalize(canonicalize(t)) == canonicalize(t));
  }
}

TEST_CASE("render/parse round trips") {
  std::mt19937 rng(7);
  Alphabet ab = Alphabet::from_csv("1,2");
  Alphabet one;
  for (int i = 0; i < 1000; ++i) {
    int deg = 1 + static_cast<int>(rng() % 6);
    PlanarForest pf = random_planar_forest(rng, deg, ab);
    CHECK(parse_planar(render(pf, ab), ab) == pf);
    Forest f = random_forest(rng, deg, ab);
    CHECK(parse_forest(render(f, ab), ab) == f);
    CHECK(parse_forest(render(f, one).empty() ? "" : render(random_forest(rng, deg, one), one),
                       one)
              .degree() >= 0);  // undecorated render parses too
    Word w = random_word(rng, deg, ab);
    CHECK(parse_word(render(w, ab), ab) == w);
  }
  // whitespace normalization
  CHECK(render(parse_planar("  [1 [2] ]   [2]", ab), ab) == "[1[2]] [2]");
}

TEST_CASE("degree additivity") {
  Alphabet ab = Alphabet::from_csv("1,2");
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    PlanarForest a = random_planar_forest(rng, 1 + static_cast<int>(rng() % 4), ab);
    PlanarForest b = random_planar_forest(rng, 1 + static_cast<int>(rng() % 4), ab);
    PlanarForest c = a;
    c.trees.insert(c.trees.end(), b.trees.begin(), b.trees.end());
    CHECK(c.degree() == a.degree() + b.degree());
  }
}

TEST_CASE("enumeration counts match brute-force sequences") {
  Alphabet one;
  Alphabet two = Alphabet::from_csv("1,2");

  SUBCASE("words: n^k") {
    CHECK(words_of_degree(2, two).size() == 4);
    CHECK(words_of_degree(3, two).size() == 8);
    CHECK(words_of_degree(4, two).size() == 16);
    auto w2 = words_of_degree(2, two);
    std::vector<std::string> rendered;
    for (const auto& w : w2) rendered.push_back(render(w, two));
    CHECK(rendered == std::vector<std::string>{"11", "12", "21", "22"});
  }

  SUBCASE("planar trees and forests: Catalan") {
    for (int n = 1; n <= 6; ++n)
      CHECK(planar_trees_of_degree(n, one).size() == static_cast<std::size_t>(catalan(n - 1)));
    for (int n = 0; n <= 6; ++n)
      CHECK(planar_forests_of_degree(n, one).size() == static_cast<std::size_t>(catalan(n)));
    CHECK(planar_trees_of_degree(3, one).size() == 2);
    CHECK(planar_forests_of_degree(3, one).size() == 5);
  }

  SUBCASE("non-planar trees: rooted tree numbers") {
    auto r = rooted_tree_counts(7);
    for (int n = 1; n <= 6; ++n)
      CHECK(trees_of_degree(n, one).size() == static_cast<std::size_t>(r[n]));
    // forests of degree n are in bijection with trees of degree n+1
    for (int n = 0; n <= 6; ++n)
      CHECK(forests_of_degree(n, one).size() == static_cast<std::size_t>(r[n + 1]));
    CHECK(trees_of_degree(3, one).size() == 2);
  }

  SUBCASE("uniqueness and exact degree") {
    for (int n = 0; n <= 5; ++n) {
      auto fs = forests_of_degree(n, two);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        CHECK(fs[i].degree() == n);
        if (i) CHECK(fs[i - 1] < fs[i]);
      }
      auto pfs = planar_forests_of_degree(n, two);
      for (std::size_t i = 0; i < pfs.size(); ++i) {
        CHECK(pfs[i].degree() == n);
        if (i) CHECK(pfs[i - 1] < pfs[i]);
      }
    }
  }

  SUBCASE("growth-rate report: dim V_n <= B C^n for fitted constants") {
    // with one letter the counts are Catalan-bounded; C = 4 works with B = 1
    for (int n = 1; n <= 6; ++n) {
      double bound = 1.0;
      for (int i = 0; i < n; ++i) bound *= 4.0;
      CHECK(static_cast<double>(planar_forests_of_degree(n, one).size()) <= bound);
      CHECK(static_cast<double>(forests_of_degree(n, one).size()) <= bound);
    }
  }

  SUBCASE("resource limit") {
    CHECK_THROWS_AS(words_of_degree(10, two, 100), ResourceError);
  }
}

TEST_CASE("b_plus / b_minus") {
  Alphabet abc = Alphabet::from_csv("1,2,3");
  PlanarForest w = parse_planar("[2] [3]", abc);
  PlanarTree t = b_plus(w, 0);
  CHECK(render(t, abc) == "[1[2][3]]");
  CHECK(b_minus(t) == w);
  CHECK(render(b_minus(parse_planar("[1[3][2]]", abc).trees[0]), abc) == "[3] [2]");
  CHECK(b_plus(PlanarForest{}, 1) == pt_vertex(1));

  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    PlanarForest f = random_planar_forest(rng, 1 + static_cast<int>(rng() % 5), abc);
    CHECK(b_minus(b_plus(f, 2)) == f);
  }
}

TEST_CASE("latex emitter round trips through the bracket notation") {
  Alphabet abc = Alphabet::from_csv("1,2,3");
  PlanarForest f = parse_planar("[1[3][2]] [2]", abc);
  std::string latex = render_latex(f, abc);
  CHECK(latex == "\\Forest{[1[3][2]]} \\Forest{[2]}");
  // stripping the macro wrapper re-parses to the same value
  std::string inner;
  for (std::size_t i = 0; i < latex.size();) {
    if (latex.compare(i, 8, "\\Forest{") == 0) {
      std::size_t j = latex.find('}', i);
      inner += latex.substr(i + 8, j - i - 8) + " ";
      i = j + 1;
    } else {
      ++i;
    }
  }
  CHECK(parse_planar(inner, abc) == f);
}
