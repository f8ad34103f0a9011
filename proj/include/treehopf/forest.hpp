#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "treehopf/alphabet.hpp"

namespace treehopf {

namespace detail {
// three-way comparison for vectors of a recursive element type (see the tree
// structs below; a defaulted <=> cannot recurse through an incomplete type)
template <class T>
std::strong_ordering compare_vec(const std::vector<T>& a, const std::vector<T>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Planar (ordered) decorated rooted trees and forests. Child order is
// significant; the bracket string is the canonical form.
// ---------------------------------------------------------------------------

struct PlanarTree {
  Letter letter = 0;
  std::vector<PlanarTree> children;

  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
    if (auto c = a.letter <=> b.letter; c != 0) return c;
    return detail::compare_vec(a.children, b.children);
  }
  friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return (a <=> b) == 0; }
  int degree() const {
    int d = 1;
    for (const auto& c : children) d += c.degree();
    return d;
  }
};

struct PlanarForest {
  std::vector<PlanarTree> trees;  // empty forest is the unit 1

  friend std::strong_ordering operator<=>(const PlanarForest& a, const PlanarForest& b) {
    return detail::compare_vec(a.trees, b.trees);
  }
  friend bool operator==(const PlanarForest& a, const PlanarForest& b) { return (a <=> b) == 0; }
  int degree() const {
    int d = 0;
    for (const auto& t : trees) d += t.degree();
    return d;
  }
  bool empty() const { return trees.empty(); }
};

inline PlanarTree pt_vertex(Letter l) { return PlanarTree{l, {}}; }
inline PlanarForest pf_of(std::vector<PlanarTree> ts) { return PlanarForest{std::move(ts)}; }

// B+ grafts the sequence onto a fresh root, preserving the order; B- undoes it.
inline PlanarTree b_plus(const PlanarForest& w, Letter root) {
  return PlanarTree{root, w.trees};
}
inline PlanarForest b_minus(const PlanarTree& t) { return PlanarForest{t.children}; }

// ---------------------------------------------------------------------------
// Non-planar decorated rooted trees and forests. Children are kept sorted
// descending by the canonical order, so isomorphic trees have identical
// representations. Construct through make_tree / make_forest.
// ---------------------------------------------------------------------------

struct Tree {
  Letter letter = 0;
  std::vector<Tree> children;  // invariant: sorted descending

  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    if (auto c = a.letter <=> b.letter; c != 0) return c;
    return detail::compare_vec(a.children, b.children);
  }
  friend bool operator==(const Tree& a, const Tree& b) { return (a <=> b) == 0; }
  int degree() const {
    int d = 1;
    for (const auto& c : children) d += c.degree();
    return d;
  }
};

struct Forest {
  std::vector<Tree> trees;  // invariant: sorted descending; empty = unit 1

  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
    return detail::compare_vec(a.trees, b.trees);
  }
  friend bool operator==(const Forest& a, const Forest& b) { return (a <=> b) == 0; }
  int degree() const {
    int d = 0;
    for (const auto& t : trees) d += t.degree();
    return d;
  }
  bool empty() const { return trees.empty(); }
};

Tree make_tree(Letter l, std::vector<Tree> children);
Forest make_forest(std::vector<Tree> trees);
inline Tree t_vertex(Letter l) { return Tree{l, {}}; }

// Idempotent canonicalization (sorts every child list / the tree multiset).
Tree canonicalize(const Tree& t);
Forest canonicalize(const Forest& f);

// Forgets planarity.
Tree to_nonplanar(const PlanarTree& t);
Forest to_nonplanar(const PlanarForest& f);

// ---------------------------------------------------------------------------
// Words over the alphabet.
// ---------------------------------------------------------------------------

struct Word {
  std::vector<Letter> letters;

  friend auto operator<=>(const Word&, const Word&) = default;
  int degree() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
};

// ---------------------------------------------------------------------------
// Rendering. The bracket form is the canonical string (single spaces between
// the trees of a forest); letters are omitted for one-letter alphabets.
// ---------------------------------------------------------------------------

std::string render(const PlanarTree& t, const Alphabet& a);
std::string render(const PlanarForest& f, const Alphabet& a);
std::string render(const Tree& t, const Alphabet& a);
std::string render(const Forest& f, const Alphabet& a);
std::string render(const Word& w, const Alphabet& a);

std::string render_latex(const PlanarForest& f, const Alphabet& a);
std::string render_latex(const Forest& f, const Alphabet& a);
std::string render_latex(const Word& w, const Alphabet& a);

// ---------------------------------------------------------------------------
// Parsing:  forest := tree* ;  tree := "[" letter? tree* "]" ;  word := letter+.
// The letter may be omitted only for one-letter alphabets. Whitespace
// separates trees and is allowed around brackets.
// ---------------------------------------------------------------------------

PlanarForest parse_planar(const std::string& text, const Alphabet& a);
Forest parse_forest(const std::string& text, const Alphabet& a);
Word parse_word(const std::string& text, const Alphabet& a);

// ---------------------------------------------------------------------------
// Basis enumeration by exact degree, in canonical order.
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultEnumLimit = 4'000'000;

std::vector<Word> words_of_degree(int degree, const Alphabet& a,
                                  std::size_t limit = kDefaultEnumLimit);
std::vector<PlanarTree> planar_trees_of_degree(int degree, const Alphabet& a,
                                               std::size_t limit = kDefaultEnumLimit);
std::vector<PlanarForest> planar_forests_of_degree(int degree, const Alphabet& a,
                                                   std::size_t limit = kDefaultEnumLimit);
std::vector<Tree> trees_of_degree(int degree, const Alphabet& a,
                                  std::size_t limit = kDefaultEnumLimit);
std::vector<Forest> forests_of_degree(int degree, const Alphabet& a,
                                      std::size_t limit = kDefaultEnumLimit);

}  // namespace treehopf
