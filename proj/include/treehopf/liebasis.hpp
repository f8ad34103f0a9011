#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treehopf/algebra.hpp"
#include "treehopf/lincomb.hpp"

namespace treehopf {

// Basis of the primitive part of the completed dual, identified with elements
// of the algebra through the dual basis:
//   Shuffle:  Lyndon words over the letters, bracket-expanded.
//   MKW:      Lyndon words over planar rooted trees, bracket-expanded into
//             ordered forests (free Lie algebra on trees, concatenation).
//   BCK:      single non-planar trees.
template <class K>
struct PrimElement {
  LinComb<K> expansion;
  int degree = 0;
  std::string display;
};

template <class K>
class PrimBasis {
 public:
  PrimBasis() = default;
  PrimBasis(std::vector<PrimElement<K>> elems) : elems_(std::move(elems)) {}

  const std::vector<PrimElement<K>>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const PrimElement<K>& operator[](std::size_t i) const { return elems_[i]; }

  // Coordinates of the class of x (an element of the algebra, coefficient
  // vector over basis keys) modulo the annihilator of the primitives: the
  // unique t with  <expansion(p), x> = sum_q t_q <expansion(p), expansion(q)>
  // for all p of the same degree, computed by an exact Gram solve.
  std::vector<std::pair<std::size_t, Rational>> class_coords(const LinComb<K>& x) const;
  std::vector<std::pair<std::size_t, Rational>> class_coords(const K& k) const {
    return class_coords(LinComb<K>::single(k));
  }

  // The canonical representative of the class of x inside the primitive span.
  LinComb<K> class_project(const LinComb<K>& x) const;

 private:
  std::vector<PrimElement<K>> elems_;
  mutable std::map<int, std::vector<std::size_t>> by_degree_;
  mutable std::map<int, std::vector<std::vector<Rational>>> gram_inverse_;

  const std::vector<std::size_t>& degree_block(int d) const;
  const std::vector<std::vector<Rational>>& gram_inv(int d) const;
};

PrimBasis<Word> shuffle_prim_basis(int max_degree, const Alphabet& a);
PrimBasis<PlanarForest> mkw_prim_basis(int max_degree, const Alphabet& a);
PrimBasis<Forest> bck_prim_basis(int max_degree, const Alphabet& a);

template <class Alg>
PrimBasis<typename Alg::Key> prim_basis_for(int max_degree, const Alphabet& a) {
  if constexpr (Alg::tag == AlgebraTag::Shuffle)
    return shuffle_prim_basis(max_degree, a);
  else if constexpr (Alg::tag == AlgebraTag::MKW)
    return mkw_prim_basis(max_degree, a);
  else
    return bck_prim_basis(max_degree, a);
}

// Exact solve of a small dense linear system A t = rhs (A square invertible).
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> rhs);
std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> a);

}  // namespace treehopf
