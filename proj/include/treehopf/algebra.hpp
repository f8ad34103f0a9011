#pragma once

#include <string>
#include <vector>

#include "treehopf/hopf.hpp"

namespace treehopf {

enum class AlgebraTag { Shuffle, BCK, MKW, CEFM };

inline std::string algebra_name(AlgebraTag t) {
  switch (t) {
    case AlgebraTag::Shuffle: return "shuffle";
    case AlgebraTag::BCK: return "bck";
    case AlgebraTag::MKW: return "mkw";
    case AlgebraTag::CEFM: return "cefm";
  }
  return "?";
}

inline AlgebraTag algebra_from_name(const std::string& s) {
  if (s == "shuffle") return AlgebraTag::Shuffle;
  if (s == "bck") return AlgebraTag::BCK;
  if (s == "mkw") return AlgebraTag::MKW;
  if (s == "cefm") return AlgebraTag::CEFM;
  throw std::invalid_argument("unknown algebra: " + s);
}

enum class CoproductKind { Algebra, Deconcatenation, ProductDual };

// Each trait bundles one Hopf/bialgebra structure: the basis family, the
// commutative product, the coproduct, and the dual-side helpers.

struct ShuffleAlg {
  using Key = Word;
  static constexpr AlgebraTag tag = AlgebraTag::Shuffle;
  static constexpr bool hopf = true;

  static Key unit() { return {}; }
  static Key letter_key(Letter l) { return Word{{l}}; }
  static LinComb<Key> product(const Key& a, const Key& b) { return shuffle(a, b); }
  static TensorLC<Key> coproduct(const Key& x) { return deconcat(x); }
  static TensorLC<Key> coproduct_of(CoproductKind k, const Key& x) {
    switch (k) {
      case CoproductKind::Algebra:
      case CoproductKind::Deconcatenation: return deconcat(x);
      case CoproductKind::ProductDual: return unshuffle(x);
    }
    throw std::logic_error("bad kind");
  }
  static LinComb<Key> antipode(const Key& x) { return antipode_shuffle(x); }
  static std::vector<Key> basis(int deg, const Alphabet& a) { return words_of_degree(deg, a); }
};

struct BckAlg {
  using Key = Forest;
  static constexpr AlgebraTag tag = AlgebraTag::BCK;
  static constexpr bool hopf = true;

  static Key unit() { return {}; }
  static Key letter_key(Letter l) { return Forest{{t_vertex(l)}}; }
  static LinComb<Key> product(const Key& a, const Key& b) {
    return LinComb<Key>::single(forest_mul(a, b));
  }
  static TensorLC<Key> coproduct(const Key& x) { return bck_coproduct(x); }
  static TensorLC<Key> coproduct_of(CoproductKind k, const Key& x) {
    switch (k) {
      case CoproductKind::Algebra: return bck_coproduct(x);
      case CoproductKind::ProductDual: return forest_unmerge(x);
      case CoproductKind::Deconcatenation:
        throw std::invalid_argument("no deconcatenation on non-planar forests");
    }
    throw std::logic_error("bad kind");
  }
  static LinComb<Key> antipode(const Key& x) { return antipode_bck(x); }
  static std::vector<Key> basis(int deg, const Alphabet& a) { return forests_of_degree(deg, a); }
};

struct MkwAlg {
  using Key = PlanarForest;
  static constexpr AlgebraTag tag = AlgebraTag::MKW;
  static constexpr bool hopf = true;

  static Key unit() { return {}; }
  static Key letter_key(Letter l) { return PlanarForest{{pt_vertex(l)}}; }
  static LinComb<Key> product(const Key& a, const Key& b) { return of_shuffle(a, b); }
  static TensorLC<Key> coproduct(const Key& x) { return mkw_coproduct(x); }
  static TensorLC<Key> coproduct_of(CoproductKind k, const Key& x) {
    switch (k) {
      case CoproductKind::Algebra: return mkw_coproduct(x);
      case CoproductKind::Deconcatenation: return of_deconcat(x);
      case CoproductKind::ProductDual: return of_unshuffle(x);
    }
    throw std::logic_error("bad kind");
  }
  static LinComb<Key> antipode(const Key& x) { return antipode_mkw(x); }
  static std::vector<Key> basis(int deg, const Alphabet& a) {
    return planar_forests_of_degree(deg, a);
  }
};

// Bialgebra only (no antipode); undecorated forests.
struct CefmAlg {
  using Key = Forest;
  static constexpr AlgebraTag tag = AlgebraTag::CEFM;
  static constexpr bool hopf = false;

  static Key unit() { return {}; }
  static Key letter_key(Letter l) { return Forest{{t_vertex(l)}}; }
  static LinComb<Key> product(const Key& a, const Key& b) {
    return LinComb<Key>::single(forest_mul(a, b));
  }
  static TensorLC<Key> coproduct(const Key& x) { return cefm_coproduct(x); }
  static TensorLC<Key> coproduct_of(CoproductKind k, const Key& x) {
    if (k == CoproductKind::Algebra) return cefm_coproduct(x);
    return BckAlg::coproduct_of(k, x);
  }
  static std::vector<Key> basis(int deg, const Alphabet& a) { return forests_of_degree(deg, a); }
};

template <class F>
decltype(auto) with_algebra(AlgebraTag t, F&& f) {
  switch (t) {
    case AlgebraTag::Shuffle: return f(ShuffleAlg{});
    case AlgebraTag::BCK: return f(BckAlg{});
    case AlgebraTag::MKW: return f(MkwAlg{});
    case AlgebraTag::CEFM: return f(CefmAlg{});
  }
  throw std::logic_error("bad algebra tag");
}

}  // namespace treehopf
