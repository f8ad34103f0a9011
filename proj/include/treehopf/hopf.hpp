#pragma once

#include "treehopf/forest.hpp"
#include "treehopf/lincomb.hpp"

namespace treehopf {

// ---------------------------------------------------------------- words ----

LinComb<Word> shuffle(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b);
TensorLC<Word> deconcat(const Word& w);
// Dual to the shuffle product: sum over position subsets.
TensorLC<Word> unshuffle(const Word& w);

// ------------------------------------------------------- ordered forests ---

// Shuffle of tree sequences (the commutative product of the MKW algebra).
LinComb<PlanarForest> of_shuffle(const PlanarForest& a, const PlanarForest& b);
PlanarForest of_concat(const PlanarForest& a, const PlanarForest& b);
TensorLC<PlanarForest> of_deconcat(const PlanarForest& w);
TensorLC<PlanarForest> of_unshuffle(const PlanarForest& w);

// Left-admissible-cut coproduct, extended to forests through B+/B-.
TensorLC<PlanarForest> mkw_coproduct(const PlanarForest& f);

// Planar grafting. A single grafted tree attaches once at every vertex of the
// target, as the last child in bracket order (the paper's worked
// factorizations fix this orientation); forests on either side expand through
//   tau -> t1..tn   Leibniz over the target trees,
//   (w tau) -> w'   =  w -> (tau -> w') - (w -> tau) -> w'.
LinComb<PlanarForest> postlie_graft(const PlanarForest& x, const PlanarForest& y);

// Planar Grossman-Larson: w1 * w2 = (w1)(1) . ((w1)(2) -> w2).
LinComb<PlanarForest> gl_planar(const PlanarForest& a, const PlanarForest& b);

// ----------------------------------------------------- non-planar forests --

Forest forest_mul(const Forest& a, const Forest& b);

// Admissible-edge-cut coproduct, multiplicative on forests.
TensorLC<Forest> bck_coproduct(const Forest& f);

// Spanning-subforest contraction coproduct (undecorated forests only).
TensorLC<Forest> cefm_coproduct(const Forest& f);

// Dual to the forest product: complementary sub-multiset splits.
TensorLC<Forest> forest_unmerge(const Forest& f);

// Pre-Lie grafting: sum over vertices of the target.
LinComb<Tree> prelie_graft(const Tree& sigma, const Tree& tau);
LinComb<Forest> prelie_graft_forest(const Tree& sigma, const Forest& omega);

// One spanning-subforest split of a tree: the parts (per block, original
// decorations) and the contracted shape whose letters are block indices.
struct SpanningSplit {
  std::vector<Tree> parts;
  Tree contracted;  // letter field holds the block index
};
std::vector<SpanningSplit> spanning_splits(const Tree& t);

// -------------------------------------------------------------- antipodes --

LinComb<Word> antipode_shuffle(const Word& w);
LinComb<Forest> antipode_bck(const Forest& f);
LinComb<PlanarForest> antipode_mkw(const PlanarForest& f);

// ------------------------------------------------- bilinear LinComb lifts --

template <class R>
LinComb<Word, R> shuffle_lc(const LinComb<Word, R>& a, const LinComb<Word, R>& b) {
  return extend_bilinear(a, b, [](const Word& x, const Word& y) { return shuffle(x, y); });
}
template <class R>
LinComb<Word, R> concat_lc(const LinComb<Word, R>& a, const LinComb<Word, R>& b) {
  return extend_bilinear(a, b, [](const Word& x, const Word& y) {
    return LinComb<Word>::single(concat(x, y));
  });
}
template <class R>
LinComb<PlanarForest, R> of_shuffle_lc(const LinComb<PlanarForest, R>& a,
                                       const LinComb<PlanarForest, R>& b) {
  return extend_bilinear(a, b, [](const PlanarForest& x, const PlanarForest& y) {
    return of_shuffle(x, y);
  });
}
template <class R>
LinComb<PlanarForest, R> of_concat_lc(const LinComb<PlanarForest, R>& a,
                                      const LinComb<PlanarForest, R>& b) {
  return extend_bilinear(a, b, [](const PlanarForest& x, const PlanarForest& y) {
    return LinComb<PlanarForest>::single(of_concat(x, y));
  });
}
template <class R>
LinComb<Forest, R> forest_mul_lc(const LinComb<Forest, R>& a, const LinComb<Forest, R>& b) {
  return extend_bilinear(a, b, [](const Forest& x, const Forest& y) {
    return LinComb<Forest>::single(forest_mul(x, y));
  });
}
template <class R>
LinComb<PlanarForest, R> postlie_graft_lc(const LinComb<PlanarForest, R>& a,
                                          const LinComb<PlanarForest, R>& b) {
  return extend_bilinear(a, b, [](const PlanarForest& x, const PlanarForest& y) {
    return postlie_graft(x, y);
  });
}
template <class R>
LinComb<Tree, R> prelie_graft_lc(const LinComb<Tree, R>& a, const LinComb<Tree, R>& b) {
  return extend_bilinear(a, b, [](const Tree& x, const Tree& y) {
    return prelie_graft(x, y);
  });
}
template <class R>
LinComb<PlanarForest, R> gl_planar_lc(const LinComb<PlanarForest, R>& a,
                                      const LinComb<PlanarForest, R>& b) {
  return extend_bilinear(a, b, [](const PlanarForest& x, const PlanarForest& y) {
    return gl_planar(x, y);
  });
}

// [a,b] = ab - ba for the given bilinear product.
template <class LC, class Mul>
LC bracket(const LC& a, const LC& b, Mul&& mul) {
  return mul(a, b) - mul(b, a);
}

}  // namespace treehopf
