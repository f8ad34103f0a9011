#include "treehopf/hopf.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace treehopf {

// ---------------------------------------------------------------- words ----

LinComb<Word> shuffle(const Word& a, const Word& b) {
  LinComb<Word> out;
  std::function<void(std::size_t, std::size_t, Word&)> rec = [&](std::size_t i, std::size_t j,
                                                                 Word& acc) {
    if (i == a.letters.size() && j == b.letters.size()) {
      out.add(acc, 1);
      return;
    }
    if (i < a.letters.size()) {
      acc.letters.push_back(a.letters[i]);
      rec(i + 1, j, acc);
      acc.letters.pop_back();
    }
    if (j < b.letters.size()) {
      acc.letters.push_back(b.letters[j]);
      rec(i, j + 1, acc);
      acc.letters.pop_back();
    }
  };
  Word acc;
  rec(0, 0, acc);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

TensorLC<Word> deconcat(const Word& w) {
  TensorLC<Word> out;
  for (std::size_t k = 0; k <= w.letters.size(); ++k) {
    Word l{std::vector<Letter>(w.letters.begin(), w.letters.begin() + static_cast<long>(k))};
    Word r{std::vector<Letter>(w.letters.begin() + static_cast<long>(k), w.letters.end())};
    out.add({std::move(l), std::move(r)}, 1);
  }
  return out;
}

TensorLC<Word> unshuffle(const Word& w) {
  TensorLC<Word> out;
  const std::size_t n = w.letters.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Word l, r;
    for (std::size_t i = 0; i < n; ++i)
      ((mask >> i) & 1 ? l : r).letters.push_back(w.letters[i]);
    out.add({std::move(l), std::move(r)}, 1);
  }
  return out;
}

// ------------------------------------------------------- ordered forests ---

LinComb<PlanarForest> of_shuffle(const PlanarForest& a, const PlanarForest& b) {
  LinComb<PlanarForest> out;
  std::function<void(std::size_t, std::size_t, PlanarForest&)> rec =
      [&](std::size_t i, std::size_t j, PlanarForest& acc) {
        if (i == a.trees.size() && j == b.trees.size()) {
          out.add(acc, 1);
          return;
        }
        if (i < a.trees.size()) {
          acc.trees.push_back(a.trees[i]);
          rec(i + 1, j, acc);
          acc.trees.pop_back();
        }
        if (j < b.trees.size()) {
          acc.trees.push_back(b.trees[j]);
          rec(i, j + 1, acc);
          acc.trees.pop_back();
        }
      };
  PlanarForest acc;
  rec(0, 0, acc);
  return out;
}

PlanarForest of_concat(const PlanarForest& a, const PlanarForest& b) {
  PlanarForest r = a;
  r.trees.insert(r.trees.end(), b.trees.begin(), b.trees.end());
  return r;
}

TensorLC<PlanarForest> of_deconcat(const PlanarForest& w) {
  TensorLC<PlanarForest> out;
  for (std::size_t k = 0; k <= w.trees.size(); ++k) {
    PlanarForest l{std::vector<PlanarTree>(w.trees.begin(), w.trees.begin() + static_cast<long>(k))};
    PlanarForest r{std::vector<PlanarTree>(w.trees.begin() + static_cast<long>(k), w.trees.end())};
    out.add({std::move(l), std::move(r)}, 1);
  }
  return out;
}

TensorLC<PlanarForest> of_unshuffle(const PlanarForest& w) {
  TensorLC<PlanarForest> out;
  const std::size_t n = w.trees.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    PlanarForest l, r;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? l : r).trees.push_back(w.trees[i]);
    out.add({std::move(l), std::move(r)}, 1);
  }
  return out;
}

// Admissible cuts of a planar tree, root kept. At each vertex the cut edges
// form a suffix of the child list (duality with the appending graft), the cut
// components at one vertex concatenate in child order, and components from
// different vertices are shuffled together.
namespace {

LinComb<std::pair<PlanarForest, PlanarTree>> mkw_tree_cuts(const PlanarTree& t) {
  LinComb<std::pair<PlanarForest, PlanarTree>> out;
  const std::size_t m = t.children.size();
  for (std::size_t keep = 0; keep <= m; ++keep) {
    PlanarForest local;  // components cut at this vertex, child order
    for (std::size_t i = keep; i < m; ++i) local.trees.push_back(t.children[i]);
    // combine the kept children's own cuts
    LinComb<std::pair<PlanarForest, PlanarForest>> acc;  // (P so far, R-children so far)
    acc.add({local, PlanarForest{}}, 1);
    for (std::size_t i = 0; i < keep; ++i) {
      LinComb<std::pair<PlanarForest, PlanarForest>> next;
      for (const auto& [pr, c] : acc) {
        for (const auto& [cut, cc] : mkw_tree_cuts(t.children[i])) {
          for (const auto& [shuf, sc] : of_shuffle(pr.first, cut.first)) {
            PlanarForest rkids = pr.second;
            rkids.trees.push_back(cut.second);
            next.add({shuf, std::move(rkids)}, c * cc * sc);
          }
        }
      }
      acc = std::move(next);
    }
    for (const auto& [pr, c] : acc)
      out.add({pr.first, PlanarTree{t.letter, pr.second.trees}}, c);
  }
  return out;
}

}  // namespace

TensorLC<PlanarForest> mkw_coproduct(const PlanarForest& f) {
  TensorLC<PlanarForest> out;
  if (f.empty()) {
    out.add({PlanarForest{}, PlanarForest{}}, 1);
    return out;
  }
  // extension through B+; the artificial root is stripped afterwards
  PlanarTree art{0, f.trees};
  for (const auto& [pr, c] : mkw_tree_cuts(art))
    out.add({pr.first, PlanarForest{pr.second.children}}, c);
  return out;
}

namespace {

// sigma attached as last child at every vertex of tau
LinComb<PlanarTree> graft_on_tree(const PlanarTree& sigma, const PlanarTree& tau) {
  LinComb<PlanarTree> out;
  PlanarTree at_root = tau;
  at_root.children.push_back(sigma);
  out.add(std::move(at_root), 1);
  for (std::size_t i = 0; i < tau.children.size(); ++i) {
    for (const auto& [sub, c] : graft_on_tree(sigma, tau.children[i])) {
      PlanarTree t = tau;
      t.children[i] = sub;
      out.add(std::move(t), c);
    }
  }
  return out;
}

}  // namespace

LinComb<PlanarForest> postlie_graft(const PlanarForest& x, const PlanarForest& y) {
  LinComb<PlanarForest> out;
  if (x.empty()) {
    out.add(y, 1);
    return out;
  }
  if (x.trees.size() == 1) {
    const PlanarTree& tau = x.trees[0];
    // derivation over the target forest
    for (std::size_t i = 0; i < y.trees.size(); ++i) {
      for (const auto& [sub, c] : graft_on_tree(tau, y.trees[i])) {
        PlanarForest f = y;
        f.trees[i] = sub;
        out.add(std::move(f), c);
      }
    }
    return out;
  }
  // Enveloping-algebra action, peeling the first tree:
  //   (tau w) -> y = w -> (tau -> y) - sum_{w = w1 (x) w2, w2 != 1}
  //                                     ((w2 -> tau) . w1) -> y.
  // The subtracted terms are exactly the parts of the first summand where
  // some of w's trees landed on tau instead of y. The two-term rule in the
  // source presentation is the special case of a single remaining tree.
  PlanarForest tau{{x.trees.front()}};
  PlanarForest w{std::vector<PlanarTree>(x.trees.begin() + 1, x.trees.end())};
  out = postlie_graft_lc(LinComb<PlanarForest>::single(w), postlie_graft(tau, y));
  for (const auto& [split, c] : of_unshuffle(w)) {
    if (split.second.empty()) continue;
    for (const auto& [g, gc] : postlie_graft(split.second, tau)) {
      for (const auto& [r, rc] : postlie_graft(of_concat(g, split.first), y))
        out.add(r, -(c * gc * rc));
    }
  }
  return out;
}

LinComb<PlanarForest> gl_planar(const PlanarForest& a, const PlanarForest& b) {
  LinComb<PlanarForest> out;
  for (const auto& [split, c] : of_unshuffle(a)) {
    for (const auto& [g, gc] : postlie_graft(split.second, b))
      out.add(of_concat(g, split.first), c * gc);
  }
  return out;
}

// ----------------------------------------------------- non-planar forests --

Forest forest_mul(const Forest& a, const Forest& b) {
  std::vector<Tree> ts = a.trees;
  ts.insert(ts.end(), b.trees.begin(), b.trees.end());
  return make_forest(std::move(ts));
}

namespace {

LinComb<std::pair<Forest, Tree>> bck_tree_cuts(const Tree& t) {
  // every child edge is either cut (the whole subtree joins P) or kept
  LinComb<std::pair<Forest, Tree>> out;
  LinComb<std::pair<Forest, Forest>> acc;  // (P so far, kept R-children as forest)
  acc.add({Forest{}, Forest{}}, 1);
  for (const auto& child : t.children) {
    LinComb<std::pair<Forest, Forest>> next;
    for (const auto& [pr, c] : acc) {
      {  // cut
        Forest p = pr.first;
        p = forest_mul(p, Forest{{child}});
        next.add({std::move(p), pr.second}, c);
      }
      for (const auto& [cut, cc] : bck_tree_cuts(child)) {  // keep
        Forest p = forest_mul(pr.first, cut.first);
        Forest rkids = pr.second;
        rkids.trees.push_back(cut.second);
        next.add({std::move(p), make_forest(std::move(rkids.trees))}, c * cc);
      }
    }
    acc = std::move(next);
  }
  for (const auto& [pr, c] : acc)
    out.add({pr.first, make_tree(t.letter, pr.second.trees)}, c);
  return out;
}

}  // namespace

TensorLC<Forest> bck_coproduct(const Forest& f) {
  TensorLC<Forest> out;
  out.add({Forest{}, Forest{}}, 1);
  for (const auto& t : f.trees) {
    TensorLC<Forest> factor;
    for (const auto& [pr, c] : bck_tree_cuts(t))
      factor.add({pr.first, Forest{{pr.second}}}, c);
    factor.add({Forest{{t}}, Forest{}}, 1);  // the tau (x) 1 term
    TensorLC<Forest> next;
    for (const auto& [x, cx] : out)
      for (const auto& [y, cy] : factor)
        next.add({forest_mul(x.first, y.first), forest_mul(x.second, y.second)}, cx * cy);
    out = std::move(next);
  }
  return out;
}

std::vector<SpanningSplit> spanning_splits(const Tree& t) {
  // flatten to parent arrays; vertex 0 is the root, preorder
  std::vector<int> parent;
  std::vector<Letter> letter;
  std::vector<std::vector<int>> kids;
  std::function<int(const Tree&, int)> flatten = [&](const Tree& node, int par) {
    int id = static_cast<int>(parent.size());
    parent.push_back(par);
    letter.push_back(node.letter);
    kids.emplace_back();
    if (par >= 0) kids[static_cast<std::size_t>(par)].push_back(id);
    for (const auto& c : node.children) flatten(c, id);
    return id;
  };
  flatten(t, -1);
  const int n = static_cast<int>(parent.size());

  std::vector<SpanningSplit> out;
  const std::size_t nedges = static_cast<std::size_t>(n - 1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << nedges); ++mask) {
    // edge i connects vertex i+1 to its parent; bit set = cut
    std::vector<int> block(static_cast<std::size_t>(n), -1);
    std::vector<int> block_root;
    for (int v = 0; v < n; ++v) {
      bool cut = v == 0 || ((mask >> (v - 1)) & 1);
      if (cut) {
        block[static_cast<std::size_t>(v)] = static_cast<int>(block_root.size());
        block_root.push_back(v);
      } else {
        block[static_cast<std::size_t>(v)] = block[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      }
    }
    SpanningSplit split;
    // part tree per block
    std::function<Tree(int, int)> build_part = [&](int v, int b) -> Tree {
      std::vector<Tree> cs;
      for (int c : kids[static_cast<std::size_t>(v)])
        if (block[static_cast<std::size_t>(c)] == b) cs.push_back(build_part(c, b));
      return make_tree(letter[static_cast<std::size_t>(v)], std::move(cs));
    };
    for (std::size_t b = 0; b < block_root.size(); ++b)
      split.parts.push_back(build_part(block_root[b], static_cast<int>(b)));
    // contracted tree over block ids
    std::function<Tree(int)> build_contr = [&](int b) -> Tree {
      std::vector<Tree> cs;
      // children blocks: blocks whose root's parent lies in block b
      for (std::size_t b2 = 0; b2 < block_root.size(); ++b2) {
        int r = block_root[b2];
        if (r != 0 && block[static_cast<std::size_t>(parent[static_cast<std::size_t>(r)])] == b)
          cs.push_back(build_contr(static_cast<int>(b2)));
      }
      return make_tree(static_cast<Letter>(b), std::move(cs));
    };
    split.contracted = build_contr(0);
    out.push_back(std::move(split));
  }
  return out;
}

TensorLC<Forest> cefm_coproduct(const Forest& f) {
  for (const auto& t : f.trees) {
    std::function<void(const Tree&)> check = [&](const Tree& node) {
      if (node.letter != 0)
        throw std::domain_error("the contraction bialgebra is defined over undecorated forests");
      for (const auto& c : node.children) check(c);
    };
    check(t);
  }
  TensorLC<Forest> out;
  out.add({Forest{}, Forest{}}, 1);
  for (const auto& t : f.trees) {
    TensorLC<Forest> factor;
    for (const auto& split : spanning_splits(t)) {
      Forest left = make_forest(std::vector<Tree>(split.parts));
      std::function<Tree(const Tree&)> strip = [&](const Tree& node) -> Tree {
        std::vector<Tree> cs;
        for (const auto& c : node.children) cs.push_back(strip(c));
        return make_tree(0, std::move(cs));
      };
      factor.add({std::move(left), Forest{{strip(split.contracted)}}}, 1);
    }
    TensorLC<Forest> next;
    for (const auto& [x, cx] : out)
      for (const auto& [y, cy] : factor)
        next.add({forest_mul(x.first, y.first), forest_mul(x.second, y.second)}, cx * cy);
    out = std::move(next);
  }
  return out;
}

TensorLC<Forest> forest_unmerge(const Forest& f) {
  TensorLC<Forest> out;
  const std::size_t n = f.trees.size();
  std::map<std::pair<Forest, Forest>, int> seen;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Tree> l, r;
    for (std::size_t i = 0; i < n; ++i)
      ((mask >> i) & 1 ? l : r).push_back(f.trees[i]);
    seen[{make_forest(std::move(l)), make_forest(std::move(r))}] = 1;
  }
  // distinct complementary sub-multisets, each once
  for (const auto& [k, v] : seen) out.add(k, v);
  return out;
}

LinComb<Tree> prelie_graft(const Tree& sigma, const Tree& tau) {
  LinComb<Tree> out;
  std::vector<Tree> cs = tau.children;
  cs.push_back(sigma);
  out.add(make_tree(tau.letter, std::move(cs)), 1);
  for (std::size_t i = 0; i < tau.children.size(); ++i) {
    for (const auto& [sub, c] : prelie_graft(sigma, tau.children[i])) {
      std::vector<Tree> cs2 = tau.children;
      cs2[i] = sub;
      out.add(make_tree(tau.letter, std::move(cs2)), c);
    }
  }
  return out;
}

LinComb<Forest> prelie_graft_forest(const Tree& sigma, const Forest& omega) {
  LinComb<Forest> out;
  for (std::size_t i = 0; i < omega.trees.size(); ++i) {
    for (const auto& [sub, c] : prelie_graft(sigma, omega.trees[i])) {
      std::vector<Tree> ts = omega.trees;
      ts[i] = sub;
      out.add(make_forest(std::move(ts)), c);
    }
  }
  return out;
}

// -------------------------------------------------------------- antipodes --

// S(x) = -x - sum S(x') . x'' over the reduced coproduct, S(1) = 1.
namespace {

template <class K, class CoprodFn, class MulFn>
LinComb<K> antipode_generic(const K& x, std::map<K, LinComb<K>>& cache, CoprodFn&& cop,
                            MulFn&& mul) {
  if (x.degree() == 0) return LinComb<K>::single(x);
  if (auto it = cache.find(x); it != cache.end()) return it->second;
  LinComb<K> s = -LinComb<K>::single(x);
  for (const auto& [pr, c] : cop(x)) {
    if (pr.first.degree() == 0 || pr.second.degree() == 0) continue;  // reduced part
    LinComb<K> sl = antipode_generic(pr.first, cache, cop, mul);
    for (const auto& [k, ck] : sl)
      for (const auto& [m, cm] : mul(k, pr.second)) s.add(m, -c * ck * cm);
  }
  cache[x] = s;
  return s;
}

}  // namespace

LinComb<Word> antipode_shuffle(const Word& w) {
  thread_local std::map<Word, LinComb<Word>> cache;
  return antipode_generic(w, cache, deconcat, shuffle);
}

LinComb<Forest> antipode_bck(const Forest& f) {
  thread_local std::map<Forest, LinComb<Forest>> cache;
  return antipode_generic(f, cache, bck_coproduct, [](const Forest& a, const Forest& b) {
    return LinComb<Forest>::single(forest_mul(a, b));
  });
}

LinComb<PlanarForest> antipode_mkw(const PlanarForest& f) {
  thread_local std::map<PlanarForest, LinComb<PlanarForest>> cache;
  return antipode_generic(f, cache, mkw_coproduct, of_shuffle);
}

}  // namespace treehopf
