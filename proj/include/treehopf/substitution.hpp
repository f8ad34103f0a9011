#pragma once

#include <map>
#include <random>

#include "treehopf/functional.hpp"
#include "treehopf/leftleg.hpp"

namespace treehopf {

// The family v = {v_i} of primitive dual elements indexed by letters. Images
// are elements of the completed dual written in the dual basis.
template <class Alg, class R = Rational>
struct SubstitutionRule {
  using Key = typename Alg::Key;
  Alphabet alphabet;
  std::map<Letter, LinComb<Key, R>> images;
  int max_degree = 0;

  const LinComb<Key, R>& image(Letter l) const {
    auto it = images.find(l);
    if (it == images.end()) throw std::invalid_argument("rule has no image for letter");
    return it->second;
  }
};

// True iff <v, x (.) y> = 0 for all basis x, y in ker(eps) with
// deg(x) + deg(y) <= cap, for the algebra's commutative product.
template <class Alg, class R>
bool check_primitive(const LinComb<typename Alg::Key, R>& v, const Alphabet& alphabet, int cap) {
  using K = typename Alg::Key;
  for (int dx = 1; dx < cap; ++dx)
    for (int dy = 1; dx + dy <= cap; ++dy)
      for (const K& x : Alg::basis(dx, alphabet))
        for (const K& y : Alg::basis(dy, alphabet)) {
          R val{};
          for (const auto& [k, c] : Alg::product(x, y)) val += v.coeff(k) * c;
          if (!(val == R(0))) return false;
        }
  return true;
}

template <class Alg, class R>
void validate_rule(const SubstitutionRule<Alg, R>& rule, bool primitivity = true) {
  for (Letter l = 0; l < rule.alphabet.size(); ++l) {
    auto it = rule.images.find(l);
    if (it == rule.images.end())
      throw std::invalid_argument("substitution rule misses letter " + rule.alphabet.token(l));
    for (const auto& [k, c] : it->second)
      if (k.degree() > rule.max_degree || k.degree() == 0)
        throw std::invalid_argument("rule image term of invalid degree");
    if (primitivity && !check_primitive<Alg>(it->second, rule.alphabet, 2 * rule.max_degree))
      throw std::invalid_argument("rule image is not primitive");
  }
}

template <class K, class R>
void truncate(LinComb<K, R>& x, int cap) {
  LinComb<K, R> out;
  for (const auto& [k, c] : x)
    if (k.degree() <= cap) out.add(k, c);
  x = std::move(out);
}

enum class BranchStrategy { Canonical, Randomized };

template <class Alg, class R = Rational>
struct SubstContext {
  const SubstitutionRule<Alg, R>& rule;
  int cap;
  BranchStrategy strategy = BranchStrategy::Canonical;
  std::mt19937 rng{0xb5eu};
  std::map<typename Alg::Key, LinComb<typename Alg::Key, R>> memo;

  std::size_t pick(std::size_t n) {
    if (strategy == BranchStrategy::Canonical || n <= 1) return 0;
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }
};

namespace detail {

// pre-Lie grafting of functionals supported on single trees
template <class R>
LinComb<Forest, R> prelie_f(const LinComb<Forest, R>& a, const LinComb<Forest, R>& b) {
  return extend_bilinear(a, b, [](const Forest& x, const Forest& y) {
    if (x.trees.size() != 1 || y.trees.size() != 1)
      throw std::logic_error("pre-Lie grafting needs single-tree support");
    LinComb<Forest> out;
    for (const auto& [t, c] : prelie_graft(x.trees[0], y.trees[0]))
      out.add(Forest{{t}}, c);
    return out;
  });
}

}  // namespace detail

// S_v as the unique morphism extension, exactly up to the cap.
template <class Alg, class R>
LinComb<typename Alg::Key, R> substitute_key(SubstContext<Alg, R>& ctx,
                                             const typename Alg::Key& x);

namespace detail {

template <class Alg, class R>
LinComb<typename Alg::Key, R> substitute_shuffle(SubstContext<Alg, R>& ctx, const Word& x) {
  LinComb<Word, R> acc = LinComb<Word, R>::single(Word{});
  for (Letter l : x.letters) {
    acc = concat_lc(acc, ctx.rule.image(l));
    truncate(acc, ctx.cap);
  }
  return acc;
}

template <class Alg, class R>
LinComb<Forest, R> substitute_bck(SubstContext<Alg, R>& ctx, const Forest& x) {
  if (x.trees.empty()) return LinComb<Forest, R>::single(Forest{});
  if (x.trees.size() == 1) {
    const Tree& tau = x.trees[0];
    if (tau.children.empty()) return ctx.rule.image(tau.letter);
    // remove one root branch sigma; tau = sigma grafted-at-root on tau', so
    // S(tau) = S(sigma) graft S(tau') minus the below-root attachments
    const std::size_t bi = ctx.pick(tau.children.size());
    const Tree sigma = tau.children[bi];
    std::vector<Tree> rest = tau.children;
    rest.erase(rest.begin() + static_cast<long>(bi));
    const Tree tau_rest = make_tree(tau.letter, std::move(rest));

    LinComb<Forest, R> out = detail::prelie_f(substitute_key(ctx, Forest{{sigma}}),
                                              substitute_key(ctx, Forest{{tau_rest}}));
    truncate(out, ctx.cap);
    LinComb<Tree> corrections = prelie_graft(sigma, tau_rest);
    corrections.add(canonicalize(tau), Rational(-1));  // drop the at-root term
    for (const auto& [t, c] : corrections) {
      LinComb<Forest, R> sub = substitute_key(ctx, Forest{{t}});
      for (const auto& [k, ck] : sub) out.add(k, -(ck * c));
    }
    return out;
  }
  // forest: S(tau . w) = S(tau) * S(w) - S(tau graft w), recursing on the
  // component count (the star is the Grossman-Larson convolution)
  const std::size_t ti = ctx.pick(x.trees.size());
  const Tree tau = x.trees[ti];
  std::vector<Tree> rest = x.trees;
  rest.erase(rest.begin() + static_cast<long>(ti));
  const Forest omega = make_forest(std::move(rest));

  Functional<Forest, R> ft{ctx.cap, substitute_key(ctx, Forest{{tau}})};
  Functional<Forest, R> fw{ctx.cap, substitute_key(ctx, omega)};
  LinComb<Forest, R> out =
      convolve<BckAlg>(ft, fw, ctx.cap, ctx.rule.alphabet, CoproductKind::Algebra).terms;
  for (const auto& [f, c] : prelie_graft_forest(tau, omega)) {
    LinComb<Forest, R> sub = substitute_key(ctx, f);
    for (const auto& [k, ck] : sub) out.add(k, -(ck * c));
  }
  return out;
}

template <class Alg, class R>
LinComb<PlanarForest, R> substitute_mkw(SubstContext<Alg, R>& ctx, const PlanarForest& x) {
  if (x.trees.empty()) return LinComb<PlanarForest, R>::single(PlanarForest{});
  if (x.trees.size() == 1) {
    const PlanarTree& tau = x.trees[0];
    if (tau.children.empty()) return ctx.rule.image(tau.letter);
    // the appending graft reproduces tau exactly once, at the root, when the
    // removed branch is the last one
    PlanarTree tau_rest = tau;
    const PlanarTree sigma = tau_rest.children.back();
    tau_rest.children.pop_back();

    LinComb<PlanarForest, R> out =
        postlie_graft_lc(substitute_key(ctx, PlanarForest{{sigma}}),
                         substitute_key(ctx, PlanarForest{{tau_rest}}));
    truncate(out, ctx.cap);
    LinComb<PlanarForest> corrections =
        postlie_graft(PlanarForest{{sigma}}, PlanarForest{{tau_rest}});
    corrections.add(PlanarForest{{tau}}, Rational(-1));
    for (const auto& [f, c] : corrections) {
      LinComb<PlanarForest, R> sub = substitute_key(ctx, f);
      for (const auto& [k, ck] : sub) out.add(k, -(ck * c));
    }
    return out;
  }
  // forest: concatenation morphism; any split point gives the same value
  const std::size_t cut = 1 + ctx.pick(x.trees.size() - 1);
  PlanarForest left{std::vector<PlanarTree>(x.trees.begin(), x.trees.begin() + static_cast<long>(cut))};
  PlanarForest right{std::vector<PlanarTree>(x.trees.begin() + static_cast<long>(cut), x.trees.end())};
  LinComb<PlanarForest, R> out =
      of_concat_lc(substitute_key(ctx, left), substitute_key(ctx, right));
  truncate(out, ctx.cap);
  return out;
}

}  // namespace detail

template <class Alg, class R>
LinComb<typename Alg::Key, R> substitute_key(SubstContext<Alg, R>& ctx,
                                             const typename Alg::Key& x) {
  auto it = ctx.memo.find(x);
  if (it != ctx.memo.end()) return it->second;
  LinComb<typename Alg::Key, R> out;
  if constexpr (Alg::tag == AlgebraTag::Shuffle)
    out = detail::substitute_shuffle(ctx, x);
  else if constexpr (Alg::tag == AlgebraTag::BCK)
    out = detail::substitute_bck(ctx, x);
  else
    out = detail::substitute_mkw(ctx, x);
  truncate(out, ctx.cap);
  ctx.memo.emplace(x, out);
  return out;
}

// S_v(delta_x) truncated at cap N.
template <class Alg, class R>
Functional<typename Alg::Key, R> substitute(const SubstitutionRule<Alg, R>& rule,
                                            const typename Alg::Key& x, int N,
                                            BranchStrategy strategy = BranchStrategy::Canonical,
                                            unsigned seed = 0xb5eu) {
  SubstContext<Alg, R> ctx{rule, N, strategy, std::mt19937{seed}, {}};
  return Functional<typename Alg::Key, R>{N, substitute_key(ctx, x)};
}

// Linear extension to functionals.
template <class Alg, class R>
Functional<typename Alg::Key, R> substitute_functional(
    const SubstitutionRule<Alg, R>& rule, const Functional<typename Alg::Key, R>& f, int N,
    BranchStrategy strategy = BranchStrategy::Canonical, unsigned seed = 0xb5eu) {
  SubstContext<Alg, R> ctx{rule, N, strategy, std::mt19937{seed}, {}};
  Functional<typename Alg::Key, R> out{N, {}};
  for (const auto& [k, c] : f.terms) {
    LinComb<typename Alg::Key, R> s = substitute_key(ctx, k);
    for (const auto& [k2, c2] : s) out.terms.add(k2, c * c2);
  }
  return out;
}

// T_v = S_{v'} with v'_i = v_i + e_i.
template <class Alg, class R>
SubstitutionRule<Alg, R> translation_rule(const SubstitutionRule<Alg, R>& rule) {
  SubstitutionRule<Alg, R> shifted = rule;
  for (Letter l = 0; l < rule.alphabet.size(); ++l)
    shifted.images[l].add(Alg::letter_key(l), R(1));
  shifted.max_degree = std::max(1, rule.max_degree);
  return shifted;
}

template <class Alg, class R>
Functional<typename Alg::Key, R> translate(const SubstitutionRule<Alg, R>& rule,
                                           const typename Alg::Key& x, int N,
                                           BranchStrategy strategy = BranchStrategy::Canonical,
                                           unsigned seed = 0xb5eu) {
  return substitute(translation_rule(rule), x, N, strategy, seed);
}

template <class Alg, class R>
Functional<typename Alg::Key, R> translate_functional(
    const SubstitutionRule<Alg, R>& rule, const Functional<typename Alg::Key, R>& f, int N) {
  return substitute_functional(translation_rule(rule), f, N);
}

// <e^v, (w1,e_j1)...(wk,e_jk)> = prod <v_jm, wm>; the empty monomial gives 1.
template <class Alg, class R>
R eval_exp(const SubstitutionRule<Alg, R>& rule, const LLMono<typename Alg::Key>& mono) {
  R out{1};
  for (const auto& f : mono.factors) out = out * rule.image(f.letter).coeff(f.content);
  return out;
}

}  // namespace treehopf
