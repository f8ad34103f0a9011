#pragma once

#include <compare>
#include <vector>

#include "treehopf/alphabet.hpp"
#include "treehopf/lincomb.hpp"

namespace treehopf {

// One factor (content, letter) of a left-leg monomial in S(H_in x B1).
// Values are kept in multilinear normal form: every stored content is a
// single basis key; combinations appear as sums of monomials.
template <class K>
struct LLFactor {
  K content;
  Letter letter = 0;
  friend auto operator<=>(const LLFactor&, const LLFactor&) = default;
};

// Commutative monomial: sorted multiset of factors.
template <class K>
struct LLMono {
  std::vector<LLFactor<K>> factors;
  friend auto operator<=>(const LLMono&, const LLMono&) = default;

  int content_degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.content.degree();
    return d;
  }
  static LLMono mul(const LLMono& a, const LLMono& b) {
    LLMono m;
    m.factors.reserve(a.factors.size() + b.factors.size());
    m.factors = a.factors;
    m.factors.insert(m.factors.end(), b.factors.begin(), b.factors.end());
    std::sort(m.factors.begin(), m.factors.end());
    return m;
  }
  void normalize() { std::sort(factors.begin(), factors.end()); }
};

// Element of S(H_in x B1) (x) H.
template <class K, class R = Rational>
using CoactionValue = LinComb<std::pair<LLMono<K>, K>, R>;

}  // namespace treehopf
