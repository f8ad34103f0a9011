#pragma once

#include "treehopf/algebra.hpp"
#include "treehopf/lincomb.hpp"
#include "treehopf/rational.hpp"

namespace treehopf {

// Truncated element of the completed dual: values on basis keys of degree up
// to an explicit cap. Operations state their cap contracts; anything above
// the cap is unknown, not zero.
template <class K, class R = Rational>
struct Functional {
  int cap = 0;
  LinComb<K, R> terms;  // invariant: stored keys have degree <= cap

  void add(K k, R c) {
    if (k.degree() > cap) throw DegreeError("functional term above cap");
    terms.add(std::move(k), std::move(c));
  }
  R at(const K& k) const { return terms.coeff(k); }
  bool is_zero() const { return terms.is_zero(); }

  friend bool operator==(const Functional& a, const Functional& b) {
    return a.terms == b.terms;  // caps are contracts, not values
  }
};

template <class K, class R = Rational>
Functional<K, R> counit_functional(int cap, K unit = K{}) {
  Functional<K, R> f{cap, {}};
  f.terms.add(std::move(unit), R(1));
  return f;
}

template <class K, class R = Rational>
Functional<K, R> delta_functional(const K& k, int cap) {
  Functional<K, R> f{cap, {}};
  f.add(k, R(1));
  return f;
}

// <f, x> = sum f(b) x(b); errors out if x has a key above the cap.
template <class K, class R>
R pairing(const Functional<K, R>& f, const LinComb<K, R>& x) {
  R out{};
  for (const auto& [k, c] : x) {
    if (k.degree() > f.cap) throw DegreeError("pairing: element exceeds functional cap");
    out += f.at(k) * c;
  }
  return out;
}

// Convolution (a (x) b) o Delta for the named coproduct, computed by
// transposition over the basis of degree <= N.
template <class Alg, class R>
Functional<typename Alg::Key, R> convolve(const Functional<typename Alg::Key, R>& a,
                                          const Functional<typename Alg::Key, R>& b, int N,
                                          const Alphabet& alphabet,
                                          CoproductKind kind = CoproductKind::Algebra) {
  using K = typename Alg::Key;
  if (a.cap < N || b.cap < N) throw DegreeError("convolve: operand caps below requested degree");
  Functional<K, R> out{N, {}};
  for (int d = 0; d <= N; ++d) {
    for (const K& x : Alg::basis(d, alphabet)) {
      R val{};
      for (const auto& [pr, c] : Alg::coproduct_of(kind, x)) {
        const R av = a.at(pr.first);
        if (av == R(0)) continue;
        const R bv = b.at(pr.second);
        if (bv == R(0)) continue;
        val += av * bv * c;
      }
      if (!(val == R(0))) out.terms.add(x, val);
    }
  }
  return out;
}

// Convolution exponential of an infinitesimal character (vanishes on the
// unit), truncated at the cap. alpha^{*k} vanishes below degree k, so the sum
// is finite.
template <class Alg>
Functional<typename Alg::Key, Rational> exp_convolution(
    const Functional<typename Alg::Key, Rational>& alpha, int N, const Alphabet& alphabet,
    CoproductKind kind = CoproductKind::Algebra) {
  using K = typename Alg::Key;
  if (alpha.at(Alg::unit()) != 0)
    throw std::invalid_argument("exp_convolution: argument must vanish on the unit");
  Functional<K, Rational> out = counit_functional<K>(N);
  Functional<K, Rational> power = counit_functional<K>(N);
  Rational kfact = 1;
  for (int k = 1; k <= N; ++k) {
    power = convolve<Alg>(power, alpha, N, alphabet, kind);
    kfact *= k;
    if (power.is_zero()) break;
    for (const auto& [key, c] : power.terms) out.terms.add(key, c / kfact);
  }
  return out;
}

// Multiplicativity of a functional w.r.t. the algebra product, checked on all
// basis pairs with deg x + deg y <= cap.
template <class Alg>
bool is_character(const Functional<typename Alg::Key, Rational>& chi, const Alphabet& alphabet,
                  int cap) {
  using K = typename Alg::Key;
  if (chi.at(Alg::unit()) != 1) return false;
  for (int dx = 1; dx <= cap; ++dx)
    for (int dy = 1; dx + dy <= cap; ++dy)
      for (const K& x : Alg::basis(dx, alphabet))
        for (const K& y : Alg::basis(dy, alphabet)) {
          Rational lhs = 0;
          for (const auto& [k, c] : Alg::product(x, y)) lhs += chi.at(k) * c;
          if (lhs != chi.at(x) * chi.at(y)) return false;
        }
  return true;
}

}  // namespace treehopf
