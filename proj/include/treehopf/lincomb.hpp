#pragma once

#include <map>
#include <utility>

#include "treehopf/rational.hpp"

namespace treehopf {

// Sparse linear combination over a canonically ordered basis. Keys must be
// canonical forms; a stored coefficient is never zero. R is an exact
// commutative ring (Rational, or Poly for symbolic runs).
template <class K, class R = Rational>
class LinComb {
 public:
  using key_type = K;
  using scalar_type = R;

  LinComb() = default;

  static LinComb single(K k, R c = R(1)) {
    LinComb x;
    x.add(std::move(k), std::move(c));
    return x;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<K, R>& terms() const { return terms_; }

  // iterate (key, coeff) pairs directly; range-for over a temporary LinComb
  // is safe where range-for over temporary().terms() would dangle
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  R coeff(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? R(0) : it->second;
  }

  void add(K k, R c) {
    if (c == R(0)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (it->second == R(0)) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(const LinComb& a) {
    LinComb r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
  }

  LinComb& operator*=(const R& c) {
    if (c == R(0)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= c;
      if (it->second == R(0))
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }
  friend LinComb operator*(LinComb a, const R& c) { return a *= c; }
  friend LinComb operator*(const R& c, LinComb a) { return a *= c; }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  std::map<K, R> terms_;
};

// Tensor-product combinations of fixed arity live over tuple keys.
template <class K, class R = Rational>
using TensorLC = LinComb<std::pair<K, K>, R>;

template <class K, class R = Rational>
using Tensor3LC = LinComb<std::tuple<K, K, K>, R>;

// x ⊗ y with bilinear expansion.
template <class K, class R>
TensorLC<K, R> tensor(const LinComb<K, R>& x, const LinComb<K, R>& y) {
  TensorLC<K, R> r;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) r.add({kx, ky}, cx * cy);
  return r;
}

// Lifts a bilinear structure map on basis keys to combinations.
template <class K, class R, class F>
auto extend_bilinear(const LinComb<K, R>& x, const LinComb<K, R>& y, F&& f)
    -> decltype(auto) {
  using Out = decltype(f(std::declval<const K&>(), std::declval<const K&>()));
  using OutKey = typename Out::key_type;
  LinComb<OutKey, R> r;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      const R w = cx * cy;
      for (const auto& [kz, cz] : f(kx, ky)) r.add(kz, w * cz);
    }
  return r;
}

// Lifts a linear structure map on basis keys to combinations, with scalar
// promotion from the structure constants (Rational) into R.
template <class K, class R, class F>
auto extend_linear(const LinComb<K, R>& x, F&& f) {
  using Out = decltype(f(std::declval<const K&>()));
  using OutKey = typename Out::key_type;
  LinComb<OutKey, R> r;
  for (const auto& [k, c] : x)
    for (const auto& [kz, cz] : f(k)) r.add(kz, c * cz);
  return r;
}

}  // namespace treehopf
