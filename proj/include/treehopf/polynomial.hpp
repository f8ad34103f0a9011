#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "treehopf/rational.hpp"

namespace treehopf {

// Sparse multivariate polynomials over Rational. Only used as a symbolic
// scalar ring: the coaction oracle assigns one commuting indeterminate per
// (letter, primitive basis element) and runs the substitution recursion over
// this ring instead of Rational.
struct Monomial {
  // (variable id, exponent>0), sorted by id
  std::vector<std::pair<int, int>> powers;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    auto a = powers.begin(), b = o.powers.begin();
    while (a != powers.end() || b != o.powers.end()) {
      if (b == o.powers.end() || (a != powers.end() && a->first < b->first))
        r.powers.push_back(*a++);
      else if (a == powers.end() || b->first < a->first)
        r.powers.push_back(*b++);
      else {
        r.powers.emplace_back(a->first, a->second + b->second);
        ++a, ++b;
      }
    }
    return r;
  }
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c) {
    if (c != 0) terms_[Monomial{}] = c;
  }
  Poly(int c) : Poly(Rational(c)) {}

  static Poly variable(int id) {
    Poly p;
    p.terms_[Monomial{{{id, 1}}}] = 1;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const Poly& a, const Rational& c) {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, k] : a.terms_) r.terms_[m] = k * c;
    return r;
  }
  friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }

  friend bool operator==(const Poly&, const Poly&) = default;

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::string str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += format_rational(c);
      for (auto [v, e] : m.powers) {
        s += "*" + var_names.at(static_cast<std::size_t>(v));
        if (e > 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  std::map<Monomial, Rational> terms_;
};

}  // namespace treehopf
