#include "treehopf/liebasis.hpp"

#include <algorithm>
#include <stdexcept>

namespace treehopf {

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular system");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational s = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

template <class K>
const std::vector<std::size_t>& PrimBasis<K>::degree_block(int d) const {
  auto it = by_degree_.find(d);
  if (it != by_degree_.end()) return it->second;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].degree == d) idx.push_back(i);
  return by_degree_.emplace(d, std::move(idx)).first->second;
}

template <class K>
const std::vector<std::vector<Rational>>& PrimBasis<K>::gram_inv(int d) const {
  auto it = gram_inverse_.find(d);
  if (it != gram_inverse_.end()) return it->second;
  const auto& blk = degree_block(d);
  const std::size_t n = blk.size();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational dot = 0;
      const auto& ei = elems_[blk[i]].expansion;
      const auto& ej = elems_[blk[j]].expansion;
      for (const auto& [k, c] : ei) dot += c * ej.coeff(k);
      g[i][j] = g[j][i] = dot;
    }
  return gram_inverse_.emplace(d, invert_matrix(std::move(g))).first->second;
}

template <class K>
std::vector<std::pair<std::size_t, Rational>> PrimBasis<K>::class_coords(
    const LinComb<K>& x) const {
  if (x.is_zero()) return {};
  const int d = x.terms().begin()->first.degree();
  for (const auto& [k, c] : x)
    if (k.degree() != d) throw std::invalid_argument("class_coords: inhomogeneous element");
  const auto& blk = degree_block(d);
  if (blk.empty()) {
    // no primitives in this degree: class must be zero
    return {};
  }
  std::vector<Rational> rhs(blk.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < blk.size(); ++i) {
    Rational dot = 0;
    for (const auto& [k, c] : elems_[blk[i]].expansion) dot += c * x.coeff(k);
    rhs[i] = dot;
    if (dot != 0) any = true;
  }
  std::vector<std::pair<std::size_t, Rational>> out;
  if (!any) return out;
  const auto& ginv = gram_inv(d);
  for (std::size_t i = 0; i < blk.size(); ++i) {
    Rational t = 0;
    for (std::size_t j = 0; j < blk.size(); ++j) t += ginv[i][j] * rhs[j];
    if (t != 0) out.emplace_back(blk[i], t);
  }
  return out;
}

template <class K>
LinComb<K> PrimBasis<K>::class_project(const LinComb<K>& x) const {
  LinComb<K> out;
  for (const auto& [i, t] : class_coords(x)) out += t * elems_[i].expansion;
  return out;
}

template class PrimBasis<Word>;
template class PrimBasis<Forest>;
template class PrimBasis<PlanarForest>;

// ------------------------------------------------------- Lyndon machinery --

namespace {

// Lyndon words over symbols 0..m-1 with degrees deg[i], total degree <= D.
// Brute force: a word is Lyndon iff strictly smaller than all proper suffixes.
bool is_lyndon(const std::vector<int>& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<int> suf(w.begin() + static_cast<long>(i), w.end());
    if (!(w < suf)) return false;
  }
  return true;
}

void gen_words(const std::vector<int>& degs, int remaining, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (int s = 0; s < static_cast<int>(degs.size()); ++s) {
    if (degs[static_cast<std::size_t>(s)] > remaining) continue;
    cur.push_back(s);
    gen_words(degs, remaining - degs[static_cast<std::size_t>(s)], cur, out);
    cur.pop_back();
  }
}

// standard factorization bracketing of a Lyndon word: w = uv with v the
// longest proper Lyndon suffix
template <class K, class ConcatFn>
LinComb<K> expand_lyndon(const std::vector<int>& w, const std::vector<LinComb<K>>& gens,
                         ConcatFn&& cat, std::string* display,
                         const std::vector<std::string>& names) {
  if (w.size() == 1) {
    if (display) *display = names[static_cast<std::size_t>(w[0])];
    return gens[static_cast<std::size_t>(w[0])];
  }
  std::size_t split = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<int> suf(w.begin() + static_cast<long>(i), w.end());
    if (is_lyndon(suf)) {
      split = i;
      break;
    }
  }
  std::vector<int> u(w.begin(), w.begin() + static_cast<long>(split));
  std::vector<int> v(w.begin() + static_cast<long>(split), w.end());
  std::string du, dv;
  LinComb<K> eu = expand_lyndon(u, gens, cat, display ? &du : nullptr, names);
  LinComb<K> ev = expand_lyndon(v, gens, cat, display ? &dv : nullptr, names);
  if (display) *display = "[" + du + "," + dv + "]";
  return cat(eu, ev) - cat(ev, eu);
}

template <class K, class ConcatFn>
PrimBasis<K> lyndon_basis(const std::vector<K>& symbols, const std::vector<std::string>& names,
                          int max_degree, ConcatFn&& cat) {
  std::vector<int> degs;
  std::vector<LinComb<K>> gens;
  for (const auto& s : symbols) {
    degs.push_back(s.degree());
    gens.push_back(LinComb<K>::single(s));
  }
  std::vector<std::vector<int>> words;
  std::vector<int> cur;
  gen_words(degs, max_degree, cur, words);
  std::vector<PrimElement<K>> elems;
  for (const auto& w : words) {
    if (!is_lyndon(w)) continue;
    int total = 0;
    for (int s : w) total += degs[static_cast<std::size_t>(s)];
    PrimElement<K> e;
    e.degree = total;
    e.expansion = expand_lyndon(w, gens, cat, &e.display, names);
    elems.push_back(std::move(e));
  }
  std::stable_sort(elems.begin(), elems.end(),
                   [](const PrimElement<K>& a, const PrimElement<K>& b) {
                     return a.degree < b.degree;
                   });
  return PrimBasis<K>(std::move(elems));
}

}  // namespace

PrimBasis<Word> shuffle_prim_basis(int max_degree, const Alphabet& a) {
  std::vector<Word> symbols;
  std::vector<std::string> names;
  for (Letter l = 0; l < a.size(); ++l) {
    symbols.push_back(Word{{l}});
    names.push_back(a.token(l));
  }
  return lyndon_basis(symbols, names, max_degree,
                      [](const LinComb<Word>& x, const LinComb<Word>& y) {
                        return concat_lc(x, y);
                      });
}

PrimBasis<PlanarForest> mkw_prim_basis(int max_degree, const Alphabet& a) {
  std::vector<PlanarForest> symbols;
  std::vector<std::string> names;
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& t : planar_trees_of_degree(d, a)) {
      symbols.push_back(PlanarForest{{t}});
      names.push_back(render(t, a));
    }
  return lyndon_basis(symbols, names, max_degree,
                      [](const LinComb<PlanarForest>& x, const LinComb<PlanarForest>& y) {
                        return of_concat_lc(x, y);
                      });
}

PrimBasis<Forest> bck_prim_basis(int max_degree, const Alphabet& a) {
  std::vector<PrimElement<Forest>> elems;
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& t : trees_of_degree(d, a)) {
      PrimElement<Forest> e;
      e.degree = d;
      e.display = render(t, a);
      e.expansion = LinComb<Forest>::single(Forest{{t}});
      elems.push_back(std::move(e));
    }
  return PrimBasis<Forest>(std::move(elems));
}

}  // namespace treehopf
