#include "treehopf/axioms.hpp"

namespace treehopf {

namespace {

template <class Alg>
std::vector<typename Alg::Key> basis_upto(const Alphabet& a, int N, int mindeg = 0) {
  std::vector<typename Alg::Key> out;
  for (int d = mindeg; d <= N; ++d)
    for (const auto& k : Alg::basis(d, a)) out.push_back(k);
  return out;
}

template <class Alg>
void check_coassociativity(Report& rep, const Alphabet& a, int N) {
  using K = typename Alg::Key;
  for (const K& x : basis_upto<Alg>(a, N)) {
    Tensor3LC<K> lhs, rhs;
    for (const auto& [pr, c] : Alg::coproduct(x))
      for (const auto& [pr2, c2] : Alg::coproduct(pr.second))
        lhs.add({pr.first, pr2.first, pr2.second}, c * c2);
    for (const auto& [pr, c] : Alg::coproduct(x))
      for (const auto& [pr2, c2] : Alg::coproduct(pr.first))
        rhs.add({pr2.first, pr2.second, pr.second}, c * c2);
    if (!(lhs == rhs)) {
      rep.add("coassociativity", false, render(x, a));
      return;
    }
  }
  rep.add("coassociativity", true);
}

template <class Alg>
void check_counit(Report& rep, const Alphabet& a, int N) {
  using K = typename Alg::Key;
  for (const K& x : basis_upto<Alg>(a, N)) {
    LinComb<K> left, right;
    for (const auto& [pr, c] : Alg::coproduct(x)) {
      if (pr.first.degree() == 0) left.add(pr.second, c);
      if (pr.second.degree() == 0) right.add(pr.first, c);
    }
    const LinComb<K> id = LinComb<K>::single(x);
    if (!(left == id) || !(right == id)) {
      rep.add("counit laws", false, render(x, a));
      return;
    }
  }
  rep.add("counit laws", true);
}

template <class Alg>
void check_coproduct_multiplicative(Report& rep, const Alphabet& a, int N) {
  using K = typename Alg::Key;
  for (int dx = 1; dx < N; ++dx)
    for (const K& x : Alg::basis(dx, a))
      for (int dy = 1; dx + dy <= N; ++dy)
        for (const K& y : Alg::basis(dy, a)) {
          TensorLC<K> lhs;
          for (const auto& [z, cz] : Alg::product(x, y))
            for (const auto& [pr, c] : Alg::coproduct(z)) lhs.add(pr, cz * c);
          TensorLC<K> rhs;
          for (const auto& [px, cx] : Alg::coproduct(x))
            for (const auto& [py, cy] : Alg::coproduct(y))
              for (const auto& [l, cl] : Alg::product(px.first, py.first))
                for (const auto& [r, cr] : Alg::product(px.second, py.second))
                  rhs.add({l, r}, cx * cy * cl * cr);
          if (!(lhs == rhs)) {
            rep.add("coproduct multiplicativity", false, render(x, a) + " , " + render(y, a));
            return;
          }
        }
  rep.add("coproduct multiplicativity", true);
}

template <class Alg>
void check_product_laws(Report& rep, const Alphabet& a, int N) {
  using K = typename Alg::Key;
  bool assoc = true, comm = true;
  std::string ce_assoc, ce_comm;
  for (int dx = 1; dx < N && (assoc || comm); ++dx)
    for (const K& x : Alg::basis(dx, a))
      for (int dy = 1; dx + dy <= N; ++dy)
        for (const K& y : Alg::basis(dy, a)) {
          if (comm && !(Alg::product(x, y) == Alg::product(y, x))) {
            comm = false;
            ce_comm = render(x, a) + " , " + render(y, a);
          }
          for (int dz = 1; dx + dy + dz <= N && assoc; ++dz)
            for (const K& z : Alg::basis(dz, a)) {
              LinComb<K> lhs, rhs;
              for (const auto& [m, c] : Alg::product(x, y))
                for (const auto& [m2, c2] : Alg::product(m, z)) lhs.add(m2, c * c2);
              for (const auto& [m, c] : Alg::product(y, z))
                for (const auto& [m2, c2] : Alg::product(x, m)) rhs.add(m2, c * c2);
              if (!(lhs == rhs)) {
                assoc = false;
                ce_assoc = render(x, a) + " , " + render(y, a) + " , " + render(z, a);
              }
            }
        }
  rep.add("product associativity", assoc, ce_assoc);
  rep.add("product commutativity", comm, ce_comm);
}

template <class Alg>
void check_antipode(Report& rep, const Alphabet& a, int N) {
  using K = typename Alg::Key;
  for (const K& x : basis_upto<Alg>(a, N, 1)) {
    LinComb<K> acc;
    for (const auto& [pr, c] : Alg::coproduct(x))
      for (const auto& [s, cs] : Alg::antipode(pr.first))
        for (const auto& [m, cm] : Alg::product(s, pr.second)) acc.add(m, c * cs * cm);
    if (!acc.is_zero()) {
      rep.add("antipode identity", false, render(x, a));
      return;
    }
  }
  rep.add("antipode identity", true);
}

template <class Alg>
void check_grading(Report& rep, const Alphabet& a, int N) {
  using K = typename Alg::Key;
  for (const K& x : basis_upto<Alg>(a, N)) {
    for (const auto& [pr, c] : Alg::coproduct(x))
      if (pr.first.degree() + pr.second.degree() != x.degree()) {
        rep.add("grading", false, render(x, a));
        return;
      }
    for (int dy = 0; dy + x.degree() <= N; ++dy)
      for (const K& y : Alg::basis(dy, a))
        for (const auto& [m, c] : Alg::product(x, y))
          if (m.degree() != x.degree() + y.degree()) {
            rep.add("grading", false, render(x, a) + " , " + render(y, a));
            return;
          }
  }
  rep.add("grading", true);
}

template <class Alg>
Report run_checks(const Alphabet& a, int N) {
  Report rep;
  rep.title = "hopf axioms: " + algebra_name(Alg::tag) + ", degree <= " + std::to_string(N);
  check_coassociativity<Alg>(rep, a, N);
  check_counit<Alg>(rep, a, N);
  check_coproduct_multiplicative<Alg>(rep, a, N);
  check_product_laws<Alg>(rep, a, N);
  if constexpr (Alg::hopf) check_antipode<Alg>(rep, a, N);
  check_grading<Alg>(rep, a, N);
  return rep;
}

}  // namespace

Report hopf_axiom_check(AlgebraTag alg, const Alphabet& alphabet, int N) {
  return with_algebra(alg, [&](auto a) { return run_checks<decltype(a)>(alphabet, N); });
}

}  // namespace treehopf
