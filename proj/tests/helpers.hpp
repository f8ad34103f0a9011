#pragma once

#include <random>
#include <vector>

#include "treehopf/algebra.hpp"
#include "treehopf/functional.hpp"

namespace th = treehopf;

// random decorated objects for property-style tests (seeded, deterministic)
inline th::PlanarTree random_planar_tree(std::mt19937& rng, int degree, const th::Alphabet& a) {
  std::uniform_int_distribution<int> letter(0, a.size() - 1);
  th::PlanarTree t{letter(rng), {}};
  int rest = degree - 1;
  while (rest > 0) {
    std::uniform_int_distribution<int> part(1, rest);
    int d = part(rng);
    t.children.push_back(random_planar_tree(rng, d, a));
    rest -= d;
  }
  return t;
}

inline th::PlanarForest random_planar_forest(std::mt19937& rng, int degree, const th::Alphabet& a) {
  th::PlanarForest f;
  int rest = degree;
  while (rest > 0) {
    std::uniform_int_distribution<int> part(1, rest);
    int d = part(rng);
    f.trees.push_back(random_planar_tree(rng, d, a));
    rest -= d;
  }
  return f;
}

inline th::Tree random_tree(std::mt19937& rng, int degree, const th::Alphabet& a) {
  return th::to_nonplanar(random_planar_tree(rng, degree, a));
}

inline th::Forest random_forest(std::mt19937& rng, int degree, const th::Alphabet& a) {
  return th::to_nonplanar(random_planar_forest(rng, degree, a));
}

inline th::Word random_word(std::mt19937& rng, int degree, const th::Alphabet& a) {
  std::uniform_int_distribution<int> letter(0, a.size() - 1);
  th::Word w;
  for (int i = 0; i < degree; ++i) w.letters.push_back(letter(rng));
  return w;
}

template <class Alg>
typename Alg::Key random_key(std::mt19937& rng, int degree, const th::Alphabet& a) {
  if constexpr (Alg::tag == th::AlgebraTag::Shuffle)
    return random_word(rng, degree, a);
  else if constexpr (Alg::tag == th::AlgebraTag::MKW)
    return random_planar_forest(rng, degree, a);
  else
    return random_forest(rng, degree, a);
}
