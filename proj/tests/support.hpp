#pragma once

#include <random>

#include "exlsa/matrix.hpp"
#include "exlsa/scalar.hpp"

namespace testing {

inline const exlsa::Scalar l1 = exlsa::Scalar::variable(exlsa::Var::l1);
inline const exlsa::Scalar l2 = exlsa::Scalar::variable(exlsa::Var::l2);
inline const exlsa::Scalar l3 = exlsa::Scalar::variable(exlsa::Var::l3);
inline const exlsa::Scalar al = exlsa::Scalar::variable(exlsa::Var::a);

// small polynomial in the parameters, sometimes zero
inline exlsa::Scalar small_poly(std::mt19937 &rng, int terms = 2) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 1);
  const exlsa::Scalar vars[] = {l1, l2, l3, al};
  exlsa::Scalar p;
  for (int t = 0; t < terms; ++t) {
    exlsa::Scalar m(c(rng));
    for (const auto &v : vars)
      m *= v.pow(e(rng));
    p += m;
  }
  return p;
}

inline exlsa::Vector random_vector(std::mt19937 &rng, std::size_t n) {
  exlsa::Vector v(n);
  for (auto &x : v)
    x = small_poly(rng, 1);
  return v;
}

inline exlsa::Vector random_int_vector(std::mt19937 &rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-3, 3);
  exlsa::Vector v(n);
  for (auto &x : v)
    x = exlsa::Scalar(c(rng));
  return v;
}

} // namespace testing
