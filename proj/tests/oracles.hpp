#pragma once

// Brute-force expansions over the full symmetric group, used as oracles
// for the shuffle sums.

#include <algorithm>
#include <numeric>
#include <random>

#include "exlsa/altmap.hpp"
#include "support.hpp"

namespace testing {

using namespace exlsa;

inline exlsa::Scalar factorial(int n) {
  Scalar r(1);
  for (int i = 2; i <= n; ++i)
    r *= i;
  return r;
}

inline exlsa::AltMap random_map(std::mt19937 &rng, const SpacePtr &v, const CodomainPtr &w, int p) {
  return AltMap::from_function(v, w, p, [&](const std::vector<int> &) { return random_int_vector(rng, w->dim()); });
}

// (1/p!q!) sum over all of S_{p+q}
inline exlsa::Vector wedge_oracle(const AltMap &f, const AltMap &g, const Pairing &pr, const std::vector<int> &args) {
  const int p = f.degree();
  std::vector<int> perm(args.size());
  std::iota(perm.begin(), perm.end(), 0);
  Vector acc(pr.result()->dim());
  do {
    std::vector<int> a, b, img;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      img.push_back(perm[i]);
      (static_cast<int>(i) < p ? a : b).push_back(args[static_cast<std::size_t>(perm[i])]);
    }
    axpy(acc, Scalar(permutation_sign(img)), pr.apply(f.at(a), g.at(b)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (factorial(p) * factorial(g.degree())).inverse() * acc;
}

// (1/(q!)^p) sum over all of S_{pq}
inline exlsa::Vector compose_oracle(const AltMap &f, const AltMap &g, const std::vector<int> &args) {
  const int p = f.degree(), q = g.degree();
  std::vector<int> perm(args.size());
  std::iota(perm.begin(), perm.end(), 0);
  Vector acc(f.codomain()->dim());
  do {
    std::vector<Vector> inner;
    for (int b = 0; b < p; ++b) {
      std::vector<int> blk;
      for (int i = 0; i < q; ++i)
        blk.push_back(args[static_cast<std::size_t>(perm[static_cast<std::size_t>(b * q + i)])]);
      inner.push_back(g.at(blk));
    }
    axpy(acc, Scalar(permutation_sign(perm)), f.evaluate(inner));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return factorial(q).pow(p).inverse() * acc;
}

} // namespace testing
