#include <doctest.h>

#include "exlsa/errors.hpp"
#include "exlsa/exterior.hpp"
#include "support.hpp"

using namespace exlsa;
using namespace testing;

namespace {

SpacePtr diag3() { return QuadraticSpace::diagonal({"e1", "e2", "e3"}, {l1, l2, l3}); }

SpacePtr full3() {
  Matrix g(3, 3);
  g(0, 0) = l1;
  g(1, 1) = 2;
  g(2, 2) = al;
  g(0, 1) = g(1, 0) = 1;
  g(1, 2) = g(2, 1) = l2;
  return QuadraticSpace::make({"x", "y", "z"}, g);
}

} // namespace

TEST_CASE("multi-index tables") {
  CHECK(multi_indices(7, 3).size() == 35);
  CHECK(multi_indices(3, 4).empty());
  const auto &m = multi_indices(4, 2);
  CHECK(indices_of(m[0]) == std::vector<int>{0, 1});
  CHECK(indices_of(m[5]) == std::vector<int>{2, 3});
  for (std::size_t k = 0; k < m.size(); ++k)
    CHECK(position(4, m[k]) == k);
  CHECK(index_label(mask_of({0, 1, 3, 6})) == "e_{1247}");
  CHECK(index_label(mask_of({0, 9})) == "e_{1,10}");
}

TEST_CASE("shuffle and permutation signs") {
  CHECK(shuffle_sign(mask_of({0}), mask_of({1})) == 1);
  CHECK(shuffle_sign(mask_of({1}), mask_of({0})) == -1);
  CHECK(shuffle_sign(mask_of({1, 2}), mask_of({0})) == 1);
  CHECK(shuffle_sign(mask_of({0, 2}), mask_of({1, 3})) == -1);
  CHECK(shuffle_sign(mask_of({0}), mask_of({0, 1})) == 0);
  CHECK(permutation_sign({2, 0, 1}) == 1);
  CHECK(permutation_sign({1, 0, 2}) == -1);
  CHECK(permutation_sign({1, 1}) == 0);
}

TEST_CASE("quadratic space validation") {
  Matrix bad(2, 2);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(QuadraticSpace::make({"a", "b"}, bad), ShapeMismatch);
  CHECK_THROWS_AS(QuadraticSpace::diagonal({"a", "b"}, {l1, Scalar(0)}), SingularMatrix);
  CHECK_THROWS_AS(QuadraticSpace::make({"a"}, Matrix::identity(2)), ShapeMismatch);
}

TEST_CASE("B_Lambda on a diagonal space") {
  const auto v = diag3();
  const auto e12 = ExteriorElement::basis(v, mask_of({0, 1}));
  const auto e13 = ExteriorElement::basis(v, mask_of({0, 2}));
  CHECK(gram_lambda(e12, e12) == l1 * l2);
  CHECK(gram_lambda(e12, e13).is_zero());
  CHECK_THROWS_AS(gram_lambda(e12, ExteriorElement::basis(v, 1)), DegreeMismatch);
  CHECK(lambda_gram(*v, 3)(0, 0) == l1 * l2 * l3);
}

TEST_CASE("B_Lambda of decomposables is the Gram determinant") {
  std::mt19937 rng(7);
  for (const auto &v : {diag3(), full3()})
    for (int trial = 0; trial < 5; ++trial) {
      const Vector x1 = random_vector(rng, 3), x2 = random_vector(rng, 3);
      const Vector y1 = random_vector(rng, 3), y2 = random_vector(rng, 3);
      const auto a = wedge(ExteriorElement::from_vector(v, x1), ExteriorElement::from_vector(v, x2));
      const auto b = wedge(ExteriorElement::from_vector(v, y1), ExteriorElement::from_vector(v, y2));
      const Scalar det = v->form(x1, y1) * v->form(x2, y2) - v->form(x1, y2) * v->form(x2, y1);
      CHECK(gram_lambda(a, b) == det);
    }
}

TEST_CASE("eta round trip") {
  std::mt19937 rng(11);
  for (const auto &v : {diag3(), full3()})
    for (int p = 0; p <= 3; ++p) {
      ExteriorElement x(v, p, random_vector(rng, binomial(3, static_cast<std::size_t>(p))));
      const auto f = eta(x);
      CHECK(f.dual());
      CHECK(eta_inverse(f) == x);
      // eta(x)(y) = B_Lambda(x, y)
      ExteriorElement y(v, p, random_vector(rng, binomial(3, static_cast<std::size_t>(p))));
      Scalar s;
      for (std::size_t k = 0; k < y.coeffs().size(); ++k)
        s += f.coeffs()[k] * y.coeffs()[k];
      CHECK(s == gram_lambda(x, y));
    }
}

TEST_CASE("wedge is graded commutative and associative") {
  std::mt19937 rng(3);
  const auto v = QuadraticSpace::diagonal({"1", "2", "3", "4", "5"}, {1, 1, 1, 1, 1});
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; p + q <= 5; ++q) {
      ExteriorElement x(v, p, random_int_vector(rng, binomial(5, static_cast<std::size_t>(p))));
      ExteriorElement y(v, q, random_int_vector(rng, binomial(5, static_cast<std::size_t>(q))));
      const auto xy = wedge(x, y), yx = wedge(y, x);
      CHECK(xy == (p * q % 2 ? yx.scaled(Scalar(-1)) : yx));
      ExteriorElement z(v, 1, random_int_vector(rng, 5));
      CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
    }
  const auto e1 = ExteriorElement::basis(v, 1), e2 = ExteriorElement::basis(v, 2);
  CHECK(wedge(e2, e1) == ExteriorElement::basis(v, 3).scaled(Scalar(-1)));
  CHECK(wedge(e1, e1).is_zero());
}
