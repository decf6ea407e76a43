#include <doctest.h>

#include "exlsa/errors.hpp"
#include "exlsa/octonion.hpp"
#include "support.hpp"

using namespace exlsa;
using namespace testing;

namespace {

const OctonionAlgebra &oct() {
  static const OctonionAlgebra o = OctonionAlgebra::symbolic();
  return o;
}

Vector e(int i) { return oct().unit(i); }

} // namespace

TEST_CASE("octonion table basics") {
  const auto &o = oct();
  CHECK(o.multiply(e(1), e(2)) == e(3));
  CHECK(o.multiply(e(1), e(4)) == e(5));
  CHECK(o.multiply(e(2), e(4)) == e(6));
  CHECK(o.multiply(e(3), e(4)) == e(7));
  CHECK(o.multiply(e(1), e(1)) == -l1 * e(0));
  CHECK(o.norm_q(e(7)) == l1 * l2 * l3);
  CHECK(o.conj(e(0)) == e(0));
  CHECK(o.bilinear_B(e(1), e(2)).is_zero());
  CHECK(o.bilinear_B(e(1), e(1)) == l1);
  CHECK(o.norm_q(Scalar(2) * e(1)) - Scalar(2) * o.norm_q(e(1)) == l1 * 2);
  CHECK_THROWS_AS(OctonionAlgebra(l1, Scalar(0), l3), DegenerateParameter);
}

TEST_CASE("unit, composition and conjugation") {
  const auto &o = oct();
  for (int i = 0; i < 8; ++i) {
    CHECK(o.multiply(e(0), e(i)) == e(i));
    CHECK(o.multiply(e(i), e(0)) == e(i));
    CHECK(o.multiply(e(i), o.conj(e(i))) == o.norm_q(e(i)) * e(0));
    for (int j = 0; j < 8; ++j)
      CHECK(o.norm_q(o.multiply(e(i), e(j))) == o.norms()[static_cast<std::size_t>(i)] * o.norms()[static_cast<std::size_t>(j)]);
  }
  // polarized composition on random elements
  std::mt19937 rng(12);
  for (int t = 0; t < 3; ++t) {
    const Vector x = random_int_vector(rng, 8), y = random_int_vector(rng, 8);
    CHECK(o.norm_q(o.multiply(x, y)) == o.norm_q(x) * o.norm_q(y));
  }
}

TEST_CASE("Fano incidences of the table") {
  const auto &o = oct();
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j) {
      if (i == j)
        continue;
      const int k = o.basis_product(i, j).first;
      bool on_line = false;
      for (Mask line : fano_lines())
        if (line == mask_of({i - 1, j - 1, k - 1}))
          on_line = true;
      CHECK(on_line);
    }
}

TEST_CASE("commutator, associator, Jacobi tensor") {
  const auto &o = oct();
  CHECK(is_zero(o.commutator(e(1), e(1))));
  CHECK(is_zero(o.associator(e(1), e(2), e(3))));
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j)
      for (int k = 1; k < 8; ++k) {
        CHECK(is_zero(o.jacobi_tensor(e(i), e(j), e(k)) + Scalar(6) * o.associator(e(i), e(j), e(k))));
        CHECK(o.associator(e(i), e(j), e(k)) == -o.associator(e(j), e(i), e(k)));
      }
}

TEST_CASE("cross product and associative form") {
  const auto &o = oct();
  CHECK(o.cross_product(e(1), e(2)) == e(3));
  CHECK(is_zero(o.cross_product(e(5), e(5))));
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j) {
      const Vector c = o.cross_product(e(i), e(j));
      const Scalar b = o.bilinear_B(e(i), e(j));
      CHECK(o.norm_q(c) == o.norm_q(e(i)) * o.norm_q(e(j)) - b * b);
      CHECK(c == o.multiply(e(i), e(j)) + b * e(0));
      // B(u, vw) + B(v, uw) = 0 on imaginaries
      for (int k = 1; k < 8; ++k)
        CHECK((o.bilinear_B(e(i), o.multiply(e(j), e(k))) + o.bilinear_B(e(j), o.multiply(e(i), e(k)))).is_zero());
    }
  CHECK(o.associative_form(e(1), e(2), e(3)) == l1 * l2);
  CHECK(o.associative_form(e(1), e(1), e(2)).is_zero());
  CHECK_THROWS_AS(o.associative_form(e(0), e(1), e(2)), NotImaginary);
}

TEST_CASE("Malcev-type identity") {
  const auto &o = oct();
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j)
      for (int k = 1; k < 8; ++k)
        CHECK(o.malcev_check(e(i), e(j), e(k)));
  std::mt19937 rng(5);
  const OctonionAlgebra num(Scalar(2), Scalar(-3), Scalar(5));
  for (int t = 0; t < 5; ++t) {
    Vector u = random_int_vector(rng, 8), v = random_int_vector(rng, 8), w = random_int_vector(rng, 8);
    u[0] = v[0] = w[0] = 0;
    CHECK(num.malcev_check(u, v, w));
    CHECK(num.malcev_check(u, u, u));
  }
}

TEST_CASE("labeled bases") {
  const auto &o = oct();
  const auto b = generate_labeled_basis(o, e(1), e(2), e(4));
  REQUIRE(b.size() == 7);
  for (int i = 0; i < 7; ++i)
    CHECK(b[static_cast<std::size_t>(i)] == e(i + 1));
  // the same generators under the labels 1, e2, e3, e5 of the whole algebra
  const auto b8 = generate_labeled_basis(o, e(1), e(2), e(4), true);
  REQUIRE(b8.size() == 8);
  for (int i = 0; i < 8; ++i)
    CHECK(b8[static_cast<std::size_t>(i)] == e(i));
  CHECK_THROWS_AS(generate_labeled_basis(o, e(1), e(2), e(3)), BadGenerators);
  CHECK_THROWS_AS(generate_labeled_basis(o, e(0), e(2), e(4)), BadGenerators);
  CHECK_THROWS_AS(generate_labeled_basis(o, e(1), e(1) + e(2), e(4)), BadGenerators);
}

TEST_CASE("phi decomposition and incidence structures") {
  const auto &o = oct();
  const AltMap phi = o.phi();
  ExteriorElement f(o.im_space(), 3, true);
  for (Mask m : multi_indices(7, 3))
    f.set(m, phi.value(m)[0]);
  const auto x = eta_inverse(f);
  const Scalar p3 = l1 * l2 * l3;
  const std::vector<std::pair<std::vector<int>, Scalar>> expected{
      {{1, 2, 3}, (l1 * l2).inverse()}, {{1, 4, 5}, (l1 * l3).inverse()}, {{1, 6, 7}, -p3.inverse()},
      {{2, 4, 6}, (l2 * l3).inverse()}, {{2, 5, 7}, p3.inverse()},        {{3, 4, 7}, p3.inverse()},
      {{3, 5, 6}, -p3.inverse()}};
  ExteriorElement want(o.im_space(), 3);
  for (const auto &[idx, c] : expected)
    want.set(mask_of({idx[0] - 1, idx[1] - 1, idx[2] - 1}), c);
  CHECK(x == want);
  CHECK(fano_lines().size() == 7);
  const auto planes = affine_planes();
  CHECK(planes.size() == 14);
  for (Mask p : planes)
    CHECK(degree_of(p) == 4);
  CHECK(std::find(planes.begin(), planes.end(), mask_of({0, 1, 2, 3})) != planes.end());
}
