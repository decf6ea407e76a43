#include <doctest.h>

#include "exlsa/altmap.hpp"
#include "exlsa/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace exlsa;
using namespace testing;

namespace {

SpacePtr diag(std::size_t n) {
  Vector q;
  std::vector<std::string> labels;
  const Scalar params[] = {Scalar(1), l1, l2, l1 * l2, l3};
  for (std::size_t i = 0; i < n; ++i) {
    q.push_back(params[i % 5]);
    labels.push_back("e" + std::to_string(i + 1));
  }
  return QuadraticSpace::diagonal(labels, q);
}

} // namespace

TEST_CASE("evaluate agrees with values on basis tuples") {
  std::mt19937 rng(1);
  const auto v = diag(4);
  const auto w = codomain_of(diag(2), "W");
  const auto f = random_map(rng, v, w, 3);
  std::vector<Vector> args{unit_vector(4, 2), unit_vector(4, 0), unit_vector(4, 3)};
  CHECK(f.evaluate(args) == f.at({2, 0, 3}));
  CHECK(f.at({2, 0, 3}) == -f.at({0, 2, 3}));
  CHECK(is_zero(f.at({1, 1, 2})));
  CHECK_THROWS_AS(f.evaluate({unit_vector(4, 0)}), ArityMismatch);
  // multilinearity
  const Vector x = random_int_vector(rng, 4), y = random_int_vector(rng, 4);
  args[0] = x + y;
  const Vector lhs = f.evaluate(args);
  args[0] = x;
  Vector rhs = f.evaluate(args);
  args[0] = y;
  CHECK(lhs == rhs + f.evaluate(args));
}

TEST_CASE("relative wedge matches the full permutation sum") {
  std::mt19937 rng(5);
  const auto v = diag(5);
  const auto w = codomain_of(diag(2), "W");
  const auto k = scalar_codomain();
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; p + q <= 5; ++q) {
      const auto f = random_map(rng, v, w, p);
      const auto g = random_map(rng, v, w, q);
      const auto pr = Pairing::form(w);
      const auto h = wedge_rel(f, g, pr);
      for (Mask m : multi_indices(5, static_cast<std::size_t>(p + q)))
        CHECK(h.value(m) == wedge_oracle(f, g, pr, indices_of(m)));
      const auto s = random_map(rng, v, k, p);
      const auto sw = wedge_rel(s, g, Pairing::scalar_left(w));
      for (Mask m : multi_indices(5, static_cast<std::size_t>(p + q)))
        CHECK(sw.value(m) == wedge_oracle(s, g, Pairing::scalar_left(w), indices_of(m)));
    }
}

TEST_CASE("composition matches the full permutation sum") {
  std::mt19937 rng(9);
  const auto v = diag(5);
  const auto e = diag(3);
  const auto ec = codomain_of(e, "E");
  const auto w = codomain_of(diag(2), "W");
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; p * q <= 5; ++q) {
      const auto f = random_map(rng, e, w, p);
      const auto g = random_map(rng, v, ec, q);
      const auto h = compose(f, g);
      CHECK(h.degree() == p * q);
      for (Mask m : multi_indices(5, static_cast<std::size_t>(p * q)))
        CHECK(h.value(m) == compose_oracle(f, g, indices_of(m)));
    }
  // ordered (1,...,1)-shuffles: f o id = p! f
  const auto f = random_map(rng, e, w, 2);
  CHECK(compose(f, AltMap::identity(e, ec)) == f.scaled(2));
}

TEST_CASE("wedge degree overflow and mismatches") {
  std::mt19937 rng(2);
  const auto v = diag(3);
  const auto k = scalar_codomain();
  const auto f = random_map(rng, v, k, 2);
  const auto h = wedge(f, f);
  CHECK(h.degree() == 4);
  CHECK(h.degree_exceeds_dimension());
  CHECK(h.is_zero());
  const auto w = codomain_of(diag(2), "W");
  CHECK_THROWS_AS(wedge_rel(f, random_map(rng, v, w, 1), Pairing::form(w)), ShapeMismatch);
  CHECK_THROWS_AS(f + random_map(rng, v, k, 1), ShapeMismatch);
}

TEST_CASE("ratio_to") {
  std::mt19937 rng(4);
  const auto v = diag(4);
  const auto k = scalar_codomain();
  const auto f = random_map(rng, v, k, 2);
  CHECK(f.scaled(l1 / 3).ratio_to(f) == l1 / 3);
  const auto z = AltMap(v, k, 2);
  CHECK(z.ratio_to(f) == Scalar(0));
  auto g = f;
  g.set_value(multi_indices(4, 2)[0], {f.value(multi_indices(4, 2)[0])[0] + 1});
  CHECK_FALSE(g.ratio_to(f).has_value());
}

TEST_CASE("Hodge dual") {
  const auto v = QuadraticSpace::diagonal({"e1", "e2", "e3"}, {l1, l2, l3});
  const auto k = scalar_codomain();
  AltMap vol(v, k, 3);
  vol.set_value(7, {Scalar(1)});
  AltMap e1(v, k, 1);
  e1.set_value(1, {Scalar(1)});
  const auto s = hodge_dual(e1, vol);
  AltMap expect(v, k, 2);
  expect.set_value(6, {l1.inverse()});
  CHECK(s == expect);
  CHECK(hodge_property_holds(e1, s, vol));

  std::mt19937 rng(8);
  Matrix g(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    g(i, i) = i + 1;
  g(0, 1) = g(1, 0) = l1;
  g(2, 3) = g(3, 2) = 1;
  const auto u = QuadraticSpace::make({"a", "b", "c", "d"}, g);
  Matrix wg = Matrix::identity(2);
  wg(0, 0) = al;
  const auto w = make_codomain("W", {"w1", "w2"}, wg);
  AltMap uvol(u, k, 4);
  uvol.set_value(15, {l2});
  for (int p = 0; p <= 4; ++p) {
    const auto f = random_map(rng, u, w, p);
    const auto star = hodge_dual(f, uvol);
    CHECK(star.degree() == 4 - p);
    CHECK(hodge_property_holds(f, star, uvol));
  }
  AltMap zero_vol(v, k, 3);
  CHECK_THROWS_AS(hodge_dual(e1, zero_vol), SingularPairing);
}

TEST_CASE("b_alt on diagonal and general spaces") {
  const auto v = diag(3);
  const auto k = scalar_codomain();
  AltMap f(v, k, 2);
  f.set_value(mask_of({0, 1}), {Scalar(1)});
  CHECK(b_alt(f, f) == l1.inverse());
  std::mt19937 rng(6);
  const auto a = random_map(rng, v, k, 2), b = random_map(rng, v, k, 2);
  Matrix off = v->gram();
  off(0, 2) = off(2, 0) = Scalar(1);
  const auto o = QuadraticSpace::make(v->labels(), off);
  const auto ao = AltMap::from_function(o, k, 2, [&](const std::vector<int> &i) { return a.at(i); });
  const auto bo = AltMap::from_function(o, k, 2, [&](const std::vector<int> &i) { return b.at(i); });
  CHECK(b_alt(ao, bo) == b_alt(bo, ao));
  CHECK_THROWS_AS(b_alt(a, AltMap(v, k, 1)), ShapeMismatch);
}
