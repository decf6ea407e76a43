#include <doctest.h>

#include <random>

#include "exlsa/errors.hpp"
#include "exlsa/matrix.hpp"
#include "exlsa/scalar.hpp"

using namespace exlsa;

namespace {

const Scalar l1 = Scalar::variable(Var::l1);
const Scalar l2 = Scalar::variable(Var::l2);
const Scalar l3 = Scalar::variable(Var::l3);
const Scalar al = Scalar::variable(Var::a);

Scalar random_scalar(std::mt19937 &rng) {
  std::uniform_int_distribution<int> c(-4, 4), e(0, 2);
  const Scalar vars[] = {l1, l2, l3, al};
  auto poly = [&] {
    Scalar p;
    for (int t = 0; t < 3; ++t) {
      Scalar m(c(rng));
      for (const auto &v : vars)
        m *= v.pow(e(rng));
      p += m;
    }
    return p;
  };
  Scalar d = poly();
  while (d.is_zero())
    d = poly();
  return poly() / d;
}

} // namespace

TEST_CASE("rational arithmetic") {
  CHECK(arith(Scalar(1, 2), Scalar(1, 3), ArithOp::add) == Scalar(5, 6));
  CHECK(arith(l1, l1, ArithOp::div) == Scalar(1));
  CHECK(arith((al + 1) / al, al, ArithOp::mul) == al + 1);
  CHECK(Scalar(6, -4) == Scalar(-3, 2));
  CHECK_THROWS_AS(arith(Scalar(1), Scalar(0), ArithOp::div), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1, 0), DivisionByZero);
}

TEST_CASE("zero test") {
  CHECK(is_zero(l1 - l1));
  const Scalar beta = -1 - al;
  CHECK(is_zero(al + beta + 1));
  CHECK_FALSE(is_zero(Scalar(147, 8)));
}

TEST_CASE("substitution") {
  CHECK(is_zero(substitute(3 * (2 * al + 1), {{Var::a, Scalar(-1, 2)}})));
  const Bindings ones{{Var::l1, 1}, {Var::l2, 1}, {Var::l3, 1}};
  CHECK(substitute(Scalar(1) / (l1 * l2 * l3), ones) == Scalar(1));
  CHECK(substitute(-42 * (l1 * l2 * l3).pow(2), ones) == Scalar(-42));
  CHECK(substitute(l1 / l2, {{Var::l1, 3}}) == Scalar(3) / l2);
  CHECK_THROWS_AS(substitute(Scalar(1) / (al + 1), {{Var::a, -1}}), DenominatorVanishes);
}

TEST_CASE("canonical form") {
  const Scalar x = (l1 * l1 - l2 * l2) / (l1 + l2);
  CHECK(x == l1 - l2);
  CHECK(x.denominator().is_one());
  const Scalar y = Scalar(1) / (-l1 - 1);
  CHECK(y.denominator().leading().coeff > 0);
  CHECK(y == -Scalar(1) / (l1 + 1));
}

TEST_CASE("rendering and parsing round trip") {
  CHECK(Scalar(-3, 2).to_string() == "-3/2");
  CHECK((Scalar(1) / (l1 * l2)).to_string() == "1/(l1*l2)");
  CHECK((Scalar(1) / al).to_string() == "1/a");
  CHECK(parse_scalar("147/8") == Scalar(147, 8));
  CHECK(parse_scalar("-42*l1^2*l2^2*l3^2") == -42 * (l1 * l2 * l3).pow(2));
  CHECK(parse_scalar("\xE2\x88\x92" "1 - a") == -1 - al);
  CHECK(parse_scalar("(a+1)/(a-1)") == (al + 1) / (al - 1));
  CHECK(parse_scalar("l1^-2") == Scalar(1) / (l1 * l1));
  CHECK_THROWS_AS(parse_scalar("x+1"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/(a-a)"), DivisionByZero);
  CHECK_THROWS_AS(parse_scalar("(1"), ParseError);
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const Scalar s = random_scalar(rng);
    CHECK(parse_scalar(s.to_string()) == s);
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(11);
  for (int i = 0; i < 25; ++i) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar());
    if (!a.is_zero())
      CHECK(a * a.inverse() == Scalar(1));
    // canonicalization is idempotent
    const Scalar again(a.numerator(), a.denominator());
    CHECK(again == a);
    CHECK(again.numerator() == a.numerator());
  }
}

TEST_CASE("linear solver") {
  const Matrix id = Matrix::identity(3);
  const Vector rhs{l1, Scalar(2), al};
  CHECK(solve_linear(id, rhs) == rhs);
  CHECK(solve_linear(Matrix::diagonal({l1, l2}), Vector{l1, l2}) == Vector{Scalar(1), Scalar(1)});

  Matrix a(3, 3);
  a(0, 0) = l1;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = al;
  a(1, 2) = l2;
  a(2, 1) = l2;
  a(2, 2) = 2;
  const Vector b{Scalar(1), l3, al * al};
  const Vector x = solve_linear(a, b);
  CHECK(a * x == b);
  CHECK(determinant(a) == l1 * (2 * al - l2 * l2) - 2);
  CHECK(a * inverse(a) == Matrix::identity(3));

  Matrix s(2, 2);
  s(0, 0) = l1;
  s(0, 1) = l2;
  s(1, 0) = 2 * l1;
  s(1, 1) = 2 * l2;
  CHECK_THROWS_AS(solve_linear(s, Vector{1, 1}), SingularMatrix);
  CHECK(determinant(s).is_zero());
  CHECK(rank(s) == 1);
  const auto ns = nullspace(s);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(s * ns[0]));
}

TEST_CASE("sparse solver matches dense") {
  Matrix a(4, 4);
  a(0, 0) = l1;
  a(0, 3) = 1;
  a(1, 1) = 2;
  a(1, 2) = al;
  a(2, 1) = 1;
  a(2, 2) = -1;
  a(3, 0) = 3;
  a(3, 3) = l2;
  const Vector b{Scalar(1), Scalar(2), l3, Scalar(0)};
  std::vector<SparseRow> rows(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!a(i, j).is_zero())
        rows[i].emplace_back(j, a(i, j));
  CHECK(solve_sparse(rows, b, 4) == solve_linear(a, b));
  rows[3] = {{0, Scalar(2) * l1}, {3, Scalar(2)}};
  CHECK_THROWS_AS(solve_sparse(rows, b, 4), SingularMatrix);
}
