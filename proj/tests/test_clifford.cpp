#include <doctest.h>

#include "exlsa/clifford.hpp"
#include "exlsa/errors.hpp"
#include "support.hpp"

using namespace exlsa;
using namespace testing;

namespace {

struct Fixture {
  OctonionAlgebra o = OctonionAlgebra::symbolic();
  CliffordAlgebra c{o};
};

const Fixture &fx() {
  static const Fixture f;
  return f;
}

CliffordElement gen(int i) { return CliffordElement::monomial(Mask{1} << (i - 1)); }

Vector im(int i) { return unit_vector(7, static_cast<std::size_t>(i - 1)); }

} // namespace

TEST_CASE("Clifford relations") {
  const auto &c = fx().c;
  CHECK(c.multiply(gen(1), gen(1)) == CliffordElement::scalar(-l1));
  CHECK(c.multiply(gen(1), gen(2)) == CliffordElement::monomial(3));
  CHECK(c.multiply(gen(2), gen(1)) == CliffordElement::monomial(3, Scalar(-1)));
  const auto e12 = CliffordElement::monomial(3);
  CHECK(c.spinor_action(c.multiply(e12, e12)) == c.spinor_action(e12) * c.spinor_action(e12));
  CHECK(c.super_bracket(gen(1), gen(1)) == CliffordElement::scalar(-2 * l1));
  CHECK(c.super_bracket(e12, e12).is_zero());
  // associativity on random monomials
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> m(0, 127);
  for (int t = 0; t < 30; ++t) {
    const auto a = CliffordElement::monomial(static_cast<Mask>(m(rng)));
    const auto b = CliffordElement::monomial(static_cast<Mask>(m(rng)));
    const auto d = CliffordElement::monomial(static_cast<Mask>(m(rng)));
    CHECK(c.multiply(c.multiply(a, b), d) == c.multiply(a, c.multiply(b, d)));
    CHECK(c.spinor_action(c.multiply(a, b)) == c.spinor_action(a) * c.spinor_action(b));
  }
}

TEST_CASE("quantization") {
  const auto &f = fx();
  std::mt19937 rng(4);
  for (int p = 0; p <= 7; ++p) {
    ExteriorElement x(f.o.im_space(), p, random_vector(rng, binomial(7, static_cast<std::size_t>(p))));
    const auto q = f.c.quantize(x);
    CHECK(q.is_homogeneous(p));
    CHECK(f.c.dequantize(q, p) == x);
  }
  // antisymmetrized product of distinct generators equals the ordered one
  const auto a = f.c.multiply(gen(1), gen(4)), b = f.c.multiply(gen(4), gen(1));
  CHECK((a - b).scaled(Scalar(1, 2)) == CliffordElement::monomial(mask_of({0, 3})));
}

TEST_CASE("spinor action, Omega and c_u") {
  const auto &f = fx();
  const auto &o = f.o;
  CHECK(f.c.spinor_action(CliffordElement::scalar(1)) == Matrix::identity(8));
  const Vector u = im(2) + im(5);
  const Matrix ru = f.c.spinor_action(CliffordElement::from_vector(u));
  CHECK(ru * ru == -o.norm_q(OctonionAlgebra::embed_imaginary(u)) * Matrix::identity(8));
  const Matrix rw = f.c.spinor_action(f.c.omega());
  CHECK(rw * o.unit(0) == Scalar(-7) * o.unit(0));
  for (int i = 1; i < 8; ++i)
    CHECK(rw * o.unit(i) == o.unit(i));
  CHECK(f.c.c_of(Vector(7)).is_zero());
  const auto w = f.c.w_subspace();
  for (int i = 1; i <= 7; ++i) {
    const Vector ui = OctonionAlgebra::embed_imaginary(im(i));
    const Matrix rc = f.c.spinor_action(w[static_cast<std::size_t>(i - 1)]);
    CHECK(w[static_cast<std::size_t>(i - 1)].is_homogeneous(2));
    CHECK(rc * o.unit(0) == Scalar(-6) * ui);
    for (int j = 1; j <= 7; ++j) {
      const Vector vj = OctonionAlgebra::embed_imaginary(im(j));
      CHECK(rc * vj == Scalar(2) * o.cross_product(ui, vj) + Scalar(6) * o.bilinear_B(ui, vj) * o.unit(0));
      CHECK(trace_product(rc, f.c.spinor_action(w[static_cast<std::size_t>(j - 1)])) ==
            Scalar(-96) * o.bilinear_B(ui, vj));
    }
  }
}

TEST_CASE("G2 kernel") {
  const auto &f = fx();
  const auto &o = f.o;
  CHECK(CliffordAlgebra::degree_two().size() == 21);
  const auto g = f.c.g2_kernel();
  CHECK(g.size() == 14);
  const auto w = f.c.w_subspace();
  for (const auto &x : g) {
    const Matrix r = f.c.spinor_action(x);
    CHECK(is_zero(r * o.unit(0)));
    // derivation of O
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        CHECK(r * o.multiply(o.unit(i), o.unit(j)) ==
              o.multiply(r * o.unit(i), o.unit(j)) + o.multiply(o.unit(i), r * o.unit(j)));
    for (const auto &c : w)
      CHECK(trace_product(r, f.c.spinor_action(c)).is_zero());
  }
  // C^2 = g + W
  std::vector<Vector> cols;
  for (const auto *set : {&g, &w})
    for (const auto &x : *set) {
      Vector v;
      for (Mask m : CliffordAlgebra::degree_two())
        v.push_back(x.coeff(m));
      cols.push_back(v);
    }
  CHECK(rank(Matrix::from_columns(cols)) == 21);
}
