#include <algorithm>

#include <doctest.h>

#include "exlsa/errors.hpp"
#include "exlsa/quadlie.hpp"
#include "support.hpp"

using namespace exlsa;
using namespace testing;

namespace {

struct Fixture {
  OctonionAlgebra o = OctonionAlgebra::symbolic();
  CliffordAlgebra cl{o};
  CliffordRep g2 = build_g2_rep(cl);
  CliffordRep spin = build_spinor_rep(cl);
  AltMap mu_im = moment_map(g2.rep);
  AltMap mu_oct = moment_map(spin.rep);
  CovariantSet cov_im = covariants(g2.rep, mu_im);
  CovariantSet cov_oct = covariants(spin.rep, mu_oct);
};

const Fixture &fx() {
  static const Fixture f;
  return f;
}

Vector im(int i) { return unit_vector(7, static_cast<std::size_t>(i)); }
Vector up(const Vector &v7) { return OctonionAlgebra::embed_imaginary(v7); }

// "1247" -> mask over 0-based indices
Mask lbl(const std::string &digits) {
  Mask m = 0;
  for (char ch : digits)
    m |= Mask{1} << (ch - '1');
  return m;
}

CliffordElement from_g2(const Fixture &f, const Vector &x) {
  CliffordElement r;
  for (std::size_t a = 0; a < x.size(); ++a)
    r += f.g2.basis[a].scaled(x[a]);
  return r;
}

const Scalar p3 = l1 * l2 * l3;

} // namespace

TEST_CASE("so(V) and mu_can") {
  const auto sp = QuadraticSpace::make({"e1", "e2", "e3", "e4"}, Matrix::diagonal({l1, l2, l3, al}));
  const auto so = so_fundamental_rep(sp);
  CHECK(so.dim() == 6);
  CHECK_FALSE(so.find_violation().has_value());
  const AltMap can = mu_can(so);
  CHECK(moment_map(so) == can);
  CHECK(moment_map_equivariant(so, can));
  // mu_can(e1, e2)(e1) = l1 e2
  CHECK(mu_can_value(*sp, unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 0)) == l1 * unit_vector(4, 1));
  CHECK(so.act(can.at({0, 1}), unit_vector(4, 0)) == l1 * unit_vector(4, 1));
  // mu_can is special with vanishing psi and Q
  CHECK(check_special(so, can).holds);
  const auto c = covariants(so, can);
  CHECK(c.psi.is_zero());
  CHECK(c.quad.is_zero());
}

TEST_CASE("G2 and spinor representations are well formed") {
  const auto &f = fx();
  CHECK(f.g2.rep.dim() == 14);
  CHECK(f.spin.rep.dim() == 21);
  CHECK_FALSE(f.g2.rep.find_violation().has_value());
  CHECK_FALSE(f.spin.rep.find_violation().has_value());
  CHECK_FALSE(determinant(f.g2.rep.form()).is_zero());
  CHECK(moment_map_equivariant(f.g2.rep, f.mu_im));
  CHECK(moment_map_equivariant(f.spin.rep, f.mu_oct));
  CHECK(check_special(f.g2.rep, f.mu_im).holds);
  CHECK(check_special(f.spin.rep, f.mu_oct).holds);
  CHECK(f.cov_im.special);
  CHECK(f.cov_oct.special);
}

TEST_CASE("moment map on Im in closed form") {
  const auto &f = fx();
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        const Vector lhs = f.g2.rep.act(f.mu_im.at({a, b}), im(c));
        const Vector inner = f.o.commutator(up(im(a)), up(im(b)));
        const Vector outer = OctonionAlgebra::imaginary_part(f.o.commutator(up(im(c)), inner));
        const Vector assoc = OctonionAlgebra::imaginary_part(f.o.associator(up(im(a)), up(im(b)), up(im(c))));
        CHECK(lhs == Scalar(-1, 4) * (outer + Scalar(3) * assoc));
        const Vector can = mu_can_value(*f.o.im_space(), im(a), im(b), im(c));
        CHECK(lhs == Scalar(3, 2) * can + Scalar(1, 8) * outer);
      }
}

TEST_CASE("moment map on O against mu_Im and c_u") {
  const auto &f = fx();
  for (int a = 0; a < 7; ++a) {
    const Vector cu = CliffordRep::c2_coordinates(f.cl.c_of(im(a)));
    CHECK(f.mu_oct.at({a + 1, 0}) == Scalar(1, 6) * cu);
    for (int b = a + 1; b < 7; ++b) {
      const Vector cross = OctonionAlgebra::imaginary_part(f.o.cross_product(up(im(a)), up(im(b))));
      const Vector expect = Scalar(8, 9) * CliffordRep::c2_coordinates(from_g2(f, f.mu_im.at({a, b}))) +
                            Scalar(1, 18) * CliffordRep::c2_coordinates(f.cl.c_of(cross));
      CHECK(f.mu_oct.at({a + 1, b + 1}) == expect);
    }
  }
}

TEST_CASE("covariants on Im") {
  const auto &f = fx();
  const auto &c = f.cov_im;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int x = 0; x < 7; ++x)
        CHECK(c.psi.at({a, b, x}) ==
              Scalar(-3, 4) * OctonionAlgebra::imaginary_part(f.o.associator(up(im(a)), up(im(b)), up(im(x)))));
  for (Mask m : multi_indices(7, 4)) {
    const auto i = indices_of(m);
    const Vector as = f.o.associator(up(im(i[1])), up(im(i[2])), up(im(i[3])));
    CHECK(c.quad.value(m)[0] == Scalar(-3) * f.o.bilinear_B(up(im(i[0])), as));
  }
  CHECK(psi_shortcut_holds(f.g2.rep, c));
  CHECK(quad_shortcut_holds(f.g2.rep, c));
}

TEST_CASE("covariants on O") {
  const auto &f = fx();
  const auto &c = f.cov_oct;
  const AltMap phi = f.o.phi();
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      CHECK(c.psi.at({a + 1, b + 1, 0}) == Scalar(-1) * f.o.cross_product(up(im(a)), up(im(b))));
      for (int x = 0; x < 7; ++x) {
        Vector expect = Scalar(-1, 2) * f.o.associator(up(im(a)), up(im(b)), up(im(x)));
        expect[0] += phi.at({a, b, x})[0];
        CHECK(c.psi.at({a + 1, b + 1, x + 1}) == expect);
      }
    }
  for (Mask m : multi_indices(7, 4)) {
    const auto i = indices_of(m);
    CHECK(c.quad.at({i[0] + 1, i[1] + 1, i[2] + 1, i[3] + 1}) == Scalar(2, 3) * f.cov_im.quad.value(m));
  }
  for (Mask m : multi_indices(7, 3)) {
    const auto i = indices_of(m);
    CHECK(c.quad.at({i[0] + 1, i[1] + 1, i[2] + 1, 0})[0] == Scalar(-4) * phi.value(m)[0]);
  }
  CHECK(psi_shortcut_holds(f.spin.rep, c));
  CHECK(quad_shortcut_holds(f.spin.rep, c));
}

TEST_CASE("decomposition of Q on Im") {
  const auto q = decompose_quad(fx().cov_im);
  const std::vector<std::pair<std::string, Scalar>> expect{
      {"1247", 6 / p3},           {"1256", -6 / p3},          {"1346", -6 / p3}, {"1357", -6 / (l1 * p3)},
      {"2345", 6 / p3},           {"2367", -6 / (l2 * p3)},   {"4567", -6 / (l3 * p3)}};
  CHECK(q.terms().size() == expect.size());
  for (const auto &[label, c] : expect)
    CHECK(q.coeff(lbl(label)) == c);
  // the supports are the complements of the Fano lines
  for (const auto &[m, c] : q.terms()) {
    const Mask comp = Mask{0x7f} & ~m;
    CHECK(std::find(fano_lines().begin(), fano_lines().end(), comp) != fano_lines().end());
  }
}

TEST_CASE("decomposition of Q on O") {
  const auto q = decompose_quad(fx().cov_oct);
  const std::vector<std::pair<std::string, Scalar>> expect{
      {"1234", 4 / (l1 * l2)}, {"1278", -4 / p3},         {"1368", 4 / p3},          {"1467", -4 / p3},
      {"1256", 4 / (l1 * l3)}, {"1357", 4 / (l2 * l3)},   {"1458", 4 / p3},          {"2358", 4 / p3},
      {"2367", -4 / p3},       {"2457", -4 / p3},         {"2468", -4 / (l1 * p3)},  {"3456", 4 / p3},
      {"3478", -4 / (l2 * p3)}, {"5678", -4 / (l3 * p3)}};
  CHECK(q.terms().size() == expect.size());
  for (const auto &[label, c] : expect)
    CHECK(q.coeff(lbl(label)) == c);
  const auto planes = affine_planes();
  for (const auto &[m, c] : q.terms())
    CHECK(std::find(planes.begin(), planes.end(), m) != planes.end());
}

TEST_CASE("Mathews identities") {
  const auto &f = fx();
  const auto im_res = mathews_check(f.g2.rep, f.cov_im);
  REQUIRE(im_res.size() == 4);
  CHECK(im_res[0].status == Status::holds);
  CHECK(im_res[1].status == Status::holds);
  CHECK_FALSE(im_res[0].both_zero);
  CHECK(im_res[2].status == Status::vacuous);
  CHECK(im_res[3].status == Status::vacuous);
  const auto oct_res = mathews_check(f.spin.rep, f.cov_oct);
  CHECK(oct_res[0].status == Status::holds);
  CHECK(oct_res[1].status == Status::holds);
  CHECK_FALSE(oct_res[1].both_zero);
  CHECK(oct_res[2].status == Status::vacuous);
  CHECK(to_string(Status::vacuous) == "vacuous");
}

TEST_CASE("cyclic identities") {
  const auto &f = fx();
  std::mt19937 rng(11);
  for (int t = 0; t < 4; ++t) {
    const Vector u = random_int_vector(rng, 7), v = random_int_vector(rng, 7), w = random_int_vector(rng, 7);
    CHECK(g2_cyclic_check(f.o, f.mu_im, u, v, w));
    CHECK(spinor_cyclic_check(f.o, f.mu_oct, up(u), up(v), up(w)));
  }
}

TEST_CASE("perturbed moment map is not special") {
  const auto &f = fx();
  AltMap bad = f.mu_im;
  Vector v = bad.at({0, 1});
  v[0] += Scalar(1);
  bad.set_value(mask_of({0, 1}), v);
  const auto r = check_special(f.g2.rep, bad);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK((*r.witness)[0] == 0);
}
