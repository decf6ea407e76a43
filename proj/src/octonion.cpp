#include "exlsa/octonion.hpp"

#include "exlsa/errors.hpp"

namespace exlsa {

namespace {

// Cayley-Dickson doubling, (a,b)(c,d) = (ac + g dbar b, da + b cbar), with
// the last entry of gammas used at the top level.
Vector cd_conj(const Vector &x) {
  Vector r = x;
  for (std::size_t i = 1; i < r.size(); ++i)
    r[i] = -r[i];
  return r;
}

Vector cd_mul(const Vector &x, const Vector &y, const std::vector<Scalar> &gammas) {
  const std::size_t n = x.size();
  if (n == 1)
    return {x[0] * y[0]};
  const std::size_t h = n / 2;
  const std::vector<Scalar> inner(gammas.begin(), gammas.end() - 1);
  const Vector a(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(h)), b(x.begin() + static_cast<std::ptrdiff_t>(h), x.end());
  const Vector c(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(h)), d(y.begin() + static_cast<std::ptrdiff_t>(h), y.end());
  Vector lo = cd_mul(a, c, inner);
  axpy(lo, gammas.back(), cd_mul(cd_conj(d), b, inner));
  Vector hi = cd_mul(d, a, inner) + cd_mul(b, cd_conj(c), inner);
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

// Single nonzero coordinate of v.
std::pair<int, Scalar> as_monomial(const Vector &v) {
  std::pair<int, Scalar> r{-1, Scalar()};
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      if (r.first >= 0)
        throw InvariantViolation("Cayley-Dickson product of basis elements is not a monomial");
      r = {static_cast<int>(i), v[i]};
    }
  return r;
}

std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i)
    out.push_back("e" + std::to_string(i));
  return out;
}

} // namespace

OctonionAlgebra::OctonionAlgebra(Scalar l1, Scalar l2, Scalar l3) : params_{l1, l2, l3} {
  for (int i = 0; i < 3; ++i)
    if (params_[static_cast<std::size_t>(i)].is_zero())
      throw DegenerateParameter("l" + std::to_string(i + 1) + " = 0 gives an isotropic basis vector");
  const std::vector<Scalar> gammas{-l1, -l2, -l3};
  auto cd = [&](const Vector &x, const Vector &y) { return cd_mul(x, y, gammas); };
  auto cd_unit = [](int i) { return unit_vector(8, static_cast<std::size_t>(i)); };

  // labeled basis in Cayley-Dickson coordinates; generators are CD 1, 2, 4
  const Vector g1 = cd_unit(1), g2 = cd_unit(2), g4 = cd_unit(4);
  const Vector g3 = cd(g1, g2);
  const std::array<Vector, 8> basis{cd_unit(0), g1, g2, g3, g4, cd(g1, g4), cd(g2, g4), cd(g3, g4)};
  std::array<std::pair<int, Scalar>, 8> where; // labeled k = coeff * CD unit
  for (std::size_t k = 0; k < 8; ++k)
    where[k] = as_monomial(basis[k]);
  std::array<int, 8> label_of{};
  for (std::size_t k = 0; k < 8; ++k)
    label_of[static_cast<std::size_t>(where[k].first)] = static_cast<int>(k);

  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const auto [cd_k, c] = as_monomial(cd(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]));
      const int k = label_of[static_cast<std::size_t>(cd_k)];
      table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {k, c / where[static_cast<std::size_t>(k)].second};
    }

  norms_ = {Scalar(1), l1, l2, l1 * l2, l3, l1 * l3, l2 * l3, l1 * l2 * l3};
  for (int i = 0; i < 8; ++i) {
    Matrix m(8, 8);
    for (int j = 0; j < 8; ++j) {
      const auto &[k, c] = table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = c;
    }
    left_.push_back(std::move(m));
  }
  space_ = QuadraticSpace::diagonal(labels(8), norms_);
  im_space_ = QuadraticSpace::diagonal(labels(7), Vector(norms_.begin() + 1, norms_.end()));
}

OctonionAlgebra OctonionAlgebra::symbolic() {
  return OctonionAlgebra(Scalar::variable(Var::l1), Scalar::variable(Var::l2), Scalar::variable(Var::l3));
}

Vector OctonionAlgebra::multiply(const Vector &x, const Vector &y) const {
  if (x.size() != 8 || y.size() != 8)
    throw ShapeMismatch("octonions have 8 coordinates");
  Vector r(8);
  for (std::size_t i = 0; i < 8; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < 8; ++j) {
      if (y[j].is_zero())
        continue;
      const auto &[k, c] = table_[i][j];
      r[static_cast<std::size_t>(k)] += x[i] * y[j] * c;
    }
  }
  return r;
}

Vector OctonionAlgebra::conj(const Vector &x) const { return cd_conj(x); }

Scalar OctonionAlgebra::norm_q(const Vector &x) const { return multiply(x, conj(x))[0]; }

Scalar OctonionAlgebra::bilinear_B(const Vector &x, const Vector &y) const {
  Scalar s;
  for (std::size_t i = 0; i < 8; ++i)
    if (!x[i].is_zero() && !y[i].is_zero())
      s += x[i] * y[i] * norms_[i];
  return s;
}

Vector OctonionAlgebra::commutator(const Vector &u, const Vector &v) const {
  return multiply(u, v) - multiply(v, u);
}

Vector OctonionAlgebra::associator(const Vector &u, const Vector &v, const Vector &w) const {
  return multiply(multiply(u, v), w) - multiply(u, multiply(v, w));
}

Vector OctonionAlgebra::jacobi_tensor(const Vector &u, const Vector &v, const Vector &w) const {
  return commutator(u, commutator(v, w)) + commutator(v, commutator(w, u)) + commutator(w, commutator(u, v));
}

Vector OctonionAlgebra::cross_product(const Vector &u, const Vector &v) const {
  return Scalar(1, 2) * (multiply(conj(v), u) - multiply(conj(u), v));
}

Scalar OctonionAlgebra::associative_form(const Vector &u, const Vector &v, const Vector &w) const {
  for (const Vector *x : {&u, &v, &w})
    if (!(*x)[0].is_zero())
      throw NotImaginary("associative form takes imaginary arguments");
  return bilinear_B(u, cross_product(v, w));
}

bool OctonionAlgebra::malcev_check(const Vector &u, const Vector &v, const Vector &w) const {
  const Vector lhs = cross_product(u, cross_product(v, w)) + cross_product(v, cross_product(u, w));
  Vector rhs = bilinear_B(v, w) * u;
  axpy(rhs, bilinear_B(u, w), v);
  axpy(rhs, Scalar(-2) * bilinear_B(u, v), w);
  return lhs == rhs;
}

Vector OctonionAlgebra::embed_imaginary(const Vector &v7) {
  if (v7.size() != 7)
    throw ShapeMismatch("imaginary octonions have 7 coordinates");
  Vector r{Scalar()};
  r.insert(r.end(), v7.begin(), v7.end());
  return r;
}

Vector OctonionAlgebra::imaginary_part(const Vector &v8) {
  if (v8.size() != 8)
    throw ShapeMismatch("octonions have 8 coordinates");
  if (!v8[0].is_zero())
    throw NotImaginary("real part " + v8[0].to_string());
  return Vector(v8.begin() + 1, v8.end());
}

AltMap OctonionAlgebra::phi() const {
  return AltMap::from_function(im_space_, scalar_codomain(), 3, [&](const std::vector<int> &i) {
    return Vector{associative_form(unit(i[0] + 1), unit(i[1] + 1), unit(i[2] + 1))};
  });
}

AltMap OctonionAlgebra::cross() const {
  return AltMap::from_function(im_space_, codomain_of(im_space_, "Im"), 2, [&](const std::vector<int> &i) {
    return imaginary_part(cross_product(unit(i[0] + 1), unit(i[1] + 1)));
  });
}

std::vector<Vector> generate_labeled_basis(const OctonionAlgebra &o, const Vector &g1, const Vector &g2,
                                           const Vector &g3, bool with_unit) {
  const Vector *gens[] = {&g1, &g2, &g3};
  for (int a = 0; a < 3; ++a) {
    if (gens[a]->size() != 8)
      throw ShapeMismatch("generators must be octonions");
    if (!(*gens[a])[0].is_zero())
      throw BadGenerators("generator " + std::to_string(a + 1) + " is not imaginary");
    if (o.norm_q(*gens[a]).is_zero())
      throw BadGenerators("generator " + std::to_string(a + 1) + " is isotropic");
    for (int b = 0; b < a; ++b)
      if (!o.bilinear_B(*gens[a], *gens[b]).is_zero())
        throw BadGenerators("generators " + std::to_string(b + 1) + " and " + std::to_string(a + 1) +
                            " are not orthogonal");
  }
  const Vector g12 = o.multiply(g1, g2);
  if (!o.bilinear_B(g3, g12).is_zero())
    throw BadGenerators("third generator meets the subalgebra of the first two");
  std::vector<Vector> out;
  if (with_unit)
    out.push_back(o.unit(0));
  for (const Vector &v : {g1, g2, g12, g3, o.multiply(g1, g3), o.multiply(g2, g3), o.multiply(g12, g3)})
    out.push_back(v);
  return out;
}

const std::vector<Mask> &fano_lines() {
  static const std::vector<Mask> lines = [] {
    const std::vector<std::vector<int>> l{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    std::vector<Mask> m;
    for (const auto &line : l)
      m.push_back(mask_of({line[0] - 1, line[1] - 1, line[2] - 1}));
    return m;
  }();
  return lines;
}

const std::array<std::array<int, 3>, 8> &cube_points() {
  // labels of the cube figure: 3 at the origin, 1 above it on the z axis, ...
  static const std::array<std::array<int, 3>, 8> pts{{
      {0, 0, 1}, // 1
      {1, 0, 1}, // 2
      {0, 0, 0}, // 3
      {1, 0, 0}, // 4
      {0, 1, 1}, // 5
      {1, 1, 1}, // 6
      {0, 1, 0}, // 7
      {1, 1, 0}, // 8
  }};
  return pts;
}

std::vector<Mask> affine_planes() {
  std::vector<Mask> out;
  const auto &pts = cube_points();
  for (int c = 1; c < 8; ++c)
    for (int d = 0; d < 2; ++d) {
      Mask m = 0;
      for (int k = 0; k < 8; ++k) {
        const auto &p = pts[static_cast<std::size_t>(k)];
        const int dot = ((c & 4 ? p[0] : 0) + (c & 2 ? p[1] : 0) + (c & 1 ? p[2] : 0)) % 2;
        if (dot == d)
          m |= Mask{1} << k;
      }
      out.push_back(m);
    }
  return out;
}

} // namespace exlsa
