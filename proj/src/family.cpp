#include "exlsa/family.hpp"

#include "exlsa/errors.hpp"

namespace exlsa {

const Matrix &omega_matrix() {
  static const Matrix m = [] {
    Matrix o(2, 2);
    o(0, 1) = 1;
    o(1, 0) = -1;
    return o;
  }();
  return m;
}

Scalar omega(const Vector &x, const Vector &y) { return bilinear(omega_matrix(), x, y); }

const std::vector<Matrix> &sl2_basis() {
  static const std::vector<Matrix> b = [] {
    Matrix h(2, 2), e(2, 2), f(2, 2);
    h(0, 0) = 1;
    h(1, 1) = -1;
    e(0, 1) = 1;
    f(1, 0) = 1;
    return std::vector<Matrix>{h, e, f};
  }();
  return b;
}

Vector sl2_coordinates(const Matrix &m) {
  if (!(m(0, 0) + m(1, 1)).is_zero())
    throw ShapeMismatch("matrix is not traceless");
  return {m(0, 0), m(0, 1), m(1, 0)};
}

std::vector<std::vector<Vector>> sl2_brackets() {
  const auto &b = sl2_basis();
  std::vector<std::vector<Vector>> t(3, std::vector<Vector>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      t[i][j] = sl2_coordinates(commutator(b[i], b[j]));
  return t;
}

Matrix sl2_form() {
  const auto &b = sl2_basis();
  Matrix k(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      k(i, j) = Scalar(1, 2) * trace_product(b[i], b[j]);
  return k;
}

Vector symmetric_moment(const Vector &v1, const Vector &v2) {
  Matrix m(2, 2);
  for (std::size_t k = 0; k < 2; ++k) {
    const Vector v3 = unit_vector(2, k);
    Vector col = -omega(v1, v3) * v2;
    axpy(col, -omega(v2, v3), v1);
    m(0, k) = col[0];
    m(1, k) = col[1];
  }
  return sl2_coordinates(m);
}

namespace {

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      r(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  return r;
}

SpacePtr tensor_space() {
  static const SpacePtr s = [] {
    const Matrix &o = omega_matrix();
    Matrix g(4, 4);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        g(a, b) = -(o(a / 2, b / 2) * o(a % 2, b % 2));
    return QuadraticSpace::make({"v1w1", "v1w2", "v2w1", "v2w2"}, g);
  }();
  return s;
}

Vector pair_vector(std::size_t i) { return unit_vector(2, i); }

// Tensor f_i (x) g_j of two vectors of k^2.
Vector tensor(const Vector &v, const Vector &w) {
  return {v[0] * w[0], v[0] * w[1], v[1] * w[0], v[1] * w[1]};
}

} // namespace

FamilyRep build_family_rep(const Scalar &alpha, const Scalar &beta) {
  if (alpha.is_zero() || beta.is_zero())
    throw ZeroParameter("alpha and beta must be nonzero");
  const auto &b = sl2_basis();
  const Matrix id = Matrix::identity(2);
  std::vector<Matrix> actions;
  for (const auto &x : b)
    actions.push_back(kron(x, id));
  for (const auto &x : b)
    actions.push_back(kron(id, x));
  const Matrix k = sl2_form();
  Matrix form(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      form(i, j) = k(i, j) / alpha;
      form(i + 3, j + 3) = k(i, j) / beta;
    }
  const auto s = sl2_brackets();
  std::vector<std::vector<Vector>> table(6, std::vector<Vector>(6, Vector(6)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t c = 0; c < 3; ++c) {
        table[i][j][c] = s[i][j][c];
        table[i + 3][j + 3][c + 3] = s[i][j][c];
      }
  return {alpha, beta,
          QuadLieRep("sp(V)xsp(W)", {"hV", "eV", "fV", "hW", "eW", "fW"}, std::move(table), std::move(form),
                     tensor_space(), std::move(actions))};
}

AltMap mu_family(const FamilyRep &f) {
  return AltMap::from_function(f.rep.space(), f.rep.algebra(), 2, [&](const std::vector<int> &idx) {
    const std::size_t a = static_cast<std::size_t>(idx[0]), b = static_cast<std::size_t>(idx[1]);
    const Vector v1 = pair_vector(a / 2), w1 = pair_vector(a % 2), v2 = pair_vector(b / 2), w2 = pair_vector(b % 2);
    const Vector mv = symmetric_moment(v1, v2), mw = symmetric_moment(w1, w2);
    Vector r(6);
    for (std::size_t c = 0; c < 3; ++c) {
      r[c] = -(f.alpha * mv[c] * omega(w1, w2));
      r[c + 3] = -(f.beta * mw[c] * omega(v1, v2));
    }
    return r;
  });
}

bool family_psi_closed_form(const FamilyRep &f, const CovariantSet &c) {
  const Scalar k = Scalar(3) * (Scalar(2) * f.alpha + 1);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int x = 0; x < 4; ++x) {
        const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b), ux = static_cast<std::size_t>(x);
        const Vector v1 = pair_vector(ua / 2), v2 = pair_vector(ub / 2), v3 = pair_vector(ux / 2);
        const Vector w1 = pair_vector(ua % 2), w2 = pair_vector(ub % 2), w3 = pair_vector(ux % 2);
        Vector expect = tensor(omega(v1, v3) * v2, omega(w3, w2) * w1) + tensor(omega(v2, v3) * v1, omega(w1, w3) * w2);
        if (!(c.psi.at({a, b, x}) == k * expect))
          return false;
      }
  return true;
}

bool family_quad_closed_form(const FamilyRep &f, const CovariantSet &c) {
  const Scalar k = Scalar(-12) * (Scalar(2) * f.alpha + 1);
  for (int i = 0; i < 256; ++i) {
    const std::vector<int> idx{i & 3, (i >> 2) & 3, (i >> 4) & 3, (i >> 6) & 3};
    std::vector<Vector> v, w;
    for (int x : idx) {
      v.push_back(pair_vector(static_cast<std::size_t>(x) / 2));
      w.push_back(pair_vector(static_cast<std::size_t>(x) % 2));
    }
    const Scalar expect = omega(v[1], v[3]) * omega(v[0], v[2]) * omega(w[3], w[2]) * omega(w[0], w[1]) +
                          omega(v[2], v[3]) * omega(v[0], v[1]) * omega(w[1], w[3]) * omega(w[0], w[2]);
    if (!(c.quad.at(idx)[0] == k * expect))
      return false;
  }
  return true;
}

bool family_swap_symmetric(const Scalar &alpha, const Scalar &beta) {
  const AltMap m1 = mu_family(build_family_rep(alpha, beta));
  const AltMap m2 = mu_family(build_family_rep(beta, alpha));
  auto swap_index = [](int a) { return 2 * (a % 2) + a / 2; };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Vector x = m1.at({a, b}), y = m2.at({swap_index(a), swap_index(b)});
      // the sp(V) and sp(W) blocks trade places
      const Vector y_swapped{y[3], y[4], y[5], y[0], y[1], y[2]};
      if (!(x == y_swapped))
        return false;
    }
  return true;
}

} // namespace exlsa
