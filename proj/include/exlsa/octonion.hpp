#pragma once

#include <array>
#include <utility>
#include <vector>

#include "exlsa/altmap.hpp"

namespace exlsa {

/// Octonions over Q(l1, l2, l3) in the orthogonal basis
/// 1, e1, e2, e3 = e1e2, e4, e5 = e1e4, e6 = e2e4, e7 = (e1e2)e4
/// with q(e1) = l1, q(e2) = l2, q(e4) = l3. An octonion is a Vector of
/// length 8, coordinate 0 being the real part.
class OctonionAlgebra {
public:
  /// Throws DegenerateParameter if some parameter is zero.
  OctonionAlgebra(Scalar l1, Scalar l2, Scalar l3);
  static OctonionAlgebra symbolic();

  const std::array<Scalar, 3> &params() const { return params_; }
  /// q of the eight basis elements.
  const Vector &norms() const { return norms_; }
  /// e_i e_j = c e_k, stored as (k, c).
  const std::pair<int, Scalar> &basis_product(int i, int j) const { return table_[i][j]; }

  Vector unit(int i) const { return unit_vector(8, static_cast<std::size_t>(i)); }
  Vector multiply(const Vector &x, const Vector &y) const;
  Vector conj(const Vector &x) const;
  Scalar norm_q(const Vector &x) const;
  Scalar bilinear_B(const Vector &x, const Vector &y) const;
  Vector commutator(const Vector &u, const Vector &v) const;
  Vector associator(const Vector &u, const Vector &v, const Vector &w) const;
  Vector jacobi_tensor(const Vector &u, const Vector &v, const Vector &w) const;
  /// (conj(v) u - conj(u) v) / 2.
  Vector cross_product(const Vector &u, const Vector &v) const;
  /// B(u, v x w); throws NotImaginary.
  Scalar associative_form(const Vector &u, const Vector &v, const Vector &w) const;
  /// u x (v x w) + v x (u x w) == B(v,w)u + B(u,w)v - 2B(u,v)w.
  bool malcev_check(const Vector &u, const Vector &v, const Vector &w) const;

  /// Matrix of x -> e_i x.
  const Matrix &left_multiplication(int i) const { return left_[static_cast<std::size_t>(i)]; }

  /// The whole algebra with basis labels e1..e8 (e1 = 1) and B.
  const SpacePtr &space() const { return space_; }
  /// Im with basis e1..e7 and B.
  const SpacePtr &im_space() const { return im_space_; }
  static Vector embed_imaginary(const Vector &v7);
  /// Drops the real part; throws NotImaginary if it is nonzero.
  static Vector imaginary_part(const Vector &v8);

  /// phi as an alternating 3-form on Im.
  AltMap phi() const;
  /// The cross product as an element of Alt_2(Im, Im).
  AltMap cross() const;

private:
  std::array<Scalar, 3> params_;
  Vector norms_;
  std::array<std::array<std::pair<int, Scalar>, 8>, 8> table_;
  std::vector<Matrix> left_;
  SpacePtr space_, im_space_;
};

/// (g1, g2, g1g2, g3, g1g3, g2g3, (g1g2)g3), preceded by 1 when with_unit.
/// Throws BadGenerators unless the generators are imaginary, anisotropic,
/// pairwise orthogonal and g3 is orthogonal to g1g2.
std::vector<Vector> generate_labeled_basis(const OctonionAlgebra &o, const Vector &g1, const Vector &g2,
                                           const Vector &g3, bool with_unit = false);

/// The seven lines of the Fano plane on the labels 1..7, as masks over the
/// 0-based indices of e1..e7 in Im.
const std::vector<Mask> &fano_lines();
/// Positions of the eight labels of the cube in (Z_2)^3 (index 0 = e1 = 1).
const std::array<std::array<int, 3>, 8> &cube_points();
/// The fourteen affine planes of (Z_2)^3 as masks over indices of e1..e8.
std::vector<Mask> affine_planes();

} // namespace exlsa
