#pragma once

#include <map>
#include <string>
#include <vector>

#include "exlsa/octonion.hpp"

namespace exlsa {

/// Element of C(Im, -q): coefficients on the ordered monomials e_S, S a
/// subset of the seven generators (bit i = e_{i+1}).
class CliffordElement {
public:
  CliffordElement() = default;
  static CliffordElement scalar(const Scalar &c);
  static CliffordElement monomial(Mask s, const Scalar &c = Scalar(1));
  /// u = sum u_i e_i for a vector of Im (7 coordinates).
  static CliffordElement from_vector(const Vector &u);

  const std::map<Mask, Scalar> &terms() const { return terms_; }
  Scalar coeff(Mask s) const;
  bool is_zero() const { return terms_.empty(); }
  /// True when every monomial has the given degree.
  bool is_homogeneous(int degree) const;

  CliffordElement &add(Mask s, const Scalar &c);
  CliffordElement &operator+=(const CliffordElement &o);
  CliffordElement &operator-=(const CliffordElement &o);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement &b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement &b) { return a -= b; }
  CliffordElement scaled(const Scalar &c) const;
  friend bool operator==(const CliffordElement &a, const CliffordElement &b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

private:
  std::map<Mask, Scalar> terms_;
};

/// C(Im, -q) together with its spinor action on the octonions.
class CliffordAlgebra {
public:
  explicit CliffordAlgebra(const OctonionAlgebra &o);

  const OctonionAlgebra &octonions() const { return oct_; }

  CliffordElement multiply(const CliffordElement &a, const CliffordElement &b) const;
  /// {c, d} = cd - (-1)^{|c||d|} dc, extended bilinearly over monomials.
  CliffordElement super_bracket(const CliffordElement &c, const CliffordElement &d) const;

  /// Ordered product on monomials of the orthogonal basis.
  CliffordElement quantize(const ExteriorElement &x) const;
  /// Inverse of quantize on the homogeneous part of the given degree.
  ExteriorElement dequantize(const CliffordElement &c, int degree) const;

  /// 8x8 matrix of the action on O.
  Matrix spinor_action(const CliffordElement &c) const;
  const Matrix &monomial_action(Mask s) const { return rho_[s]; }

  /// Q(eta^-1(phi)).
  const CliffordElement &omega() const { return omega_; }
  /// c_u = {u, Omega} for u in Im (7 coordinates).
  CliffordElement c_of(const Vector &u) const;
  /// c_{e_1}, ..., c_{e_7}.
  std::vector<CliffordElement> w_subspace() const;
  /// Basis of {x in C^2 : rho(x)(1) = 0}; throws WrongDimension unless 14.
  std::vector<CliffordElement> g2_kernel() const;

  /// The 21 masks of C^2 in multi-index order.
  static const std::vector<Mask> &degree_two();

private:
  OctonionAlgebra oct_;
  Vector q_;
  std::vector<Matrix> rho_;
  CliffordElement omega_;
};

} // namespace exlsa
