#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "exlsa/matrix.hpp"

namespace exlsa {

/// Finite-dimensional space with a nondegenerate symmetric bilinear form.
class QuadraticSpace {
public:
  /// Throws ShapeMismatch for a non-symmetric Gram and SingularMatrix for a
  /// degenerate one.
  QuadraticSpace(std::vector<std::string> labels, Matrix gram);
  static std::shared_ptr<const QuadraticSpace> make(std::vector<std::string> labels, Matrix gram);
  static std::shared_ptr<const QuadraticSpace> diagonal(std::vector<std::string> labels, const Vector &q);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const Matrix &gram() const { return gram_; }
  bool is_diagonal() const { return diagonal_; }
  /// Diagonal entry B(e_i, e_i).
  const Scalar &q(std::size_t i) const { return gram_(i, i); }
  Scalar form(const Vector &x, const Vector &y) const { return bilinear(gram_, x, y); }

private:
  std::vector<std::string> labels_;
  Matrix gram_;
  bool diagonal_ = false;
};

using SpacePtr = std::shared_ptr<const QuadraticSpace>;

/// Strictly increasing index tuples are stored as bitmasks; bit i is basis
/// vector i (0-based).
using Mask = std::uint32_t;

std::size_t binomial(std::size_t n, std::size_t k);
/// All degree-p masks over n indices in lexicographic order of the sorted
/// index tuples. Empty when p > n.
const std::vector<Mask> &multi_indices(std::size_t n, std::size_t p);
/// Position of m in multi_indices(n, popcount(m)).
std::size_t position(std::size_t n, Mask m);
std::vector<int> indices_of(Mask m);
Mask mask_of(const std::vector<int> &indices);
int degree_of(Mask m);
/// Sign of the permutation sorting the concatenation (I, J); 0 if they meet.
int shuffle_sign(Mask i, Mask j);
/// Sign of the permutation sorting a tuple of distinct indices.
int permutation_sign(const std::vector<int> &seq);
/// "e_{1247}" with 1-based indices (comma separated above 9).
std::string index_label(Mask m, int offset = 1);

/// Element of Lambda^p(V), or of its dual when dual() is set. Coefficients
/// are dense over multi_indices(dim, p).
class ExteriorElement {
public:
  ExteriorElement(SpacePtr space, int degree, bool dual = false);
  ExteriorElement(SpacePtr space, int degree, Vector coeffs, bool dual = false);
  static ExteriorElement basis(SpacePtr space, Mask m);
  /// A vector of V as a degree-1 element.
  static ExteriorElement from_vector(SpacePtr space, const Vector &v);

  const SpacePtr &space() const { return space_; }
  int degree() const { return degree_; }
  bool dual() const { return dual_; }
  const Vector &coeffs() const { return coeffs_; }
  const Scalar &coeff(Mask m) const;
  void set(Mask m, Scalar c);
  void add(Mask m, const Scalar &c);
  bool is_zero() const { return exlsa::is_zero(coeffs_); }

  ExteriorElement &operator+=(const ExteriorElement &o);
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement &b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement &b) { return a += b.scaled(Scalar(-1)); }
  ExteriorElement scaled(const Scalar &c) const;
  friend bool operator==(const ExteriorElement &a, const ExteriorElement &b) {
    return a.degree_ == b.degree_ && a.dual_ == b.dual_ && a.coeffs_ == b.coeffs_;
  }

  /// Nonzero terms as (mask, coefficient) in multi-index order.
  std::vector<std::pair<Mask, Scalar>> terms() const;
  std::string to_string() const;

private:
  SpacePtr space_;
  int degree_;
  bool dual_;
  Vector coeffs_;
};

/// Gram matrix of B_Lambda on Lambda^p: entry (I, J) = det[B(e_i, e_j)].
Matrix lambda_gram(const QuadraticSpace &space, int p);
/// B_Lambda(x, y); throws DegreeMismatch.
Scalar gram_lambda(const ExteriorElement &x, const ExteriorElement &y);
/// The functional y -> B_Lambda(x, y), stored by its values on basis e_J.
ExteriorElement eta(const ExteriorElement &x);
ExteriorElement eta_inverse(const ExteriorElement &f);
/// Exterior product; the zero element of degree p+q when p+q > dim.
ExteriorElement wedge(const ExteriorElement &x, const ExteriorElement &y);

} // namespace exlsa
