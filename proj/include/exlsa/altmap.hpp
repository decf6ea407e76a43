#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exlsa/exterior.hpp"

namespace exlsa {

/// Target space of an alternating map: a basis with the bilinear form used
/// to pair values (B on a quadratic space, the invariant form on a Lie
/// algebra, or 1 on the scalars).
struct Codomain {
  std::string name;
  std::vector<std::string> labels;
  Matrix gram;

  std::size_t dim() const { return labels.size(); }
};

using CodomainPtr = std::shared_ptr<const Codomain>;

CodomainPtr scalar_codomain();
CodomainPtr codomain_of(const SpacePtr &space, std::string name);
CodomainPtr make_codomain(std::string name, std::vector<std::string> labels, Matrix gram);

/// Bilinear map F x G -> H given by its nonzero structure constants.
class Pairing {
public:
  struct Entry {
    std::size_t left, right, out;
    Scalar coeff;
  };

  Pairing(CodomainPtr left, CodomainPtr right, CodomainPtr result, std::vector<Entry> entries);

  /// k x W -> W and W x k -> W.
  static Pairing scalar_left(const CodomainPtr &w);
  static Pairing scalar_right(const CodomainPtr &w);
  /// W x W -> k through the Gram matrix of W.
  static Pairing form(const CodomainPtr &w);

  const CodomainPtr &left() const { return left_; }
  const CodomainPtr &right() const { return right_; }
  const CodomainPtr &result() const { return result_; }
  Vector apply(const Vector &x, const Vector &y) const;

private:
  CodomainPtr left_, right_, result_;
  std::vector<std::vector<Entry>> by_left_;
};

/// Alternating p-linear map from a quadratic space to a codomain, stored by
/// its values on increasing basis tuples.
class AltMap {
public:
  AltMap(SpacePtr domain, CodomainPtr codomain, int degree);
  static AltMap from_function(SpacePtr domain, CodomainPtr codomain, int degree,
                              const std::function<Vector(const std::vector<int> &)> &values);
  /// The identity of V as an element of Alt_1(V, V).
  static AltMap identity(const SpacePtr &domain, const CodomainPtr &codomain);

  const SpacePtr &domain() const { return domain_; }
  const CodomainPtr &codomain() const { return codomain_; }
  int degree() const { return degree_; }
  /// True when the degree exceeds the dimension, so Alt_p is the zero space.
  bool degree_exceeds_dimension() const { return static_cast<std::size_t>(degree_) > domain_->dim(); }

  const Vector &value(Mask m) const;
  void set_value(Mask m, Vector v);
  /// Value on basis vectors in any order (0 on repeats).
  Vector at(const std::vector<int> &indices) const;
  /// Multilinear alternating expansion; throws ArityMismatch.
  Vector evaluate(const std::vector<Vector> &args) const;

  bool is_zero() const;
  AltMap scaled(const Scalar &c) const;
  AltMap &operator+=(const AltMap &o);
  AltMap &operator-=(const AltMap &o);
  friend AltMap operator+(AltMap a, const AltMap &b) { return a += b; }
  friend AltMap operator-(AltMap a, const AltMap &b) { return a -= b; }
  friend bool operator==(const AltMap &a, const AltMap &b);

  /// c with *this == c * other, if one exists (nullopt also when other is 0
  /// and *this is not).
  std::optional<Scalar> ratio_to(const AltMap &other) const;

  /// Lines "e_{I} -> [c1, c2, ...]" for nonzero values.
  std::string dump() const;

private:
  void require_same_shape(const AltMap &o) const;

  SpacePtr domain_;
  CodomainPtr codomain_;
  int degree_;
  std::vector<Vector> values_;
};

/// (f wedge_phi g)(v_1..v_{p+q}) summed over (p,q)-shuffles.
AltMap wedge_rel(const AltMap &f, const AltMap &g, const Pairing &pairing);
/// Scalar-valued f, g: the wedge through multiplication.
AltMap wedge(const AltMap &f, const AltMap &g);
/// f in Alt_p(E,F), g in Alt_q(G,E): (f o g) summed over (q,...,q)-shuffles.
AltMap compose(const AltMap &f, const AltMap &g);
/// The form B_Lambda* tensor B on Alt_p; throws ShapeMismatch.
Scalar b_alt(const AltMap &f, const AltMap &g);
/// The unique *f with alpha wedge_B *f = b_alt(alpha, f) vol for every alpha.
/// vol must be a nonzero top-degree scalar form; throws SingularPairing.
AltMap hodge_dual(const AltMap &f, const AltMap &volume);
/// Re-checks the defining equation of *f on every basis alpha.
bool hodge_property_holds(const AltMap &f, const AltMap &star, const AltMap &volume);

} // namespace exlsa
