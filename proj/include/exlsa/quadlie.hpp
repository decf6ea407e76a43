#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "exlsa/clifford.hpp"

namespace exlsa {

/// A quadratic Lie algebra (basis, structure constants, invariant form)
/// with an orthogonal representation on a quadratic space.
class QuadLieRep {
public:
  /// brackets[i][j] = coordinates of [x_i, x_j].
  QuadLieRep(std::string name, std::vector<std::string> labels, std::vector<std::vector<Vector>> brackets, Matrix form,
             SpacePtr space, std::vector<Matrix> action);

  const std::string &name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  std::size_t space_dim() const { return space_->dim(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const Vector &bracket(std::size_t i, std::size_t j) const { return brackets_[i][j]; }
  const Matrix &form() const { return form_; }
  const SpacePtr &space() const { return space_; }
  const Matrix &action(std::size_t i) const { return action_[i]; }
  /// The algebra as a codomain, paired by its invariant form.
  const CodomainPtr &algebra() const { return algebra_; }
  /// V as a codomain, paired by its form.
  const CodomainPtr &vectors() const { return vectors_; }

  Vector bracket(const Vector &x, const Vector &y) const;
  Matrix action_of(const Vector &x) const;
  Vector act(const Vector &x, const Vector &v) const { return action_of(x) * v; }
  /// Solves form * x = rhs (the form is nonsingular).
  Vector raise(const Vector &rhs) const;
  /// algebra x V -> V, (x, v) -> x.v
  const Pairing &action_pairing() const { return pairing_; }

  /// First violated structural invariant (Jacobi, invariance of the form,
  /// representation, skewness), or nullopt.
  std::optional<std::string> find_violation() const;

private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vector>> brackets_;
  Matrix form_, form_inverse_;
  SpacePtr space_;
  std::vector<Matrix> action_;
  CodomainPtr algebra_, vectors_;
  Pairing pairing_;
};

/// Coordinates of [A_i, A_j] for matrices spanning a Lie algebra whose
/// invariant form is form(x, y) = scale * Tr(A_x A_y).
std::vector<std::vector<Vector>> bracket_table_from_trace(const std::vector<Matrix> &actions, const Matrix &form,
                                                          const Scalar &scale);

/// so(V) with basis m_{ij} = mu_can(e_i, e_j) (i < j) and B = -1/2 Tr.
QuadLieRep so_fundamental_rep(const SpacePtr &space);
/// mu_can(u,v)(w) = (u,w)v - (v,w)u.
Vector mu_can_value(const QuadraticSpace &space, const Vector &u, const Vector &v, const Vector &w);
/// mu_can as an element of Alt_2(V, so(V)) for the rep of so_fundamental_rep.
AltMap mu_can(const QuadLieRep &so_rep);

/// The moment map: B_g(x, mu(v,w)) = B(x.v, w).
AltMap moment_map(const QuadLieRep &rep);
/// Moment map equivariance mu(x.v, w) + mu(v, x.w) = [x, mu(v,w)] on basis
/// elements.
bool moment_map_equivariant(const QuadLieRep &rep, const AltMap &mu);

struct SpecialResult {
  bool holds = true;
  /// First basis triple (u, v, w) where the identity fails.
  std::optional<std::array<int, 3>> witness;
};
SpecialResult check_special(const QuadLieRep &rep, const AltMap &mu);

struct CovariantSet {
  AltMap mu, psi, quad;
  bool special = false;
};
/// psi and Q from their definitions.
CovariantSet covariants(const QuadLieRep &rep, const AltMap &mu);
/// psi(v1,v2,v3) = 3(mu(v1,v2)v3 - mu_can(v1,v2)v3) on basis triples.
bool psi_shortcut_holds(const QuadLieRep &rep, const CovariantSet &c);
/// Q(v1,v2,v3,v4) = 4(v1, psi(v2,v3,v4)) on basis quadruples.
bool quad_shortcut_holds(const QuadLieRep &rep, const CovariantSet &c);

enum class Status { holds, fails, vacuous };
std::string to_string(Status s);

struct IdentityResult {
  std::string name;
  std::string statement;
  Status status = Status::holds;
  int degree = 0;
  /// Both sides vanish identically (only meaningful when computed).
  bool both_zero = false;
};
/// The four identities mu ^_rho psi = -3/2 Q ^ Id, mu o psi = 3 Q ^ mu,
/// psi o psi = -27/2 Q ^ Q ^ Id, Q o psi = -54 Q ^ Q ^ Q. Identities of
/// degree above dim V are reported vacuous without computing.
std::vector<IdentityResult> mathews_check(const QuadLieRep &rep, const CovariantSet &c);

/// eta^-1(Q) as an element of Lambda^4(V).
ExteriorElement decompose_quad(const CovariantSet &c);

/// A representation realized inside C^2, with the Clifford elements of its
/// algebra basis.
struct CliffordRep {
  QuadLieRep rep;
  std::vector<CliffordElement> basis;
  /// Coordinates of a C^2 element in the 21 monomials of degree two.
  static Vector c2_coordinates(const CliffordElement &x);
};
/// g = ker(x -> rho(x)(1)) acting on Im, B_g = -1/3 Tr.
CliffordRep build_g2_rep(const CliffordAlgebra &cl);
/// C^2 acting on O, B_h = -3/8 Tr.
CliffordRep build_spinor_rep(const CliffordAlgebra &cl);

/// mu(u, v x w) + mu(w, u x v) + mu(v, w x u) == 0 for imaginaries u, v, w
/// (7 coordinates) and the moment map on Im.
bool g2_cyclic_check(const OctonionAlgebra &o, const AltMap &mu_im, const Vector &u, const Vector &v, const Vector &w);
/// mu(u, v x w) + mu(v, w x u) + mu(w, u x v) == -1/2 mu((u,v,w), 1) for
/// imaginaries (8 coordinates) and the moment map on O.
bool spinor_cyclic_check(const OctonionAlgebra &o, const AltMap &mu_oct, const Vector &u, const Vector &v,
                         const Vector &w);

} // namespace exlsa
