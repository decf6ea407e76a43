#pragma once

#include <vector>

#include "exlsa/quadlie.hpp"

namespace exlsa {

/// The canonical symplectic form on k^2: omega(f1, f2) = 1.
const Matrix &omega_matrix();
Scalar omega(const Vector &x, const Vector &y);
/// h, e, f of sl(2) as 2x2 matrices.
const std::vector<Matrix> &sl2_basis();
/// Coordinates of a traceless 2x2 matrix in (h, e, f).
Vector sl2_coordinates(const Matrix &m);
/// [x_i, x_j] in (h, e, f) coordinates.
std::vector<std::vector<Vector>> sl2_brackets();
/// K(x, y) = 1/2 Tr(xy) on (h, e, f).
Matrix sl2_form();

/// mu(v1,v2)(v3) = -omega(v1,v3)v2 - omega(v2,v3)v1, in (h, e, f) coordinates.
Vector symmetric_moment(const Vector &v1, const Vector &v2);

/// sp(V) x sp(W) on V (x) W with the form (1/alpha)K_V + (1/beta)K_W.
/// Basis of V (x) W: index 2i + j for f_i (x) g_j. Throws ZeroParameter.
struct FamilyRep {
  Scalar alpha, beta;
  QuadLieRep rep;
};
FamilyRep build_family_rep(const Scalar &alpha, const Scalar &beta);

/// The closed form -(alpha mu_V(v1,v2) omega(w1,w2) + beta mu_W(w1,w2) omega(v1,v2)).
AltMap mu_family(const FamilyRep &f);

/// psi = 3(2 alpha + 1)(...) on all basis triples.
bool family_psi_closed_form(const FamilyRep &f, const CovariantSet &c);
/// Q = -12(2 alpha + 1)(...) on all basis quadruples.
bool family_quad_closed_form(const FamilyRep &f, const CovariantSet &c);

/// mu_family(alpha, beta) agrees with mu_family(beta, alpha) after swapping
/// the two tensor factors.
bool family_swap_symmetric(const Scalar &alpha, const Scalar &beta);

} // namespace exlsa
