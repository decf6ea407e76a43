#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exlsa/quadlie.hpp"

namespace exlsa {

/// Sorted (index, nonzero coefficient) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// g + sl(2) + V (x) k^2. Even basis: the basis of g, then h, e, f; odd
/// basis: v (x) a at index even_dim + 2v + a.
struct SuperAlgebra {
  std::string name;
  std::size_t even_dim = 0, odd_dim = 0;
  std::vector<std::string> labels;
  /// brackets[i][j] = [x_i, x_j].
  std::vector<std::vector<SparseVector>> brackets;
  Matrix form;
  /// Variable name -> value, for specialized parameters.
  std::map<std::string, std::string> bindings;
  /// Global factor applied to the odd-odd bracket.
  Scalar odd_constant{1};

  std::size_t dim() const { return even_dim + odd_dim; }
  bool is_odd(std::size_t i) const { return i >= even_dim; }
  SparseVector bracket(const SparseVector &x, const SparseVector &y) const;
};

/// Assembles the superalgebra of a special orthogonal representation. The
/// odd-odd bracket is c(omega(a,b) mu(v,w) + (v,w) mu_s(a,b)) with c fixed by
/// one invariance equation. Throws NotSpecial unless force.
SuperAlgebra build_tilde(const QuadLieRep &rep, const AltMap &mu, std::string name, bool force = false);

struct SectorResult {
  std::string sector; // EEE, EEO, EOO or OOO
  bool holds = true;
  std::size_t triples = 0;
  std::optional<std::array<std::size_t, 3>> witness;
};
struct SuperCheck {
  bool holds = true;
  std::vector<SectorResult> sectors;
  /// First failing sector and triple, readable.
  std::string witness_text(const SuperAlgebra &s) const;
};

/// [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]] on all basis triples.
SuperCheck super_jacobi_check(const SuperAlgebra &s);
/// B([x,y],z) = B(x,[y,z]) on all basis triples.
SuperCheck form_invariance_check(const SuperAlgebra &s);
SuperCheck form_invariance_check(const SuperAlgebra &s, const Matrix &form);
/// The form with its sl(2) block doubled.
Matrix perturbed_form(const SuperAlgebra &s);
/// Even-even and even-odd brackets antisymmetric, odd-odd symmetric.
bool super_symmetry_holds(const SuperAlgebra &s);

/// Canonical JSON. The digest carries a checksum of the tables and, when
/// given, the verification outcomes.
std::string export_json(const SuperAlgebra &s, const std::optional<std::pair<SuperCheck, SuperCheck>> &checks = {});
/// Throws IOError.
void write_json(const std::string &path, const std::string &text);
/// Inverse of export_json; throws ParseError.
SuperAlgebra parse_json(const std::string &text);

} // namespace exlsa
