#include "exlsa/quadlie.hpp"

#include <functional>

#include "exlsa/errors.hpp"

namespace exlsa {

namespace {

Pairing make_action_pairing(const CodomainPtr &alg, const CodomainPtr &vec, const std::vector<Matrix> &action) {
  std::vector<Pairing::Entry> entries;
  for (std::size_t a = 0; a < action.size(); ++a)
    for (std::size_t j = 0; j < vec->dim(); ++j)
      for (std::size_t k = 0; k < vec->dim(); ++k)
        if (!action[a](k, j).is_zero())
          entries.push_back({a, j, k, action[a](k, j)});
  return Pairing(alg, vec, vec, std::move(entries));
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

} // namespace

QuadLieRep::QuadLieRep(std::string name, std::vector<std::string> labels, std::vector<std::vector<Vector>> brackets,
                       Matrix form, SpacePtr space, std::vector<Matrix> action)
    : name_(std::move(name)), labels_(std::move(labels)), brackets_(std::move(brackets)), form_(std::move(form)),
      space_(std::move(space)), action_(std::move(action)),
      algebra_(make_codomain(name_, labels_, form_)), vectors_(codomain_of(space_, "V")),
      pairing_(make_action_pairing(algebra_, vectors_, action_)) {
  const std::size_t n = labels_.size();
  if (brackets_.size() != n || action_.size() != n)
    throw ShapeMismatch("bracket table and actions must match the algebra basis");
  for (const auto &row : brackets_) {
    if (row.size() != n)
      throw ShapeMismatch("bracket table is not square");
    for (const auto &v : row)
      if (v.size() != n)
        throw ShapeMismatch("bracket value has the wrong length");
  }
  for (const auto &m : action_)
    if (m.rows() != space_->dim() || m.cols() != space_->dim())
      throw ShapeMismatch("action matrix does not act on V");
  if (!form_.is_symmetric())
    throw InvariantViolation("algebra form is not symmetric");
  if (!form_.is_diagonal())
    form_inverse_ = inverse(form_);
  else
    for (std::size_t i = 0; i < n; ++i)
      if (form_(i, i).is_zero())
        throw SingularMatrix("algebra form is degenerate");
}

Vector QuadLieRep::bracket(const Vector &x, const Vector &y) const {
  Vector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!y[j].is_zero())
        axpy(r, x[i] * y[j], brackets_[i][j]);
  }
  return r;
}

Matrix QuadLieRep::action_of(const Vector &x) const {
  Matrix m(space_dim(), space_dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero())
      m += x[i] * action_[i];
  return m;
}

Vector QuadLieRep::raise(const Vector &rhs) const {
  if (form_.is_diagonal()) {
    Vector x(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i)
      if (!rhs[i].is_zero())
        x[i] = rhs[i] / form_(i, i);
    return x;
  }
  return form_inverse_ * rhs;
}

std::optional<std::string> QuadLieRep::find_violation() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(brackets_[i][j] == -brackets_[j][i]))
        return "bracket not antisymmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // representation: [A_i, A_j] = A_[i,j]
      if (!(commutator(action_[i], action_[j]) == action_of(brackets_[i][j])))
        return "action is not a representation at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector jac = bracket(unit_vector(n, i), brackets_[j][k]);
        jac = jac + bracket(unit_vector(n, j), brackets_[k][i]);
        jac = jac + bracket(unit_vector(n, k), brackets_[i][j]);
        if (!is_zero(jac))
          return "Jacobi fails at " + triple(i, j, k);
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // B([x_i, x_j], x_k) + B(x_j, [x_i, x_k]) = 0
        Scalar s;
        for (std::size_t a = 0; a < n; ++a) {
          if (!brackets_[i][j][a].is_zero())
            s += brackets_[i][j][a] * form_(a, k);
          if (!brackets_[i][k][a].is_zero())
            s += brackets_[i][k][a] * form_(j, a);
        }
        if (!s.is_zero())
          return "form not invariant at " + triple(i, j, k);
      }
  const Matrix &g = space_->gram();
  for (std::size_t a = 0; a < n; ++a) {
    const Matrix m = g * action_[a];
    if (!(m + m.transpose()).is_zero())
      return "action of " + labels_[a] + " is not skew";
  }
  return std::nullopt;
}

std::vector<std::vector<Vector>> bracket_table_from_trace(const std::vector<Matrix> &actions, const Matrix &form,
                                                          const Scalar &scale) {
  const std::size_t n = actions.size();
  const bool diag = form.is_diagonal();
  const Matrix inv = diag ? Matrix() : inverse(form);
  std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix c = commutator(actions[i], actions[j]);
      if (c.is_zero())
        continue;
      Vector rhs(n);
      for (std::size_t a = 0; a < n; ++a)
        rhs[a] = scale * trace_product(actions[a], c);
      Vector x(n);
      if (diag) {
        for (std::size_t a = 0; a < n; ++a)
          if (!rhs[a].is_zero())
            x[a] = rhs[a] / form(a, a);
      } else {
        x = inv * rhs;
      }
      table[j][i] = -x;
      table[i][j] = std::move(x);
    }
  return table;
}

Vector mu_can_value(const QuadraticSpace &space, const Vector &u, const Vector &v, const Vector &w) {
  Vector r = space.form(u, w) * v;
  axpy(r, -space.form(v, w), u);
  return r;
}

QuadLieRep so_fundamental_rep(const SpacePtr &space) {
  const std::size_t n = space->dim();
  std::vector<Matrix> actions;
  std::vector<std::string> labels;
  for (Mask m : multi_indices(n, 2)) {
    const auto ij = indices_of(m);
    const Vector u = unit_vector(n, static_cast<std::size_t>(ij[0])), v = unit_vector(n, static_cast<std::size_t>(ij[1]));
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < n; ++k)
      cols.push_back(mu_can_value(*space, u, v, unit_vector(n, k)));
    actions.push_back(Matrix::from_columns(cols));
    labels.push_back("m" + index_label(m).substr(1));
  }
  const std::size_t d = actions.size();
  Matrix form(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      form(a, b) = Scalar(-1, 2) * trace_product(actions[a], actions[b]);
  auto table = bracket_table_from_trace(actions, form, Scalar(-1, 2));
  return QuadLieRep("so(V)", std::move(labels), std::move(table), std::move(form), space, std::move(actions));
}

AltMap mu_can(const QuadLieRep &so_rep) {
  const std::size_t n = so_rep.space_dim();
  if (so_rep.dim() != binomial(n, 2))
    throw ShapeMismatch("mu_can needs the rep built by so_fundamental_rep");
  return AltMap::from_function(so_rep.space(), so_rep.algebra(), 2, [&](const std::vector<int> &i) {
    return unit_vector(so_rep.dim(), position(n, mask_of(i)));
  });
}

AltMap moment_map(const QuadLieRep &rep) {
  const Matrix &g = rep.space()->gram();
  // rhs_a(v, w) = B(A_a e_v, e_w) = (G A_a)(w, v)
  std::vector<Matrix> ga;
  for (std::size_t a = 0; a < rep.dim(); ++a)
    ga.push_back(g * rep.action(a));
  return AltMap::from_function(rep.space(), rep.algebra(), 2, [&](const std::vector<int> &i) {
    Vector rhs(rep.dim());
    for (std::size_t a = 0; a < rep.dim(); ++a)
      rhs[a] = ga[a](static_cast<std::size_t>(i[1]), static_cast<std::size_t>(i[0]));
    return rep.raise(rhs);
  });
}

bool moment_map_equivariant(const QuadLieRep &rep, const AltMap &mu) {
  const std::size_t n = rep.space_dim();
  for (std::size_t x = 0; x < rep.dim(); ++x) {
    const Vector ex = unit_vector(rep.dim(), x);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = v + 1; w < n; ++w) {
        const Vector ev = unit_vector(n, v), ew = unit_vector(n, w);
        const Vector lhs = mu.evaluate({rep.action(x) * ev, ew}) + mu.evaluate({ev, rep.action(x) * ew});
        if (!(lhs == rep.bracket(ex, mu.at({static_cast<int>(v), static_cast<int>(w)}))))
          return false;
      }
  }
  return true;
}

namespace {

// M[a][b] = action of mu(e_a, e_b).
std::vector<std::vector<Matrix>> mu_actions(const QuadLieRep &rep, const AltMap &mu) {
  const std::size_t n = rep.space_dim();
  std::vector<std::vector<Matrix>> m(n, std::vector<Matrix>(n, Matrix(n, n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      m[a][b] = rep.action_of(mu.at({static_cast<int>(a), static_cast<int>(b)}));
      m[b][a] = Scalar(-1) * m[a][b];
    }
  return m;
}

} // namespace

SpecialResult check_special(const QuadLieRep &rep, const AltMap &mu) {
  const std::size_t n = rep.space_dim();
  const Matrix &g = rep.space()->gram();
  const auto m = mu_actions(rep, mu);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Vector lhs = m[a][b].column(c) + m[a][c].column(b);
        Vector rhs = g(a, b) * unit_vector(n, c);
        axpy(rhs, g(a, c), unit_vector(n, b));
        axpy(rhs, Scalar(-2) * g(b, c), unit_vector(n, a));
        if (!(lhs == rhs))
          return {false, std::array<int, 3>{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)}};
      }
  return {};
}

CovariantSet covariants(const QuadLieRep &rep, const AltMap &mu) {
  const auto m = mu_actions(rep, mu);
  auto val = [&](int a, int b, int c) {
    return m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].column(static_cast<std::size_t>(c));
  };
  AltMap psi = AltMap::from_function(rep.space(), rep.vectors(), 3, [&](const std::vector<int> &i) {
    return val(i[0], i[1], i[2]) + val(i[2], i[0], i[1]) + val(i[1], i[2], i[0]);
  });
  const auto &sp = *rep.space();
  const std::size_t n = rep.space_dim();
  auto e = [&](int i) { return unit_vector(n, static_cast<std::size_t>(i)); };
  AltMap quad = AltMap::from_function(rep.space(), scalar_codomain(), 4, [&](const std::vector<int> &i) {
    const int v1 = i[0], v2 = i[1], v3 = i[2], v4 = i[3];
    Scalar s = sp.form(e(v1), psi.at({v2, v3, v4}));
    s -= sp.form(e(v4), psi.at({v1, v2, v3}));
    s += sp.form(e(v3), psi.at({v4, v1, v2}));
    s -= sp.form(e(v2), psi.at({v3, v4, v1}));
    return Vector{s};
  });
  const bool special = check_special(rep, mu).holds;
  return {mu, std::move(psi), std::move(quad), special};
}

bool psi_shortcut_holds(const QuadLieRep &rep, const CovariantSet &c) {
  const std::size_t n = rep.space_dim();
  const auto m = mu_actions(rep, c.mu);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector can = mu_can_value(*rep.space(), unit_vector(n, a), unit_vector(n, b), unit_vector(n, k));
        const Vector rhs = Scalar(3) * (m[a][b].column(k) - can);
        if (!(c.psi.at({static_cast<int>(a), static_cast<int>(b), static_cast<int>(k)}) == rhs))
          return false;
      }
  return true;
}

bool quad_shortcut_holds(const QuadLieRep &rep, const CovariantSet &c) {
  const int n = static_cast<int>(rep.space_dim());
  const auto &sp = *rep.space();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < n; ++x)
        for (int d = 0; d < n; ++d) {
          const Scalar rhs = Scalar(4) * sp.form(unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(a)),
                                                 c.psi.at({b, x, d}));
          if (!(c.quad.at({a, b, x, d})[0] == rhs))
            return false;
        }
  return true;
}

std::string to_string(Status s) {
  switch (s) {
  case Status::holds:
    return "holds";
  case Status::fails:
    return "fails";
  case Status::vacuous:
    return "vacuous";
  }
  return "?";
}

std::vector<IdentityResult> mathews_check(const QuadLieRep &rep, const CovariantSet &c) {
  const int n = static_cast<int>(rep.space_dim());
  const AltMap id = AltMap::identity(rep.space(), rep.vectors());
  const Pairing scal_v = Pairing::scalar_left(rep.vectors());
  const Pairing scal_g = Pairing::scalar_left(rep.algebra());
  const Pairing scal_k = Pairing::scalar_left(scalar_codomain());

  struct Identity {
    std::string name, statement;
    int degree;
    std::function<AltMap()> lhs, rhs;
  };
  const std::vector<Identity> identities{
      {"a", "mu ^_rho psi = -3/2 Q ^ Id", 5, [&] { return wedge_rel(c.mu, c.psi, rep.action_pairing()); },
       [&] { return wedge_rel(c.quad, id, scal_v).scaled(Scalar(-3, 2)); }},
      {"b", "mu o psi = 3 Q ^ mu", 6, [&] { return compose(c.mu, c.psi); },
       [&] { return wedge_rel(c.quad, c.mu, scal_g).scaled(Scalar(3)); }},
      {"c", "psi o psi = -27/2 Q ^ Q ^ Id", 9, [&] { return compose(c.psi, c.psi); },
       [&] { return wedge_rel(wedge_rel(c.quad, c.quad, scal_k), id, scal_v).scaled(Scalar(-27, 2)); }},
      {"d", "Q o psi = -54 Q ^ Q ^ Q", 12, [&] { return compose(c.quad, c.psi); },
       [&] { return wedge_rel(wedge_rel(c.quad, c.quad, scal_k), c.quad, scal_k).scaled(Scalar(-54)); }},
  };
  std::vector<IdentityResult> out;
  for (const auto &s : identities) {
    IdentityResult r{s.name, s.statement, Status::vacuous, s.degree, true};
    if (s.degree <= n) {
      const AltMap l = s.lhs(), rr = s.rhs();
      r.status = l == rr ? Status::holds : Status::fails;
      r.both_zero = l.is_zero() && rr.is_zero();
    }
    out.push_back(std::move(r));
  }
  return out;
}

ExteriorElement decompose_quad(const CovariantSet &c) {
  const std::size_t n = c.quad.domain()->dim();
  ExteriorElement f(c.quad.domain(), 4, true);
  for (Mask m : multi_indices(n, 4))
    f.set(m, c.quad.value(m)[0]);
  return eta_inverse(f);
}

// ---------------------------------------------------------------------------

Vector CliffordRep::c2_coordinates(const CliffordElement &x) {
  Vector v;
  for (Mask m : CliffordAlgebra::degree_two())
    v.push_back(x.coeff(m));
  for (const auto &[s, c] : x.terms())
    if (degree_of(s) != 2)
      throw ShapeMismatch("element is not in C^2");
  return v;
}

namespace {

Matrix trace_form(const std::vector<Matrix> &actions, const Scalar &scale) {
  const std::size_t d = actions.size();
  Matrix form(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b)
      form(a, b) = form(b, a) = scale * trace_product(actions[a], actions[b]);
  return form;
}

} // namespace

CliffordRep build_g2_rep(const CliffordAlgebra &cl) {
  auto basis = cl.g2_kernel();
  std::vector<Matrix> full, im;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    full.push_back(cl.spinor_action(basis[a]));
    Matrix r(7, 7);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        r(i, j) = full.back()(i + 1, j + 1);
    im.push_back(std::move(r));
    labels.push_back("D" + std::to_string(a + 1));
  }
  const Scalar scale(-1, 3);
  Matrix form = trace_form(full, scale);
  auto table = bracket_table_from_trace(full, form, scale);
  return {QuadLieRep("g2", std::move(labels), std::move(table), std::move(form), cl.octonions().im_space(),
                     std::move(im)),
          std::move(basis)};
}

CliffordRep build_spinor_rep(const CliffordAlgebra &cl) {
  std::vector<CliffordElement> basis;
  std::vector<Matrix> actions;
  std::vector<std::string> labels;
  for (Mask m : CliffordAlgebra::degree_two()) {
    basis.push_back(CliffordElement::monomial(m));
    actions.push_back(cl.monomial_action(m));
    labels.push_back(index_label(m));
  }
  const Scalar scale(-3, 8);
  Matrix form = trace_form(actions, scale);
  auto table = bracket_table_from_trace(actions, form, scale);
  return {QuadLieRep("so7", std::move(labels), std::move(table), std::move(form), cl.octonions().space(),
                     std::move(actions)),
          std::move(basis)};
}

bool g2_cyclic_check(const OctonionAlgebra &o, const AltMap &mu_im, const Vector &u, const Vector &v, const Vector &w) {
  auto cross = [&](const Vector &x, const Vector &y) {
    return OctonionAlgebra::imaginary_part(
        o.cross_product(OctonionAlgebra::embed_imaginary(x), OctonionAlgebra::embed_imaginary(y)));
  };
  const Vector s =
      mu_im.evaluate({u, cross(v, w)}) + mu_im.evaluate({w, cross(u, v)}) + mu_im.evaluate({v, cross(w, u)});
  return is_zero(s);
}

bool spinor_cyclic_check(const OctonionAlgebra &o, const AltMap &mu_oct, const Vector &u, const Vector &v,
                         const Vector &w) {
  const Vector lhs = mu_oct.evaluate({u, o.cross_product(v, w)}) + mu_oct.evaluate({v, o.cross_product(w, u)}) +
                     mu_oct.evaluate({w, o.cross_product(u, v)});
  const Vector rhs = Scalar(-1, 2) * mu_oct.evaluate({o.associator(u, v, w), o.unit(0)});
  return lhs == rhs;
}

} // namespace exlsa
