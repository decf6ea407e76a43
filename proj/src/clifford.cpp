#include "exlsa/clifford.hpp"

#include <bit>

#include "exlsa/errors.hpp"

namespace exlsa {

CliffordElement CliffordElement::scalar(const Scalar &c) { return monomial(0, c); }

CliffordElement CliffordElement::monomial(Mask s, const Scalar &c) {
  CliffordElement r;
  r.add(s, c);
  return r;
}

CliffordElement CliffordElement::from_vector(const Vector &u) {
  if (u.size() != 7)
    throw ShapeMismatch("Clifford generators come from Im (7 coordinates)");
  CliffordElement r;
  for (std::size_t i = 0; i < 7; ++i)
    r.add(Mask{1} << i, u[i]);
  return r;
}

Scalar CliffordElement::coeff(Mask s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? Scalar() : it->second;
}

bool CliffordElement::is_homogeneous(int degree) const {
  for (const auto &[s, c] : terms_)
    if (degree_of(s) != degree)
      return false;
  return true;
}

CliffordElement &CliffordElement::add(Mask s, const Scalar &c) {
  if (c.is_zero())
    return *this;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
  return *this;
}

CliffordElement &CliffordElement::operator+=(const CliffordElement &o) {
  for (const auto &[s, c] : o.terms_)
    add(s, c);
  return *this;
}

CliffordElement &CliffordElement::operator-=(const CliffordElement &o) {
  for (const auto &[s, c] : o.terms_)
    add(s, -c);
  return *this;
}

CliffordElement CliffordElement::scaled(const Scalar &c) const {
  CliffordElement r;
  if (c.is_zero())
    return r;
  for (const auto &[s, x] : terms_)
    r.terms_.emplace(s, x * c);
  return r;
}

std::string CliffordElement::to_string() const {
  std::string out;
  for (const auto &[s, c] : terms_) {
    if (!out.empty())
      out += " + ";
    out += "(" + c.to_string() + ")" + (s ? index_label(s) : "1");
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

namespace {

// e_S e_T = sign * prod_{i in S & T} (-q_i) * e_{S xor T}.
int monomial_sign(Mask s, Mask t) {
  int swaps = 0;
  for (Mask rest = t; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(s >> (j + 1));
  }
  return swaps % 2 ? -1 : 1;
}

} // namespace

CliffordAlgebra::CliffordAlgebra(const OctonionAlgebra &o) : oct_(o), q_(o.norms().begin() + 1, o.norms().end()) {
  rho_.resize(128);
  rho_[0] = Matrix::identity(8);
  for (Mask s = 1; s < 128; ++s) {
    // rho(e_S) = rho(e_{s1}) ... rho(e_{sk}); peel the last generator
    const int top = 31 - std::countl_zero(s);
    rho_[s] = rho_[s & ~(Mask{1} << top)] * o.left_multiplication(top + 1);
  }
  ExteriorElement phi(o.im_space(), 3, true);
  const AltMap f = o.phi();
  for (Mask m : multi_indices(7, 3))
    phi.set(m, f.value(m)[0]);
  omega_ = quantize(eta_inverse(phi));
}

CliffordElement CliffordAlgebra::multiply(const CliffordElement &a, const CliffordElement &b) const {
  CliffordElement r;
  for (const auto &[s, x] : a.terms())
    for (const auto &[t, y] : b.terms()) {
      Scalar c = x * y;
      if (monomial_sign(s, t) < 0)
        c = -c;
      for (Mask both = s & t; both; both &= both - 1)
        c *= -q_[static_cast<std::size_t>(std::countr_zero(both))];
      r.add(s ^ t, c);
    }
  return r;
}

CliffordElement CliffordAlgebra::super_bracket(const CliffordElement &c, const CliffordElement &d) const {
  CliffordElement r;
  for (const auto &[s, x] : c.terms())
    for (const auto &[t, y] : d.terms()) {
      const auto cs = CliffordElement::monomial(s, x), dt = CliffordElement::monomial(t, y);
      const bool odd = (degree_of(s) * degree_of(t)) % 2;
      r += multiply(cs, dt);
      if (odd)
        r += multiply(dt, cs);
      else
        r -= multiply(dt, cs);
    }
  return r;
}

CliffordElement CliffordAlgebra::quantize(const ExteriorElement &x) const {
  if (x.space()->dim() != 7 || x.dual())
    throw ShapeMismatch("quantize expects an element of Lambda(Im)");
  CliffordElement r;
  for (const auto &[m, c] : x.terms())
    r.add(m, c);
  return r;
}

ExteriorElement CliffordAlgebra::dequantize(const CliffordElement &c, int degree) const {
  ExteriorElement x(oct_.im_space(), degree);
  for (const auto &[s, v] : c.terms())
    if (degree_of(s) == degree)
      x.set(s, v);
  return x;
}

Matrix CliffordAlgebra::spinor_action(const CliffordElement &c) const {
  Matrix m(8, 8);
  for (const auto &[s, x] : c.terms())
    m += x * rho_[s];
  return m;
}

CliffordElement CliffordAlgebra::c_of(const Vector &u) const {
  return super_bracket(CliffordElement::from_vector(u), omega_);
}

std::vector<CliffordElement> CliffordAlgebra::w_subspace() const {
  std::vector<CliffordElement> out;
  for (std::size_t i = 0; i < 7; ++i)
    out.push_back(c_of(unit_vector(7, i)));
  return out;
}

const std::vector<Mask> &CliffordAlgebra::degree_two() { return multi_indices(7, 2); }

std::vector<CliffordElement> CliffordAlgebra::g2_kernel() const {
  const auto &c2 = degree_two();
  Matrix m(8, c2.size());
  for (std::size_t a = 0; a < c2.size(); ++a)
    for (std::size_t k = 0; k < 8; ++k)
      m(k, a) = rho_[c2[a]](k, 0);
  const auto ns = nullspace(m);
  if (ns.size() != 14)
    throw WrongDimension("kernel of x -> rho(x)(1) on C^2 has dimension " + std::to_string(ns.size()));
  std::vector<CliffordElement> out;
  for (const auto &v : ns) {
    CliffordElement x;
    for (std::size_t a = 0; a < c2.size(); ++a)
      x.add(c2[a], v[a]);
    out.push_back(std::move(x));
  }
  return out;
}

} // namespace exlsa
