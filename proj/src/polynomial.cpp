#include "exlsa/polynomial.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

namespace exlsa {

namespace {

BigInt abs_int(const BigInt &x) { return x < 0 ? BigInt(-x) : x; }

BigInt int_gcd(const BigInt &a, const BigInt &b) {
  return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

bool descending(const Term &x, const Term &y) { return x.mono > y.mono; }

} // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_exponents(const std::array<int, kNumVars> &e) {
  std::uint64_t bits = 0;
  std::uint64_t total = 0;
  for (int v = 0; v < kNumVars; ++v) {
    if (e[v] < 0 || e[v] > kMaxExponent)
      throw std::overflow_error("monomial exponent out of range");
    bits |= static_cast<std::uint64_t>(e[v]) << shift(static_cast<Var>(v));
    total += static_cast<std::uint64_t>(e[v]);
  }
  return Monomial(bits | (total << 48));
}

Monomial Monomial::variable(Var v, int power) {
  std::array<int, kNumVars> e{};
  e[static_cast<int>(v)] = power;
  return from_exponents(e);
}

Monomial Monomial::operator*(const Monomial &o) const {
  std::array<int, kNumVars> e{};
  for (int v = 0; v < kNumVars; ++v)
    e[v] = exponent(v) + o.exponent(v);
  return from_exponents(e);
}

bool Monomial::divides(const Monomial &o) const {
  for (int v = 0; v < kNumVars; ++v)
    if (exponent(v) > o.exponent(v))
      return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial &o) const {
  std::array<int, kNumVars> e{};
  for (int v = 0; v < kNumVars; ++v)
    e[v] = o.exponent(v) - exponent(v);
  return from_exponents(e);
}

Monomial Monomial::with_exponent(Var var, int p) const {
  std::array<int, kNumVars> e{};
  for (int v = 0; v < kNumVars; ++v)
    e[v] = exponent(v);
  e[static_cast<int>(var)] = p;
  return from_exponents(e);
}

Monomial Monomial::gcd(const Monomial &x, const Monomial &y) {
  std::array<int, kNumVars> e{};
  for (int v = 0; v < kNumVars; ++v)
    e[v] = std::min(x.exponent(v), y.exponent(v));
  return from_exponents(e);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long long c) {
  if (c != 0)
    terms_.push_back({Monomial{}, BigInt(c)});
}

Polynomial::Polynomial(const BigInt &c) {
  if (c != 0)
    terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(Var v) { return term(1, Monomial::variable(v)); }

Polynomial Polynomial::term(const BigInt &c, Monomial m) {
  Polynomial p;
  if (c != 0)
    p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), descending);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Term acc = std::move(terms_[i]);
    std::size_t j = i + 1;
    while (j < terms_.size() && terms_[j].mono == acc.mono) {
      acc.coeff += terms_[j].coeff;
      ++j;
    }
    if (acc.coeff != 0)
      terms_[out++] = std::move(acc);
    i = j;
  }
  terms_.resize(out);
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

BigInt Polynomial::constant_value() const {
  if (terms_.empty())
    return 0;
  if (!is_constant())
    throw std::logic_error("constant_value of a nonconstant polynomial");
  return terms_[0].coeff;
}

int Polynomial::degree_in(Var v) const {
  int d = 0;
  for (const auto &t : terms_)
    d = std::max(d, t.mono.exponent(v));
  return d;
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> groups(static_cast<std::size_t>(degree_in(v)) + 1);
  for (const auto &t : terms_)
    groups[static_cast<std::size_t>(t.mono.exponent(v))].push_back({t.mono.with_exponent(v, 0), t.coeff});
  std::vector<Polynomial> out;
  out.reserve(groups.size());
  for (auto &g : groups)
    out.push_back(from_terms(std::move(g)));
  return out;
}

Polynomial Polynomial::from_coefficients_in(Var v, const std::vector<Polynomial> &coeffs) {
  std::vector<Term> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    for (const auto &t : coeffs[d].terms_)
      terms.push_back({t.mono.with_exponent(v, static_cast<int>(d)), t.coeff});
  return from_terms(std::move(terms));
}

BigInt Polynomial::content() const {
  BigInt g = 0;
  for (const auto &t : terms_) {
    g = int_gcd(g, t.coeff);
    if (g == 1)
      break;
  }
  return g;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty())
    return Monomial{};
  Monomial g = terms_[0].mono;
  for (const auto &t : terms_)
    g = Monomial::gcd(g, t.mono);
  return g;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto &t : p.terms_)
    t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<Term> merge(const std::vector<Term> &a, const std::vector<Term> &b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, subtract ? BigInt(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      BigInt c = subtract ? BigInt(a[i].coeff - b[j].coeff) : BigInt(a[i].coeff + b[j].coeff);
      if (c != 0)
        out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  if (o.terms_.empty())
    return *this;
  if (terms_.empty())
    return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  if (o.terms_.empty())
    return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  if (b.terms_.size() == 1)
    return a.times(b.terms_[0].coeff, b.terms_[0].mono);
  if (a.terms_.size() == 1)
    return b.times(a.terms_[0].coeff, a.terms_[0].mono);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto &x : a.terms_)
    for (const auto &y : b.terms_)
      terms.push_back({x.mono * y.mono, x.coeff * y.coeff});
  return Polynomial::from_terms(std::move(terms));
}

Polynomial Polynomial::scaled(const BigInt &c) const {
  if (c == 0)
    return {};
  Polynomial p = *this;
  for (auto &t : p.terms_)
    t.coeff *= c;
  return p;
}

Polynomial Polynomial::times(const BigInt &c, Monomial m) const {
  if (c == 0)
    return {};
  Polynomial p = *this;
  for (auto &t : p.terms_) {
    t.coeff *= c;
    t.mono = t.mono * m;
  }
  return p; // multiplication by a monomial preserves the order
}

Polynomial Polynomial::divided_by(const BigInt &c) const {
  if (c == 1)
    return *this;
  Polynomial p = *this;
  for (auto &t : p.terms_) {
    BigInt q, r;
    boost::multiprecision::divide_qr(t.coeff, c, q, r);
    if (r != 0)
      throw std::logic_error("inexact integer division of a polynomial");
    t.coeff = std::move(q);
  }
  return p;
}

Polynomial Polynomial::divided_by(Monomial m) const {
  if (m.is_one())
    return *this;
  Polynomial p = *this;
  for (auto &t : p.terms_) {
    if (!m.divides(t.mono))
      throw std::logic_error("inexact monomial division of a polynomial");
    t.mono = m.quotient_of(t.mono);
  }
  return p;
}

Polynomial Polynomial::divide_exact(const Polynomial &d) const {
  if (d.is_zero())
    throw std::domain_error("polynomial division by zero");
  if (is_zero())
    return {};
  if (d.terms_.size() == 1) {
    Polynomial p = divided_by(d.terms_[0].mono);
    return p.divided_by(d.terms_[0].coeff);
  }
  const Term &lead = d.terms_[0];
  Polynomial rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term &lt = rem.terms_[0];
    if (!lead.mono.divides(lt.mono))
      throw std::logic_error("inexact polynomial division");
    BigInt q, r;
    boost::multiprecision::divide_qr(lt.coeff, lead.coeff, q, r);
    if (r != 0)
      throw std::logic_error("inexact polynomial division");
    Monomial m = lead.mono.quotient_of(lt.mono);
    rem -= d.times(q, m);
    quotient.push_back({m, std::move(q)});
  }
  Polynomial out;
  out.terms_ = std::move(quotient);
  return out;
}

bool Polynomial::operator==(const Polynomial &o) const {
  if (terms_.size() != o.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term &t = terms_[i];
    BigInt c = t.coeff;
    if (i == 0) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0)
        c = -c;
    }
    std::string vars;
    for (int v = 0; v < kNumVars; ++v) {
      int e = t.mono.exponent(v);
      if (e == 0)
        continue;
      if (!vars.empty())
        vars += "*";
      vars += kVarNames[static_cast<std::size_t>(v)];
      if (e > 1)
        vars += "^" + std::to_string(e);
    }
    if (vars.empty())
      out += c.str();
    else if (c == 1)
      out += vars;
    else
      out += c.str() + "*" + vars;
  }
  return out;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

Polynomial with_positive_lead(Polynomial p) {
  if (!p.is_zero() && p.leading().coeff < 0)
    return -p;
  return p;
}

Polynomial gcd_primitive(Polynomial a, Polynomial b);

Polynomial content_in(const Polynomial &p, Var x) {
  Polynomial g;
  for (const auto &c : p.coefficients_in(x)) {
    if (c.is_zero())
      continue;
    g = gcd(g, c);
    if (g.is_one())
      break;
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial &p, Var x) {
  Polynomial q = p.divided_by(p.content());
  return with_positive_lead(q.divide_exact(content_in(q, x)));
}

Polynomial pseudo_remainder(const Polynomial &a, const Polynomial &b, Var x) {
  const int db = b.degree_in(x);
  const Polynomial lcb = b.coefficients_in(x)[static_cast<std::size_t>(db)];
  Polynomial r = a;
  while (!r.is_zero()) {
    const int dr = r.degree_in(x);
    if (dr < db)
      break;
    Polynomial lcr = r.coefficients_in(x)[static_cast<std::size_t>(dr)];
    Polynomial shift = lcr * Polynomial::term(1, Monomial::variable(x, dr - db));
    r = lcb * r - shift * b;
  }
  return r;
}

// Primitive PRS in x for a, b primitive in x.
Polynomial prs_gcd(Polynomial pa, Polynomial pb, Var x) {
  if (pa.degree_in(x) < pb.degree_in(x))
    std::swap(pa, pb);
  for (;;) {
    Polynomial r = pseudo_remainder(pa, pb, x);
    if (r.is_zero())
      return primitive_part_in(pb, x);
    if (r.degree_in(x) == 0)
      return 1;
    pa = std::move(pb);
    pb = primitive_part_in(r, x);
  }
}

std::optional<Polynomial> try_divide(const Polynomial &a, const Polynomial &d) {
  for (int v = 0; v < kNumVars; ++v)
    if (d.degree_in(static_cast<Var>(v)) > a.degree_in(static_cast<Var>(v)))
      return std::nullopt;
  try {
    return a.divide_exact(d);
  } catch (const std::logic_error &) {
    return std::nullopt;
  }
}

// Evaluates every variable except x at the given integers.
Polynomial specialize(const Polynomial &p, Var x, const std::array<long long, kNumVars> &point) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto &t : p.terms()) {
    BigInt c = t.coeff;
    for (int v = 0; v < kNumVars; ++v) {
      if (v == static_cast<int>(x))
        continue;
      const int e = t.mono.exponent(v);
      if (e > 0)
        c *= boost::multiprecision::pow(BigInt(point[static_cast<std::size_t>(v)]), static_cast<unsigned>(e));
    }
    terms.push_back({Monomial::variable(x, t.mono.exponent(x)), std::move(c)});
  }
  return Polynomial::from_terms(std::move(terms));
}

// Sound coprimality certificate: if for every variable x some specialization
// of the other variables keeps both x-degrees and leaves a univariate gcd of
// degree 0, the gcd has degree 0 in every variable.
bool certainly_coprime(const Polynomial &a, const Polynomial &b) {
  static constexpr std::array<std::array<long long, kNumVars>, 3> kPoints = {
      {{{3, 5, 7, 11}}, {{-2, 13, 4, -9}}, {{17, -6, 23, 8}}}};
  for (int v = 0; v < kNumVars; ++v) {
    const Var x = static_cast<Var>(v);
    const int da = a.degree_in(x), db = b.degree_in(x);
    if (da == 0 || db == 0)
      continue;
    bool certified = false;
    for (const auto &pt : kPoints) {
      const Polynomial sa = specialize(a, x, pt), sb = specialize(b, x, pt);
      if (sa.degree_in(x) != da || sb.degree_in(x) != db)
        continue;
      const Polynomial ua = sa.divided_by(sa.content()), ub = sb.divided_by(sb.content());
      if (prs_gcd(ua, ub, x).is_constant()) {
        certified = true;
        break;
      }
    }
    if (!certified)
      return false;
  }
  return true;
}

std::optional<Var> sole_variable(const Polynomial &p) {
  std::optional<Var> found;
  for (int v = 0; v < kNumVars; ++v)
    if (p.contains(static_cast<Var>(v))) {
      if (found)
        return std::nullopt;
      found = static_cast<Var>(v);
    }
  return found;
}

// a, b nonzero with integer content 1.
Polynomial gcd_primitive(Polynomial a, Polynomial b) {
  if (a.is_constant() || b.is_constant())
    return 1;
  a = with_positive_lead(std::move(a));
  b = with_positive_lead(std::move(b));
  if (a == b)
    return a;
  const Monomial mg = Monomial::gcd(a.monomial_content(), b.monomial_content());
  a = a.divided_by(a.monomial_content());
  b = b.divided_by(b.monomial_content());
  const Polynomial mono = Polynomial::term(1, mg);
  if (a.is_constant() || b.is_constant())
    return mono;

  // A variable present in only one side cannot occur in the gcd.
  for (int v = 0; v < kNumVars; ++v) {
    const Var x = static_cast<Var>(v);
    const bool in_a = a.contains(x), in_b = b.contains(x);
    if (in_a && !in_b)
      return mono * gcd_primitive(content_in(a, x), b);
    if (in_b && !in_a)
      return mono * gcd_primitive(a, content_in(b, x));
  }
  if (a.size() <= b.size()) {
    if (try_divide(b, a))
      return mono * a;
  } else if (try_divide(a, b)) {
    return mono * b;
  }
  if (auto x = sole_variable(a); x && sole_variable(b) == x)
    return mono * with_positive_lead(prs_gcd(a, b, *x));
  if (certainly_coprime(a, b))
    return mono;

  // Recursive primitive PRS in the variable of smallest degree.
  Var x = Var::l1;
  int best = -1;
  for (int v = 0; v < kNumVars; ++v) {
    const int d = std::max(a.degree_in(static_cast<Var>(v)), b.degree_in(static_cast<Var>(v)));
    if (d > 0 && (best < 0 || d < best)) {
      best = d;
      x = static_cast<Var>(v);
    }
  }
  const Polynomial ca = content_in(a, x), cb = content_in(b, x);
  const Polynomial gc = gcd_primitive(ca, cb);
  const Polynomial g = prs_gcd(a.divide_exact(ca), b.divide_exact(cb), x);
  return with_positive_lead(mono * gc * g);
}

} // namespace

Polynomial gcd(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero())
    return with_positive_lead(b);
  if (b.is_zero())
    return with_positive_lead(a);
  const BigInt ca = a.content(), cb = b.content();
  const BigInt g = int_gcd(ca, cb);
  if (a.is_constant() || b.is_constant())
    return Polynomial(g);
  return gcd_primitive(a.divided_by(ca), b.divided_by(cb)).scaled(g);
}

} // namespace exlsa
