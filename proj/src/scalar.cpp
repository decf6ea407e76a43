#include "exlsa/scalar.hpp"

#include <cctype>

#include "exlsa/errors.hpp"

namespace exlsa {

Scalar::Scalar(long long n, long long d) : num_(n), den_(d) { canonicalize(); }

Scalar::Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

Scalar Scalar::variable(Var v) { return Scalar(Raw{}, Polynomial::variable(v), Polynomial(1)); }

void Scalar::canonicalize() {
  if (den_.is_zero())
    throw DivisionByZero("zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_one()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  if (den_.leading().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::operator-() const { return Scalar(Raw{}, -num_, den_); }

Scalar &Scalar::operator+=(const Scalar &o) {
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero())
      den_ = Polynomial(1);
    else if (!den_.is_one())
      canonicalize();
    return *this;
  }
  const Polynomial g = gcd(den_, o.den_);
  const Polynomial a = den_.divide_exact(g);
  const Polynomial b = o.den_.divide_exact(g);
  Polynomial n = num_ * b + o.num_ * a;
  if (n.is_zero())
    return *this = Scalar();
  Polynomial d = den_ * b;
  const Polynomial h = gcd(n, g);
  if (!h.is_one()) {
    n = n.divide_exact(h);
    d = d.divide_exact(h);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  if (den_.leading().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) { return *this += -o; }

Scalar &Scalar::operator*=(const Scalar &o) {
  if (is_zero())
    return *this;
  if (o.is_zero())
    return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  const Polynomial g1 = gcd(num_, o.den_);
  const Polynomial g2 = gcd(o.num_, den_);
  Polynomial n = num_.divide_exact(g1) * o.num_.divide_exact(g2);
  Polynomial d = den_.divide_exact(g2) * o.den_.divide_exact(g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (den_.leading().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw DivisionByZero("inverse of zero");
  Scalar r(Raw{}, den_, num_);
  if (r.den_.leading().coeff < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (o.is_zero())
    throw DivisionByZero("division by zero");
  return *this *= o.inverse();
}

Scalar Scalar::pow(int e) const {
  if (e < 0)
    return inverse().pow(-e);
  Scalar r(1);
  for (int i = 0; i < e; ++i)
    r *= *this;
  return r;
}

std::string Scalar::to_string() const {
  if (den_.is_one())
    return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1)
    n = "(" + n + ")";
  std::string d = den_.to_string();
  bool plain = den_.is_constant();
  if (den_.is_monomial() && den_.leading().coeff == 1 && den_.leading().mono.total_degree() == 1)
    plain = true;
  if (!plain)
    d = "(" + d + ")";
  return n + "/" + d;
}

Scalar arith(const Scalar &a, const Scalar &b, ArithOp op) {
  switch (op) {
  case ArithOp::add:
    return a + b;
  case ArithOp::sub:
    return a - b;
  case ArithOp::mul:
    return a * b;
  case ArithOp::div:
    return a / b;
  }
  return {};
}

namespace {

Scalar substitute_poly(const Polynomial &p, const Bindings &bindings) {
  Scalar out;
  for (const auto &t : p.terms()) {
    Scalar term(t.coeff);
    for (int v = 0; v < kNumVars; ++v) {
      const int e = t.mono.exponent(v);
      if (e == 0)
        continue;
      auto it = bindings.find(static_cast<Var>(v));
      term *= (it != bindings.end() ? it->second : Scalar::variable(static_cast<Var>(v))).pow(e);
    }
    out += term;
  }
  return out;
}

} // namespace

Scalar substitute(const Scalar &a, const Bindings &bindings) {
  const Scalar d = substitute_poly(a.denominator(), bindings);
  if (d.is_zero()) {
    std::string what;
    for (const auto &[v, value] : bindings) {
      if (!what.empty())
        what += ", ";
      what += std::string(kVarNames[static_cast<std::size_t>(v)]) + "=" + value.to_string();
    }
    throw DenominatorVanishes("denominator " + a.denominator().to_string() + " vanishes at " + what);
  }
  return substitute_poly(a.numerator(), bindings) / d;
}

std::optional<Var> parse_var(std::string_view name) {
  for (int v = 0; v < kNumVars; ++v)
    if (name == kVarNames[static_cast<std::size_t>(v)])
      return static_cast<Var>(v);
  return std::nullopt;
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar run() {
    Scalar r = expr();
    skip();
    if (pos_ != s_.size())
      fail("unexpected trailing input");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string &why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  // Accepts ASCII '-' and U+2212 MINUS SIGN.
  bool eat_minus() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar r = term();
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat_minus())
        r -= term();
      else
        return r;
    }
  }

  Scalar term() {
    Scalar r = factor();
    for (;;) {
      if (eat('*')) {
        r *= factor();
      } else if (eat('/')) {
        Scalar d = factor();
        if (d.is_zero())
          throw DivisionByZero("division by zero in '" + std::string(s_) + "'");
        r /= d;
      } else {
        return r;
      }
    }
  }

  Scalar factor() {
    if (eat_minus())
      return -factor();
    Scalar base = primary();
    if (eat('^')) {
      bool neg = eat_minus();
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (start == pos_)
        fail("expected exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  Scalar primary() {
    skip();
    if (eat('(')) {
      Scalar r = expr();
      if (!eat(')'))
        fail("expected ')'");
      return r;
    }
    const std::size_t start = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return Scalar(BigInt(std::string(s_.substr(start, pos_ - start))));
    }
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a number, variable or '('");
    auto v = parse_var(s_.substr(start, pos_ - start));
    if (!v)
      fail("unknown variable '" + std::string(s_.substr(start, pos_ - start)) + "'");
    return Scalar::variable(*v);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).run(); }

} // namespace exlsa
