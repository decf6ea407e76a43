#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "exlsa/polynomial.hpp"

namespace exlsa {

/// An element of Q(l1, l2, l3, a) in canonical form: numerator and
/// denominator are coprime in Z[l1,l2,l3,a] and the denominator has a
/// positive leading coefficient in graded-lex order. Canonical form makes
/// structural equality coincide with field equality.
class Scalar {
public:
  Scalar() : den_(1) {}
  Scalar(long long n) : num_(n), den_(1) {} // NOLINT
  Scalar(const BigInt &n) : num_(n), den_(1) {} // NOLINT
  Scalar(long long n, long long d);
  /// Canonicalizes num/den; throws DivisionByZero if den == 0.
  Scalar(Polynomial num, Polynomial den);
  static Scalar variable(Var v);

  const Polynomial &numerator() const { return num_; }
  const Polynomial &denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value lies in Q (no variables).
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  bool depends_on(Var v) const { return num_.contains(v) || den_.contains(v); }

  Scalar operator-() const;
  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator/=(const Scalar &o);
  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
  Scalar inverse() const;
  Scalar pow(int e) const;

  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Canonical text in the grammar accepted by parse().
  std::string to_string() const;
  friend std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

private:
  struct Raw {};
  Scalar(Raw, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

enum class ArithOp { add, sub, mul, div };

/// Exact field operation.
Scalar arith(const Scalar &a, const Scalar &b, ArithOp op);
inline bool is_zero(const Scalar &a) { return a.is_zero(); }

/// Rational bindings for some of the variables.
using Bindings = std::map<Var, Scalar>;

/// Specializes variables to rational values; throws DenominatorVanishes when
/// the specialization makes the denominator zero.
Scalar substitute(const Scalar &a, const Bindings &bindings);

/// Parses integers, variables l1 l2 l3 a, + - * / ^ and parentheses.
Scalar parse_scalar(std::string_view text);

/// Parses a variable name ("l1", "l2", "l3", "a").
std::optional<Var> parse_var(std::string_view name);

} // namespace exlsa
