#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace exlsa {

using BigInt = boost::multiprecision::cpp_int;

/// The fixed variable set of every scalar in the library.
enum class Var : std::uint8_t { l1 = 0, l2 = 1, l3 = 2, a = 3 };

inline constexpr int kNumVars = 4;
inline constexpr std::array<const char *, kNumVars> kVarNames = {"l1", "l2", "l3", "a"};

/// A monomial l1^i l2^j l3^k a^m packed so that integer comparison is the
/// graded-lexicographic order (total degree first, then l1 > l2 > l3 > a).
/// Layout: total degree in the top 16 bits, then 12 bits per exponent.
class Monomial {
public:
  constexpr Monomial() = default;
  static Monomial from_exponents(const std::array<int, kNumVars> &e);
  static Monomial variable(Var v, int power = 1);

  static constexpr int kMaxExponent = 0xFFF;

  int exponent(Var v) const { return static_cast<int>((bits_ >> shift(v)) & 0xFFF); }
  int exponent(int v) const { return exponent(static_cast<Var>(v)); }
  int total_degree() const { return static_cast<int>(bits_ >> 48); }
  bool is_one() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  Monomial operator*(const Monomial &o) const;
  bool divides(const Monomial &o) const;
  /// o / *this, precondition divides(o).
  Monomial quotient_of(const Monomial &o) const;
  Monomial with_exponent(Var v, int e) const;
  static Monomial gcd(const Monomial &x, const Monomial &y);

  auto operator<=>(const Monomial &) const = default;

private:
  explicit constexpr Monomial(std::uint64_t b) : bits_(b) {}
  static constexpr int shift(Var v) { return 12 * (3 - static_cast<int>(v)); }
  std::uint64_t bits_ = 0;
};

struct Term {
  Monomial mono;
  BigInt coeff;
};

/// Sparse multivariate polynomial over the integers, terms kept in strictly
/// decreasing graded-lex order with nonzero coefficients.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(long long c); // NOLINT: integer literals promote naturally
  explicit Polynomial(const BigInt &c);
  static Polynomial variable(Var v);
  static Polynomial term(const BigInt &c, Monomial m);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term> &terms() const { return terms_; }
  const Term &leading() const { return terms_.front(); }
  /// Constant coefficient value; precondition is_constant().
  BigInt constant_value() const;

  int degree_in(Var v) const;
  bool contains(Var v) const { return degree_in(v) > 0; }
  /// Coefficients as polynomials in the remaining variables, index = power of v.
  std::vector<Polynomial> coefficients_in(Var v) const;
  static Polynomial from_coefficients_in(Var v, const std::vector<Polynomial> &coeffs);

  /// Positive gcd of the integer coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// gcd of all monomials.
  Monomial monomial_content() const;

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  Polynomial scaled(const BigInt &c) const;
  Polynomial times(const BigInt &c, Monomial m) const;
  /// Exact division by an integer dividing every coefficient.
  Polynomial divided_by(const BigInt &c) const;
  /// Exact division by a monomial dividing every term.
  Polynomial divided_by(Monomial m) const;
  /// Exact polynomial division; throws std::logic_error if inexact.
  Polynomial divide_exact(const Polynomial &d) const;

  bool operator==(const Polynomial &o) const;

  /// Canonical text, e.g. "3*l1^2*l2 - a + 1"; "0" for the zero polynomial.
  std::string to_string() const;

private:
  void normalize();
  std::vector<Term> terms_;
};

/// Greatest common divisor in Z[l1,l2,l3,a], normalized to a positive leading
/// coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial &a, const Polynomial &b);

} // namespace exlsa
