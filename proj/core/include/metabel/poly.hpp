#pragma once

// Dense univariate polynomials with exact rational coefficients.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace metabel {

using Integer = mpz_class;
using Rational = mpq_class;

class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  /// Coefficients lowest degree first; trailing zeros are stripped.
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  /// The polynomial `x` (or `t`, depending on context).
  static Poly variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const;

  /// Coefficient of x^i; zero outside the stored range.
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Poly monic() const;
  Poly derivative() const;
  Rational eval(const Rational& x) const;
  /// Multiply by x^k, k >= 0.
  Poly shifted(int k) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Poly& p) { return p.is_zero(); }

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error when b is zero.
DivRem divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Quotient a/b; throws std::domain_error if b does not divide a exactly.
Poly exact_quotient(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& p);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct Bezout {
  Poly gcd;  // monic
  Poly s;
  Poly t;    // s*a + t*b = gcd
};
Bezout extended_gcd(const Poly& a, const Poly& b);

Poly pow(const Poly& base, unsigned exponent);

/// Largest e with d^e | p, for nonconstant d and nonzero p.
int multiplicity(const Poly& d, const Poly& p);

enum class TermOrder { ascending, descending };

/// ASCII rendering, e.g. "1 - t + t^2" or "t^2 - t + 1".
std::string to_string(const Poly& p, std::string_view var = "t",
                      TermOrder order = TermOrder::ascending);

/// Inverse of to_string for either term order: sums of terms `c`, `c*v`, `c*v^k`,
/// `v^k` with optional rational coefficients like 3/2.
Poly parse_poly(std::string_view text, std::string_view var = "t");

}  // namespace metabel
