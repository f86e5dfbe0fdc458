#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace greenfn {

/// Laurent polynomial in q with rational coefficients.
///
/// Stored as a lowest exponent plus a dense coefficient vector whose first and
/// last entries are nonzero. The zero polynomial has an empty vector.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpq_class& c, int exponent = 0);
  static LaurentPoly monomial(int exponent, const mpq_class& c = 1);
  static LaurentPoly from_coeffs(int low, std::vector<mpq_class> coeffs);

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  int degree() const { return high(); }
  mpq_class coeff(int e) const;
  const mpq_class& leading() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_polynomial() const { return is_zero() || low_ >= 0; }
  bool has_integer_coeffs() const;
  bool is_constant() const { return is_zero() || (low_ == 0 && c_.size() == 1); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpq_class& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly shifted(int k) const;
  LaurentPoly substitute_neg_q() const;
  mpq_class evaluate(const mpq_class& q0) const;

  /// Terms "c*q^e" joined by " + " in decreasing exponent order; "0" if zero.
  std::string to_string() const;
  static LaurentPoly parse(const std::string& text);

 private:
  void trim();
  int low_ = 0;
  std::vector<mpq_class> c_;
};

/// Quotient and remainder of ordinary polynomials (both must have low() >= 0).
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd of ordinary polynomials; zero only if both are zero.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

/// Rational function in q over Q in canonical reduced form.
///
/// The denominator is a monic ordinary polynomial with nonzero constant term;
/// every power of q lives in the numerator, which may be Laurent.
class RatQ {
 public:
  RatQ() = default;
  RatQ(long c);  // NOLINT(google-explicit-constructor)
  RatQ(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  RatQ(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  RatQ(const LaurentPoly& num, const LaurentPoly& den);
  static RatQ q(int exponent = 1) { return RatQ(LaurentPoly::monomial(exponent)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_constant(); }
  bool is_polynomial() const { return is_laurent() && num_.is_polynomial(); }
  bool is_integral_polynomial() const { return is_polynomial() && num_.has_integer_coeffs(); }
  /// Numerator when the denominator is 1; throws otherwise.
  const LaurentPoly& as_laurent() const;

  RatQ operator-() const;
  RatQ& operator+=(const RatQ& o);
  RatQ& operator-=(const RatQ& o);
  RatQ& operator*=(const RatQ& o);
  RatQ& operator/=(const RatQ& o);
  friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
  friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
  friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
  friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }
  friend bool operator==(const RatQ& a, const RatQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatQ& a, const RatQ& b) { return !(a == b); }

  RatQ substitute_neg_q() const;
  mpq_class evaluate(const mpq_class& q0) const;

  /// "(num)/(den)" with both parts rendered by LaurentPoly::to_string.
  std::string to_string() const;
  /// Accepts the to_string form or a bare Laurent polynomial.
  static RatQ parse(const std::string& text);

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

enum class ArithOp { Add, Sub, Mul, Div };
RatQ arith(const RatQ& a, const RatQ& b, ArithOp op);

}  // namespace greenfn
