#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "greenfn/qpoly.hpp"

namespace greenfn {

/// Integer coefficients of the N-th cyclotomic polynomial, ascending degree.
const std::vector<long>& cyclotomic_polynomial(int N);
int euler_phi(int N);

/// Element of Q(z), z = exp(2*pi*i/N), in the power basis 1, z, ..., z^(phi(N)-1).
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int N, const mpq_class& c = 0);
  /// z^k in Q(zeta_N).
  static Cyclotomic root_of_unity(int N, long k);

  int order() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  const mpq_class& rational_part() const { return c_[0]; }

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Field automorphism z -> z^t, t a unit mod N.
  Cyclotomic galois(long t) const;

  /// "c0+c1*z+c2*z^2" with zero terms omitted; "0" for zero.
  std::string to_string() const;

 private:
  friend class CycloPoly;
  static std::vector<mpq_class> reduce(int N, std::vector<mpq_class> raw);
  int n_;
  std::vector<mpq_class> c_;
};

/// Laurent polynomial in q with coefficients in Q(zeta_N), stored per basis power.
class CycloPoly {
 public:
  CycloPoly() : CycloPoly(1) {}
  explicit CycloPoly(int N);
  CycloPoly(int N, const LaurentPoly& rational);
  CycloPoly(const Cyclotomic& c, const LaurentPoly& p);

  int order() const { return n_; }
  const std::vector<LaurentPoly>& parts() const { return parts_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Component along z^0; the whole value when is_rational().
  const LaurentPoly& rational_part() const { return parts_[0]; }

  CycloPoly& operator+=(const CycloPoly& o);
  CycloPoly& operator-=(const CycloPoly& o);
  friend CycloPoly operator+(CycloPoly a, const CycloPoly& b) { return a += b; }
  friend CycloPoly operator-(CycloPoly a, const CycloPoly& b) { return a -= b; }
  friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b);
  friend CycloPoly operator*(const CycloPoly& a, const LaurentPoly& p);
  friend bool operator==(const CycloPoly& a, const CycloPoly& b) { return a.n_ == b.n_ && a.parts_ == b.parts_; }
  friend bool operator!=(const CycloPoly& a, const CycloPoly& b) { return !(a == b); }

  CycloPoly substitute_neg_q() const;
  CycloPoly galois(long t) const;
  Cyclotomic coefficient(int e) const;
  Cyclotomic evaluate(const mpq_class& q0) const;
  int low() const;
  int high() const;

  /// RatQ-style "(terms)/(1*q^0)" where each term is "c*q^e" and c is a
  /// rational or a parenthesized cyclotomic coefficient.
  std::string to_string() const;

 private:
  int n_;
  std::vector<LaurentPoly> parts_;
};

}  // namespace greenfn
