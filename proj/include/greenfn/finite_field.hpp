#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace greenfn {

/// GF(p^k) for orders up to 1024, elements encoded as 0..order-1 (base-p digits
/// of the coefficients in a polynomial basis). 0 and 1 are the field's 0 and 1.
class FiniteField {
 public:
  explicit FiniteField(int order);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add_[idx(a, neg_[static_cast<std::size_t>(b)])]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long e) const;
  /// Image of the integer c under Z -> GF(p).
  int from_int(long c) const;
  /// Smallest generator of the multiplicative group.
  int primitive_element() const { return primitive_; }
  /// Exponent e with primitive_element()^e = a, a nonzero.
  int log(int a) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b); }
  int q_;
  int p_;
  int k_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
  std::vector<int> log_;
  int primitive_ = 1;
};

using FVec = std::vector<int>;
using FMat = std::vector<FVec>;

/// Row-reduced echelon basis of the span of the given vectors.
FMat rref(const FiniteField& F, FMat rows);
/// Pivot column of each row of an rref basis.
std::vector<int> pivots(const FMat& basis);
bool in_span(const FiniteField& F, const FMat& rref_basis, FVec v);
/// Basis of {v : A v = 0}.
FMat nullspace(const FiniteField& F, const FMat& A);
FVec mat_vec(const FiniteField& F, const FMat& A, const FVec& v);
FMat mat_mul(const FiniteField& F, const FMat& A, const FMat& B);
int determinant(const FiniteField& F, FMat A);
/// Solves A x = b; returns false if inconsistent.
bool solve_linear(const FiniteField& F, const FMat& A, const FVec& b, FVec& x);
std::string subspace_key(const FMat& rref_basis);

}  // namespace greenfn
