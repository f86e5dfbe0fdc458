#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greenfn/cyclotomic.hpp"
#include "greenfn/partition.hpp"
#include "greenfn/qpoly.hpp"
#include "greenfn/reductive.hpp"

namespace greenfn {

/// Largest number of vectors any single oracle enumeration step may visit.
inline constexpr long kEnumerationLimit = 1L << 23;

/// Matrix of the nilpotent x with x v_{k,j} = v_{k,j-1} in the basis
/// v_{1,1}, ..., v_{1,lambda_1}, v_{2,1}, ... (row i, column j).
std::vector<std::vector<int>> jordan_nilpotent(const Partition& lambda);

/// Number of chains 0 = V_0 < V_d < ... < V_n = F_q^n stable under the Jordan
/// matrix of type lambda with regular unipotent action on every V_{kd}/V_{(k-1)d}.
long count_flags(int n, int q, const Partition& lambda, int d);

struct Interpolation {
  LaurentPoly poly;
  int degree = 0;
  bool integral = true;
  bool nonnegative = true;
  std::optional<int> expected_degree;
  bool degree_matches = true;
  std::vector<std::string> diagnostics;
  bool paving_ok() const { return integral && nonnegative && degree_matches; }
};

/// Lagrange interpolation through (q, value) points; with an expected degree
/// at least expected + 1 points are required.
Interpolation interpolate_counts(const std::vector<std::pair<long, mpq_class>>& counts,
                                 std::optional<int> expected_degree = std::nullopt);

/// |Z_{GL_n(F_q)}(u_lambda)| by testing every n x n matrix.
long brute_centralizer(int n, int q, const Partition& lambda);
/// |GL_n(F_q)| or |SL_n(F_q)| by testing every n x n matrix.
long brute_group_order(GroupKind kind, int n, int q);

/// chi^mu(rho) from the action of S_m on the span of standard polytabloids.
long brute_symmetric_character(const Partition& mu, const Partition& rho);

struct CLambdaInput {
  int n = 0;
  int q = 0;
  Partition lambda;
  int d = 1;
  FrobeniusKind frobenius = FrobeniusKind::NonSplit;
  int xi_exponent = 1;
  /// Signs a_k of the hermitian form, one per part; empty means all +1.
  std::vector<int> form_signs;
  bool histogram = false;
};

struct CLambdaResult {
  /// Class of c_lambda in A_L(u_0) = Z_d, as the exponent y of zeta_d.
  int c_residue = 0;
  int nu_exponent = 0;
  Cyclotomic nu;
  bool standard_flag = true;
  /// The forms have different determinants and the similitude normalization
  /// mu_0 does not pin the class.
  bool normalization_ambiguous = false;
  long points_examined = 0;
  /// F-stable points of P_u by class exponent, when requested.
  std::map<int, long> histogram;
};

CLambdaResult compute_c_lambda(const CLambdaInput& input);

}  // namespace greenfn
