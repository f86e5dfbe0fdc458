#include "greenfn/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "greenfn/errors.hpp"
#include "greenfn/finite_field.hpp"
#include "greenfn/symgroup.hpp"

namespace greenfn {

namespace {

long checked_power(long base, int exp, const std::string& what) {
  long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > kEnumerationLimit) {
      throw ValidationError(what + ": enumeration of " + std::to_string(base) + "^" + std::to_string(exp) +
                            " vectors exceeds the limit " + std::to_string(kEnumerationLimit));
    }
  }
  return r;
}

void check_divisible(const Partition& lambda, int n, int d) {
  if (lambda.size() != n) throw ValidationError("partition " + lambda.to_string() + " is not a partition of " + std::to_string(n));
  if (d < 1 || !d_quotient(lambda, d)) {
    throw ValidationError("d=" + std::to_string(d) + " does not divide every part of " + lambda.to_string());
  }
}

FMat field_matrix(const std::vector<std::vector<int>>& m) { return m; }

FMat matrix_power(const FiniteField& F, const FMat& X, int e) {
  std::size_t n = X.size();
  FMat R(n, FVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) R[i][i] = 1;
  for (int i = 0; i < e; ++i) R = mat_mul(F, R, X);
  return R;
}

FMat stack(FMat a, const FMat& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Rows forming a basis of the linear forms vanishing on span(S).
FMat annihilator(const FiniteField& F, const FMat& S, std::size_t n) {
  if (S.empty()) {
    FMat id(n, FVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  return nullspace(F, S);
}

/// Basis of {v : X v in span(S)}.
FMat preimage(const FiniteField& F, const FMat& X, const FMat& S, std::size_t n) {
  FMat Q = annihilator(F, S, n);
  if (Q.empty()) return annihilator(F, {}, n);
  return nullspace(F, mat_mul(F, Q, X));
}

/// Vectors of P extending the rref basis S to a basis of span(S + P).
FMat complement(const FiniteField& F, const FMat& S, const FMat& P) {
  FMat acc = S;
  FMat out;
  for (const auto& v : P) {
    if (in_span(F, acc, v)) continue;
    out.push_back(v);
    acc = rref(F, stack(acc, {v}));
  }
  return out;
}

/// Calls visit on every linear combination of basis, in a fixed order.
template <typename Visit>
bool for_each_combination(const FiniteField& F, const FMat& basis, std::size_t n, Visit&& visit) {
  std::size_t c = basis.size();
  std::vector<int> digits(c, 0);
  while (true) {
    FVec v(n, 0);
    for (std::size_t i = 0; i < c; ++i) {
      if (digits[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] = F.add(v[j], F.mul(digits[i], basis[i][j]));
    }
    if (!visit(v)) return false;
    std::size_t k = c;
    while (k > 0) {
      --k;
      if (++digits[k] < F.order()) break;
      digits[k] = 0;
      if (k == 0) return true;
    }
    if (c == 0) return true;
  }
}

/// span(S, v, Xv, ..., X^{d-1} v) in rref.
FMat extend_cyclic(const FiniteField& F, const FMat& X, const FMat& S, FVec v, int d) {
  FMat rows = S;
  for (int i = 0; i < d; ++i) {
    rows.push_back(v);
    v = mat_vec(F, X, v);
  }
  return rref(F, rows);
}

/// Jordan type of the nilpotent X on F^n / span(T), T in rref.
Partition quotient_type(const FiniteField& F, const FMat& X, const FMat& T, std::size_t n) {
  std::vector<int> ranks;
  FMat image = annihilator(F, {}, n);
  while (true) {
    int r = static_cast<int>(rref(F, stack(T, image)).size()) - static_cast<int>(T.size());
    ranks.push_back(r);
    if (r == 0) break;
    FMat next;
    for (const auto& v : image) next.push_back(mat_vec(F, X, v));
    image = rref(F, next);
  }
  // ranks[i] = dim of x^i W in the quotient; blocks of size >= i number ranks[i-1] - ranks[i].
  std::vector<int> conj;
  for (std::size_t i = 1; i < ranks.size(); ++i) conj.push_back(ranks[i - 1] - ranks[i]);
  std::vector<int> parts(conj.empty() ? 0 : static_cast<std::size_t>(conj.front()), 0);
  for (std::size_t i = 0; i < conj.size(); ++i) {
    for (int k = 0; k < conj[i]; ++k) ++parts[static_cast<std::size_t>(k)];
  }
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  return parts.empty() ? Partition() : Partition(parts);
}

/// Flag count for a model space with nilpotent of Jordan type mu; depends only on mu.
long count_for_type(const FiniteField& F, const Partition& mu, int d, std::map<Partition, long>& memo) {
  if (mu.size() == 0) return 1;
  auto it = memo.find(mu);
  if (it != memo.end()) return it->second;
  auto n = static_cast<std::size_t>(mu.size());
  FMat X = jordan_nilpotent(mu);
  FMat Xd = matrix_power(F, X, d);
  FMat Xd1 = matrix_power(F, X, d - 1);
  long total = 0;
  if (mu.size() == d) {
    total = mu.length() == 1 ? 1 : 0;
  } else {
    FMat P = nullspace(F, Xd);
    checked_power(F.order(), static_cast<int>(P.size()), "count_flags");
    std::map<Partition, long> generators;
    for_each_combination(F, P, n, [&](const FVec& v) {
      if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) return true;
      FVec top = mat_vec(F, Xd1, v);
      if (std::all_of(top.begin(), top.end(), [](int x) { return x == 0; })) return true;
      ++generators[quotient_type(F, X, extend_cyclic(F, X, {}, v, d), n)];
      return true;
    });
    long per_subspace = 1;
    for (int i = 0; i < d - 1; ++i) per_subspace *= F.order();
    per_subspace *= F.order() - 1;
    for (const auto& [type, count] : generators) {
      if (count % per_subspace != 0) throw ConsistencyError("cyclic generator count is not a multiple of the subspace count");
      total += count / per_subspace * count_for_type(F, type, d, memo);
    }
  }
  memo.emplace(mu, total);
  return total;
}

}  // namespace

std::vector<std::vector<int>> jordan_nilpotent(const Partition& lambda) {
  auto n = static_cast<std::size_t>(lambda.size());
  std::vector<std::vector<int>> X(n, std::vector<int>(n, 0));
  std::size_t offset = 0;
  for (int part : lambda.parts()) {
    for (int j = 1; j < part; ++j) X[offset + static_cast<std::size_t>(j) - 1][offset + static_cast<std::size_t>(j)] = 1;
    offset += static_cast<std::size_t>(part);
  }
  return X;
}

long count_flags(int n, int q, const Partition& lambda, int d) {
  check_divisible(lambda, n, d);
  FiniteField F(q);
  std::map<Partition, long> memo;
  return count_for_type(F, lambda, d, memo);
}

Interpolation interpolate_counts(const std::vector<std::pair<long, mpq_class>>& counts,
                                 std::optional<int> expected_degree) {
  if (counts.empty()) throw ValidationError("interpolation needs at least one point");
  if (expected_degree && static_cast<int>(counts.size()) < *expected_degree + 1) {
    throw ValidationError("interpolation to degree " + std::to_string(*expected_degree) + " needs at least " +
                          std::to_string(*expected_degree + 1) + " points, got " + std::to_string(counts.size()));
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (counts[i].first == counts[j].first) throw ValidationError("interpolation points must be distinct");
    }
  }
  Interpolation out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    LaurentPoly basis(1);
    mpq_class denom = 1;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (j == i) continue;
      basis *= LaurentPoly::monomial(1) - LaurentPoly(counts[j].first);
      denom *= mpq_class(counts[i].first - counts[j].first);
    }
    mpq_class scale = counts[i].second / denom;
    basis *= scale;
    out.poly += basis;
  }
  out.degree = out.poly.is_zero() ? 0 : out.poly.degree();
  out.integral = out.poly.has_integer_coeffs();
  for (const auto& c : out.poly.coeffs()) {
    if (c < 0) out.nonnegative = false;
  }
  if (!out.integral) out.diagnostics.push_back("non-integer coefficient in " + out.poly.to_string());
  if (!out.nonnegative) out.diagnostics.push_back("negative coefficient in " + out.poly.to_string());
  out.expected_degree = expected_degree;
  if (expected_degree) {
    out.degree_matches = out.degree == *expected_degree;
    if (!out.degree_matches) {
      out.diagnostics.push_back("degree " + std::to_string(out.degree) + " differs from expected " +
                                std::to_string(*expected_degree));
    }
  }
  return out;
}

namespace {

template <typename Visit>
void for_each_matrix(const FiniteField& F, int n, const std::string& what, Visit&& visit) {
  long total = checked_power(F.order(), n * n, what);
  auto nn = static_cast<std::size_t>(n);
  FMat A(nn, FVec(nn, 0));
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (std::size_t i = 0; i < nn; ++i) {
      for (std::size_t j = 0; j < nn; ++j) {
        A[i][j] = static_cast<int>(c % F.order());
        c /= F.order();
      }
    }
    visit(A);
  }
}

}  // namespace

long brute_centralizer(int n, int q, const Partition& lambda) {
  if (lambda.size() != n) throw ValidationError("partition " + lambda.to_string() + " is not a partition of " + std::to_string(n));
  FiniteField F(q);
  FMat X = field_matrix(jordan_nilpotent(lambda));
  long count = 0;
  for_each_matrix(F, n, "brute_centralizer", [&](const FMat& A) {
    if (mat_mul(F, A, X) == mat_mul(F, X, A) && determinant(F, A) != 0) ++count;
  });
  return count;
}

long brute_group_order(GroupKind kind, int n, int q) {
  FiniteField F(q);
  long count = 0;
  for_each_matrix(F, n, "brute_group_order", [&](const FMat& A) {
    int det = determinant(F, A);
    if (kind == GroupKind::GL ? det != 0 : det == 1) ++count;
  });
  return count;
}

namespace {

using Tableau = std::vector<std::vector<int>>;

bool is_standard(const Tableau& t) {
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      if (c + 1 < t[r].size() && t[r][c] > t[r][c + 1]) return false;
      if (r + 1 < t.size() && c < t[r + 1].size() && t[r][c] > t[r + 1][c]) return false;
    }
  }
  return true;
}

/// Signed tabloid expansion of the polytabloid of t; tabloids are row-of vectors.
std::map<std::vector<int>, long> polytabloid(const Tableau& t, int m) {
  std::vector<std::vector<int>> columns;
  for (std::size_t c = 0; c < t[0].size(); ++c) {
    std::vector<int> col;
    for (const auto& row : t) {
      if (c < row.size()) col.push_back(row[c]);
    }
    columns.push_back(col);
  }
  std::map<std::vector<int>, long> out;
  std::function<void(std::size_t, Tableau&, long)> rec = [&](std::size_t ci, Tableau& cur, long sign) {
    if (ci == columns.size()) {
      std::vector<int> row_of(static_cast<std::size_t>(m), 0);
      for (std::size_t r = 0; r < cur.size(); ++r) {
        for (int x : cur[r]) row_of[static_cast<std::size_t>(x)] = static_cast<int>(r);
      }
      out[row_of] += sign;
      return;
    }
    std::vector<int> perm(columns[ci].size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
      Permutation p(perm.begin(), perm.end());
      long s = 1;
      Partition ct = cycle_type(p);
      for (int len : ct.parts()) {
        if (len % 2 == 0) s = -s;
      }
      for (std::size_t i = 0; i < perm.size(); ++i) cur[i][ci] = columns[ci][static_cast<std::size_t>(perm[i])];
      rec(ci + 1, cur, sign * s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t i = 0; i < columns[ci].size(); ++i) cur[i][ci] = columns[ci][i];
  };
  Tableau cur = t;
  rec(0, cur, 1);
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

long brute_symmetric_character(const Partition& mu, const Partition& rho) {
  int m = mu.size();
  if (m > 5) throw ValidationError("brute_symmetric_character supports m <= 5, got m=" + std::to_string(m));
  if (rho.size() != m) throw ValidationError("cycle type " + rho.to_string() + " does not match shape " + mu.to_string());
  if (m == 0) return 1;
  std::vector<Tableau> standard;
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    Tableau t;
    std::size_t k = 0;
    for (int part : mu.parts()) {
      t.emplace_back(perm.begin() + static_cast<long>(k), perm.begin() + static_cast<long>(k) + part);
      k += static_cast<std::size_t>(part);
    }
    if (is_standard(t)) standard.push_back(t);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<std::vector<int>, std::size_t> tabloid_index;
  std::vector<std::map<std::vector<int>, long>> basis;
  for (const auto& t : standard) {
    basis.push_back(polytabloid(t, m));
    for (const auto& [tab, coeff] : basis.back()) tabloid_index.emplace(tab, tabloid_index.size());
  }
  Permutation sigma = permutation_of_type(rho);
  std::size_t rows = tabloid_index.size();
  std::size_t f = standard.size();
  mpq_class trace = 0;
  for (std::size_t col = 0; col < f; ++col) {
    Tableau moved = standard[col];
    for (auto& row : moved) {
      for (int& x : row) x = sigma[static_cast<std::size_t>(x)];
    }
    auto image = polytabloid(moved, m);
    std::vector<std::vector<mpq_class>> aug(rows, std::vector<mpq_class>(f + 1, 0));
    for (std::size_t j = 0; j < f; ++j) {
      for (const auto& [tab, coeff] : basis[j]) aug[tabloid_index.at(tab)][j] = coeff;
    }
    for (const auto& [tab, coeff] : image) {
      auto it = tabloid_index.find(tab);
      if (it == tabloid_index.end()) throw ConsistencyError("polytabloid image leaves the Specht module");
      aug[it->second][f] = coeff;
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivot_row(f, rows);
    for (std::size_t c = 0; c < f; ++c) {
      std::size_t p = r;
      while (p < rows && aug[p][c] == 0) ++p;
      if (p == rows) throw ConsistencyError("standard polytabloids are linearly dependent");
      std::swap(aug[p], aug[r]);
      mpq_class inv = 1 / aug[r][c];
      for (auto& x : aug[r]) x *= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || aug[i][c] == 0) continue;
        mpq_class factor = aug[i][c];
        for (std::size_t j = c; j <= f; ++j) aug[i][j] -= factor * aug[r][j];
      }
      pivot_row[c] = r;
      ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
      if (aug[i][f] != 0) throw ConsistencyError("polytabloid image is not in the span of standard polytabloids");
    }
    trace += aug[pivot_row[col]][f];
  }
  if (trace.get_den() != 1) throw ConsistencyError("non-integral character value");
  return trace.get_num().get_si();
}

namespace {

struct HermitianSpace {
  const FiniteField& K;
  int q;
  std::size_t n;
  FMat J;
  FMat X;

  int conj(int a) const { return K.pow(a, q); }

  int form(const FVec& u, const FVec& v) const {
    int s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (J[i][j] == 0 || v[j] == 0) continue;
        s = K.add(s, K.mul(K.mul(u[i], J[i][j]), conj(v[j])));
      }
    }
    return s;
  }

  FMat perp(const FMat& S) const {
    if (S.empty()) return annihilator(K, {}, n);
    FMat rows;
    for (const auto& s : S) {
      FVec r(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        int acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc = K.add(acc, K.mul(s[i], J[i][j]));
        r[j] = conj(acc);
      }
      rows.push_back(r);
    }
    return rref(K, nullspace(K, rows));
  }

  bool isotropic(const FMat& S) const {
    for (const auto& a : S) {
      for (const auto& b : S) {
        if (form(a, b) != 0) return false;
      }
    }
    return true;
  }
};

/// Hermitian form with (v_{k,j}, v_{k,j'}) = eps_k a_k (-1)^j for j + j' = lambda_k + 1.
FMat hermitian_form(const FiniteField& K, int alpha, const Partition& lambda, const std::vector<int>& signs) {
  auto n = static_cast<std::size_t>(lambda.size());
  FMat J(n, FVec(n, 0));
  std::size_t offset = 0;
  for (std::size_t k = 0; k < lambda.parts().size(); ++k) {
    int len = lambda.parts()[k];
    int eps = len % 2 == 1 ? 1 : alpha;
    int a = signs.empty() ? 1 : signs[k];
    for (int j = 1; j <= len; ++j) {
      int jp = len + 1 - j;
      int sign = a * (j % 2 == 1 ? -1 : 1);
      J[offset + static_cast<std::size_t>(j) - 1][offset + static_cast<std::size_t>(jp) - 1] = sign > 0 ? eps : K.neg(eps);
    }
    offset += static_cast<std::size_t>(len);
  }
  return J;
}

using Flag = std::vector<FMat>;

bool quotient_regular(const FiniteField& F, const FMat& X, const FMat& Xd, const FMat& Xd1, const FMat& lower,
                      const FMat& upper) {
  for (const auto& v : upper) {
    if (!in_span(F, upper, mat_vec(F, X, v))) return false;
    if (!in_span(F, lower, mat_vec(F, Xd, v))) return false;
  }
  for (const auto& v : upper) {
    if (!in_span(F, lower, mat_vec(F, Xd1, v))) return true;
  }
  return false;
}

Flag standard_flag(std::size_t n, int d, int m) {
  Flag flag;
  for (int t = 0; t <= m; ++t) {
    FMat basis;
    for (int i = 0; i < t * d; ++i) {
      FVec e(n, 0);
      e[static_cast<std::size_t>(i)] = 1;
      basis.push_back(e);
    }
    flag.push_back(basis);
  }
  return flag;
}

bool flag_f_stable(const HermitianSpace& H, const Flag& flag) {
  int m = static_cast<int>(flag.size()) - 1;
  for (int t = 1; t < m; ++t) {
    if (subspace_key(H.perp(flag[static_cast<std::size_t>(t)])) != subspace_key(flag[static_cast<std::size_t>(m - t)])) {
      return false;
    }
  }
  return true;
}

/// Visits F-stable points of P_u in canonical order; stops when visit returns false.
void enumerate_f_stable(const HermitianSpace& H, int d, int m, const std::function<bool(const Flag&)>& visit) {
  const FiniteField& K = H.K;
  std::size_t n = H.n;
  FMat Xd = matrix_power(K, H.X, d);
  FMat Xd1 = matrix_power(K, H.X, d - 1);
  int half = m / 2;
  Flag flag(static_cast<std::size_t>(m) + 1);
  flag[static_cast<std::size_t>(m)] = annihilator(K, {}, n);
  std::function<bool(int)> rec = [&](int t) -> bool {
    if (t > half) {
      for (int s = 1; s <= half; ++s) flag[static_cast<std::size_t>(m - s)] = H.perp(flag[static_cast<std::size_t>(s)]);
      for (int s = half + 1; s <= m; ++s) {
        const FMat& upper = flag[static_cast<std::size_t>(s)];
        if (upper.size() != static_cast<std::size_t>(s * d)) return true;
        if (!quotient_regular(K, H.X, Xd, Xd1, flag[static_cast<std::size_t>(s - 1)], upper)) return true;
      }
      return visit(flag);
    }
    const FMat& S = flag[static_cast<std::size_t>(t - 1)];
    FMat C = complement(K, S, preimage(K, Xd, S, n));
    checked_power(K.order(), static_cast<int>(C.size()), "compute_c_lambda");
    std::set<std::string> seen;
    return for_each_combination(K, C, n, [&](const FVec& v) {
      if (in_span(K, S, mat_vec(K, Xd1, v))) return true;
      FMat T = extend_cyclic(K, H.X, S, v, d);
      if (!seen.insert(subspace_key(T)).second || !H.isotropic(T)) return true;
      flag[static_cast<std::size_t>(t)] = T;
      return rec(t + 1);
    });
  };
  rec(1);
}

FVec power_apply(const FiniteField& K, const FMat& X, FVec v, int e) {
  for (int i = 0; i < e; ++i) v = mat_vec(K, X, v);
  return v;
}

/// det of the lift matrix of graded isometric intertwiners from the reference world.
int intertwiner_det(const HermitianSpace& H, const FMat& Jref, const Flag& flag, int d, int m) {
  const FiniteField& K = H.K;
  std::size_t n = H.n;
  auto ud = static_cast<std::size_t>(d);
  std::vector<FMat> comp(static_cast<std::size_t>(m) + 1);
  for (int t = 1; t <= m; ++t) {
    comp[static_cast<std::size_t>(t)] = complement(K, flag[static_cast<std::size_t>(t - 1)], flag[static_cast<std::size_t>(t)]);
  }
  std::vector<FMat> lift(static_cast<std::size_t>(m) + 1);
  auto cyclic = [&](int t, const FVec& w) {
    return !in_span(K, flag[static_cast<std::size_t>(t - 1)], power_apply(K, H.X, w, d - 1));
  };
  auto lifts_from = [&](const FVec& w) {
    FMat out(ud);
    for (int j = 1; j <= d; ++j) out[static_cast<std::size_t>(j) - 1] = power_apply(K, H.X, w, d - j);
    return out;
  };
  auto ref = [&](int t, int j) { return static_cast<std::size_t>((t - 1) * d + j - 1); };
  for (int t = 1; 2 * t < m + 1; ++t) {
    const FMat& C = comp[static_cast<std::size_t>(t)];
    std::optional<FVec> w;
    for (const auto& c : C) {
      if (cyclic(t, c)) {
        w = c;
        break;
      }
    }
    if (!w) {
      for_each_combination(K, C, n, [&](const FVec& v) {
        if (!cyclic(t, v)) return true;
        w = v;
        return false;
      });
    }
    if (!w) throw ConsistencyError("graded piece has no cyclic vector");
    lift[static_cast<std::size_t>(t)] = lifts_from(*w);
    int tp = m + 1 - t;
    const FMat& Cp = comp[static_cast<std::size_t>(tp)];
    FMat A(ud, FVec(ud));
    for (std::size_t j = 0; j < ud; ++j) {
      for (std::size_t i = 0; i < ud; ++i) A[j][i] = H.form(lift[static_cast<std::size_t>(t)][j], Cp[i]);
    }
    FMat out;
    for (int jp = 1; jp <= d; ++jp) {
      FVec rhs(ud);
      for (int j = 1; j <= d; ++j) rhs[static_cast<std::size_t>(j) - 1] = Jref[ref(t, j)][ref(tp, jp)];
      FVec cbar;
      if (!solve_linear(K, A, rhs, cbar)) throw ConsistencyError("graded pairing is degenerate");
      FVec y(n, 0);
      for (std::size_t i = 0; i < ud; ++i) {
        int c = H.conj(cbar[i]);
        for (std::size_t k = 0; k < n; ++k) y[k] = K.add(y[k], K.mul(c, Cp[i][k]));
      }
      out.push_back(y);
    }
    for (int jp = 2; jp <= d; ++jp) {
      FVec diff = mat_vec(K, H.X, out[static_cast<std::size_t>(jp) - 1]);
      for (std::size_t k = 0; k < n; ++k) diff[k] = K.sub(diff[k], out[static_cast<std::size_t>(jp) - 2][k]);
      if (!in_span(K, flag[static_cast<std::size_t>(tp - 1)], diff)) {
        throw ConsistencyError("dual intertwiner does not commute with the nilpotent");
      }
    }
    lift[static_cast<std::size_t>(tp)] = out;
  }
  if (m % 2 == 1) {
    int t0 = (m + 1) / 2;
    std::optional<FMat> found;
    checked_power(K.order(), d, "compute_c_lambda");
    for_each_combination(K, comp[static_cast<std::size_t>(t0)], n, [&](const FVec& w) {
      if (!cyclic(t0, w)) return true;
      FMat cand = lifts_from(w);
      for (int a = 1; a <= d; ++a) {
        for (int b = 1; b <= d; ++b) {
          if (H.form(cand[static_cast<std::size_t>(a) - 1], cand[static_cast<std::size_t>(b) - 1]) != Jref[ref(t0, a)][ref(t0, b)]) {
            return true;
          }
        }
      }
      found = cand;
      return false;
    });
    if (!found) throw ConsistencyError("middle graded piece admits no isometric intertwiner");
    lift[static_cast<std::size_t>(t0)] = *found;
  }
  FMat M(n, FVec(n, 0));
  for (int t = 1; t <= m; ++t) {
    for (int j = 1; j <= d; ++j) {
      const FVec& col = lift[static_cast<std::size_t>(t)][static_cast<std::size_t>(j) - 1];
      for (std::size_t r = 0; r < n; ++r) M[r][ref(t, j)] = col[r];
    }
  }
  return determinant(K, M);
}

}  // namespace

CLambdaResult compute_c_lambda(const CLambdaInput& in) {
  check_divisible(in.lambda, in.n, in.d);
  if (!in.form_signs.empty()) {
    if (in.form_signs.size() != static_cast<std::size_t>(in.lambda.length())) {
      throw ValidationError("one form sign per part of " + in.lambda.to_string() + " is required");
    }
    for (int s : in.form_signs) {
      if (s != 1 && s != -1) throw ValidationError("form signs must be +1 or -1");
    }
  }
  const int d = in.d;
  const int q = in.q;
  const int m = in.n / d;
  CLambdaResult result;
  result.nu = Cyclotomic(d, 1);
  if (d == 1) {
    FiniteField check(q);
    result.points_examined = 1;
    return result;
  }
  if (in.xi_exponent < 1 || in.xi_exponent >= d || std::gcd(in.xi_exponent, d) != 1) {
    throw ValidationError("xi exponent must be a unit modulo d=" + std::to_string(d));
  }
  std::size_t n = static_cast<std::size_t>(in.n);
  if (in.frobenius == FrobeniusKind::Split) {
    if ((q - 1) % d != 0) throw ValidationError("series d=" + std::to_string(d) + " is not F-stable at q=" + std::to_string(q));
    FiniteField F(q);
    FMat X = field_matrix(jordan_nilpotent(in.lambda));
    Flag flag = standard_flag(n, d, m);
    FMat M(n, FVec(n, 0));
    for (int t = 1; t <= m; ++t) {
      FVec w(n, 0);
      w[static_cast<std::size_t>(t * d - 1)] = 1;
      for (int j = 1; j <= d; ++j) {
        FVec col = power_apply(F, X, w, d - j);
        for (std::size_t r = 0; r < n; ++r) M[r][static_cast<std::size_t>((t - 1) * d + j - 1)] = col[r];
      }
    }
    int kappa = F.pow(determinant(F, M), (q - 1) / d);
    int zeta = F.pow(F.primitive_element(), (q - 1) / d);
    int y = 0;
    while (F.pow(zeta, y) != kappa) {
      if (++y >= d) throw ConsistencyError("determinant class is not a d-th root of unity");
    }
    result.c_residue = y;
    result.nu_exponent = static_cast<int>((static_cast<long>(in.xi_exponent) * y) % d);
    result.nu = Cyclotomic::root_of_unity(d, result.nu_exponent);
    result.points_examined = 1;
    if (in.histogram) result.histogram[y] = 1;
    return result;
  }
  if (q % 2 == 0) throw ValidationError("the hermitian model needs odd q, got q=" + std::to_string(q));
  if ((q + 1) % d != 0) throw ValidationError("series d=" + std::to_string(d) + " is not F-stable at q=" + std::to_string(q));
  if (static_cast<long>(q) * q > 1024) throw ValidationError("q=" + std::to_string(q) + " exceeds the field table limit 32");
  FiniteField K(q * q);
  int g = K.primitive_element();
  int alpha = K.pow(g, (q + 1) / 2);
  HermitianSpace H{K, q, n, hermitian_form(K, alpha, in.lambda, in.form_signs), field_matrix(jordan_nilpotent(in.lambda))};
  FMat Jref = hermitian_form(K, alpha, Partition::single_row(in.n), {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (H.J[j][i] != H.conj(H.J[i][j])) throw ConsistencyError("form is not hermitian");
      int skew = 0;
      for (std::size_t k = 0; k < n; ++k) {
        skew = K.add(skew, K.add(K.mul(H.X[k][i], H.J[k][j]), K.mul(H.J[i][k], H.X[k][j])));
      }
      if (skew != 0) throw ConsistencyError("nilpotent is not skew for the form");
    }
  }
  int ratio = K.div(determinant(K, H.J), determinant(K, Jref));
  std::vector<int> mu0;
  if (ratio == 1) mu0.push_back(1);
  for (int e = 0; e < q - 1 && ratio != 1; ++e) {
    int mu = K.pow(g, static_cast<long>(q + 1) * e);
    if (K.pow(mu, in.n) == ratio) mu0.push_back(mu);
  }
  if (mu0.empty()) {
    throw ConsistencyError("no determinant-one transport to the reference form exists for " + in.lambda.to_string() +
                           "; try other form signs");
  }
  int zeta = K.pow(g, (static_cast<long>(q) * q - 1) / d);
  auto kappa_of = [&](const Flag& flag, int mu) {
    int det = intertwiner_det(H, Jref, flag, d, m);
    int kappa = K.mul(K.pow(det, (q + 1) / d), K.pow(mu, m));
    if (K.pow(kappa, d) != 1) throw ConsistencyError("determinant class is not a d-th root of unity");
    int y = 0;
    while (K.pow(zeta, y) != kappa) ++y;
    return y;
  };
  Flag chosen = standard_flag(n, d, m);
  result.standard_flag = flag_f_stable(H, chosen);
  bool have = result.standard_flag;
  if (!have || in.histogram) {
    enumerate_f_stable(H, d, m, [&](const Flag& flag) {
      ++result.points_examined;
      if (!have) {
        chosen = flag;
        have = true;
      }
      if (in.histogram) {
        ++result.histogram[kappa_of(flag, mu0.front())];
        return true;
      }
      return false;
    });
  } else {
    result.points_examined = 1;
  }
  if (!have) throw ConsistencyError("no F-stable point of P_u found");
  int y = kappa_of(chosen, mu0.front());
  for (int mu : mu0) {
    if (kappa_of(chosen, mu) != y) result.normalization_ambiguous = true;
  }
  result.c_residue = y;
  result.nu_exponent = static_cast<int>((static_cast<long>(in.xi_exponent) * y) % d);
  result.nu = Cyclotomic::root_of_unity(d, result.nu_exponent);
  return result;
}

}  // namespace greenfn
