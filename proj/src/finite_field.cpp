#include "greenfn/finite_field.hpp"

#include <algorithm>

#include "greenfn/errors.hpp"

namespace greenfn {

namespace {

using Poly = std::vector<int>;  // ascending coefficients mod p

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  Poly r(static_cast<std::size_t>(2 * k), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  for (int d = 2 * k - 1; d >= k; --d) {
    int c = r[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    for (int j = 0; j <= k; ++j) {
      auto& slot = r[static_cast<std::size_t>(d - k + j)];
      slot = ((slot - c * f[static_cast<std::size_t>(j)]) % p + p) % p;
    }
  }
  r.resize(static_cast<std::size_t>(k));
  return r;
}

bool has_root_free_factorization(const Poly& f, int p) {
  // f monic of degree k <= 10 is irreducible iff no monic factor of degree <= k/2.
  int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      Poly g(static_cast<std::size_t>(d + 1), 0);
      long c = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(c % p);
        c /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      Poly rem = f;
      for (int top = k; top >= d; --top) {
        int lead = rem[static_cast<std::size_t>(top)];
        if (lead == 0) continue;
        for (int j = 0; j <= d; ++j) {
          auto& slot = rem[static_cast<std::size_t>(top - d + j)];
          slot = ((slot - lead * g[static_cast<std::size_t>(j)]) % p + p) % p;
        }
      }
      bool zero = std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; });
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int order) : q_(order) {
  if (order < 2 || order > 1024) throw ValidationError("field order must be between 2 and 1024");
  p_ = 0;
  for (int d = 2; d <= order; ++d) {
    if (order % d == 0) {
      p_ = d;
      break;
    }
  }
  k_ = 0;
  for (int x = order; x > 1; x /= p_) {
    if (x % p_ != 0) throw ValidationError("field order " + std::to_string(order) + " is not a prime power");
    ++k_;
  }
  Poly f(static_cast<std::size_t>(k_ + 1), 0);
  f[static_cast<std::size_t>(k_)] = 1;
  if (k_ > 1) {
    long count = order;
    bool found = false;
    for (long code = 0; code < count && !found; ++code) {
      long c = code;
      for (int i = 0; i < k_; ++i) {
        f[static_cast<std::size_t>(i)] = static_cast<int>(c % p_);
        c /= p_;
      }
      found = f[0] != 0 && has_root_free_factorization(f, p_);
    }
  }
  auto decode = [&](int a) {
    Poly v(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
      v[static_cast<std::size_t>(i)] = a % p_;
      a /= p_;
    }
    return v;
  };
  auto encode = [&](const Poly& v) {
    int a = 0;
    for (int i = k_ - 1; i >= 0; --i) a = a * p_ + v[static_cast<std::size_t>(i)];
    return a;
  };
  std::size_t sz = static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_);
  add_.resize(sz);
  mul_.resize(sz);
  neg_.resize(static_cast<std::size_t>(q_));
  for (int a = 0; a < q_; ++a) {
    Poly va = decode(a);
    Poly na(va.size());
    for (std::size_t i = 0; i < va.size(); ++i) na[i] = (p_ - va[i]) % p_;
    neg_[static_cast<std::size_t>(a)] = encode(na);
    for (int b = 0; b < q_; ++b) {
      Poly vb = decode(b);
      Poly s(va.size());
      for (std::size_t i = 0; i < va.size(); ++i) s[i] = (va[i] + vb[i]) % p_;
      add_[idx(a, b)] = encode(s);
      mul_[idx(a, b)] = k_ == 1 ? (a * b) % p_ : encode(poly_mulmod(va, vb, f, p_));
    }
  }
  inv_.assign(static_cast<std::size_t>(q_), 0);
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) inv_[static_cast<std::size_t>(a)] = b;
    }
  }
  for (int g = 1; g < q_; ++g) {
    int x = 1;
    int ord = 0;
    do {
      x = mul(x, g);
      ++ord;
    } while (x != 1);
    if (ord == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
  log_.assign(static_cast<std::size_t>(q_), -1);
  int x = 1;
  for (int e = 0; e < q_ - 1; ++e) {
    log_[static_cast<std::size_t>(x)] = e;
    x = mul(x, primitive_);
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw ValidationError("inverse of zero in finite field");
  return inv_[static_cast<std::size_t>(a)];
}

int FiniteField::pow(int a, long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  long m = q_ - 1;
  long r = ((e % m) + m) % m;
  int acc = 1;
  int base = a;
  while (r > 0) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

int FiniteField::from_int(long c) const { return static_cast<int>(((c % p_) + p_) % p_); }

int FiniteField::log(int a) const {
  if (a == 0) throw ValidationError("log of zero in finite field");
  return log_[static_cast<std::size_t>(a)];
}

FMat rref(const FiniteField& F, FMat rows) {
  if (rows.empty()) return rows;
  std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    int s = F.inv(rows[r][col]);
    for (auto& x : rows[r]) x = F.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      int f = rows[i][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<int> pivots(const FMat& basis) {
  std::vector<int> out;
  for (const auto& row : basis) {
    int c = 0;
    while (row[static_cast<std::size_t>(c)] == 0) ++c;
    out.push_back(c);
  }
  return out;
}

bool in_span(const FiniteField& F, const FMat& rref_basis, FVec v) {
  for (const auto& row : rref_basis) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    int f = v[c];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(f, row[j]));
  }
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

FMat nullspace(const FiniteField& F, const FMat& A) {
  if (A.empty()) return {};
  std::size_t n = A[0].size();
  FMat R = rref(F, A);
  std::vector<int> piv = pivots(R);
  std::vector<bool> is_piv(n, false);
  for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
  FMat out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    FVec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < R.size(); ++i) v[static_cast<std::size_t>(piv[i])] = F.neg(R[i][free]);
    out.push_back(v);
  }
  return out;
}

FVec mat_vec(const FiniteField& F, const FMat& A, const FVec& v) {
  FVec out(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i) {
    int s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (A[i][j] != 0 && v[j] != 0) s = F.add(s, F.mul(A[i][j], v[j]));
    }
    out[i] = s;
  }
  return out;
}

FMat mat_mul(const FiniteField& F, const FMat& A, const FMat& B) {
  FMat C(A.size(), FVec(B.empty() ? 0 : B[0].size(), 0));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t k = 0; k < B.size(); ++k) {
      if (A[i][k] == 0) continue;
      for (std::size_t j = 0; j < B[k].size(); ++j) C[i][j] = F.add(C[i][j], F.mul(A[i][k], B[k][j]));
    }
  }
  return C;
}

int determinant(const FiniteField& F, FMat A) {
  std::size_t n = A.size();
  int det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(A[piv], A[col]);
      det = F.neg(det);
    }
    det = F.mul(det, A[col][col]);
    int s = F.inv(A[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (A[r][col] == 0) continue;
      int f = F.mul(A[r][col], s);
      for (std::size_t j = col; j < n; ++j) A[r][j] = F.sub(A[r][j], F.mul(f, A[col][j]));
    }
  }
  return det;
}

bool solve_linear(const FiniteField& F, const FMat& A, const FVec& b, FVec& x) {
  std::size_t rows = A.size();
  std::size_t n = rows ? A[0].size() : 0;
  FMat aug(rows, FVec(n + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = A[i][j];
    aug[i][n] = b[i];
  }
  FMat R = rref(F, aug);
  x.assign(n, 0);
  for (const auto& row : R) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    if (c == n) return false;
    x[c] = row[n];
  }
  return true;
}

std::string subspace_key(const FMat& rref_basis) {
  std::string key;
  for (const auto& row : rref_basis) {
    for (int x : row) key.push_back(static_cast<char>(x & 0x7f));
    key.push_back('\x7f');
  }
  return key;
}

}  // namespace greenfn
