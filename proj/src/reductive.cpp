#include "greenfn/reductive.hpp"

#include <numeric>

#include "greenfn/errors.hpp"

namespace greenfn {

std::string GroupSpec::name() const {
  std::string s = kind == GroupKind::GL ? "GL" : "SL";
  s += std::to_string(n);
  s += twisted() ? "-nonsplit" : "-split";
  return s;
}

void validate(const GroupSpec& spec) {
  if (spec.n < 1) throw ValidationError("n must be at least 1");
  if (spec.p < 0) throw ValidationError("characteristic must be 0 (generic) or a prime");
  if (spec.p > 0) {
    for (int k = 2; k * k <= spec.p; ++k) {
      if (spec.p % k == 0) throw ValidationError("characteristic " + std::to_string(spec.p) + " is not prime");
    }
    if (spec.p == 1) throw ValidationError("characteristic 1 is not prime");
  }
}

int prime_to_p_part(int n, int p) {
  if (p <= 1) return n;
  while (n % p == 0) n /= p;
  return n;
}

LeviSpec levi_for(int n, int d) {
  if (d < 1 || n % d != 0) throw ValidationError("d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));
  return {d, n / d};
}

int dim_group(const GroupSpec& spec) { return spec.kind == GroupKind::GL ? spec.n * spec.n : spec.n * spec.n - 1; }

int dim_center_of_levi(const GroupSpec& spec, const LeviSpec& levi) {
  return spec.kind == GroupKind::GL ? levi.m : levi.m - 1;
}

RatQ general_linear_order(int m) {
  RatQ r = RatQ::q(m * (m - 1) / 2);
  for (int i = 1; i <= m; ++i) r *= RatQ(LaurentPoly::monomial(i) - LaurentPoly(1));
  return r;
}

RatQ unitary_order(int m) {
  RatQ r = RatQ::q(m * (m - 1) / 2);
  for (int i = 1; i <= m; ++i) r *= RatQ(LaurentPoly::monomial(i) - LaurentPoly(i % 2 == 0 ? 1 : -1));
  return r;
}

RatQ group_order(const GroupSpec& spec) {
  validate(spec);
  bool tw = spec.twisted();
  RatQ g = tw ? unitary_order(spec.n) : general_linear_order(spec.n);
  if (spec.kind == GroupKind::SL) g /= RatQ(LaurentPoly::monomial(1) + LaurentPoly(tw ? 1 : -1));
  return g;
}

RatQ twisted_torus_order(const IntMatrix& A) {
  std::size_t r = A.size();
  for (const auto& row : A) {
    if (row.size() != r) throw ValidationError("twisted_torus_order: matrix is not square");
  }
  if (r == 0) return RatQ(1);
  // Faddeev-LeVerrier: coefficients of det(x Id - A).
  std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = A[i][j];
  }
  std::vector<mpq_class> c(r + 1);
  c[r] = 1;
  std::vector<std::vector<mpq_class>> M(r, std::vector<mpq_class>(r));
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<mpq_class>> next(r, std::vector<mpq_class>(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        mpq_class s = 0;
        for (std::size_t l = 0; l < r; ++l) s += a[i][l] * M[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[r - k + 1];
    }
    M = std::move(next);
    mpq_class tr = 0;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t l = 0; l < r; ++l) tr += a[i][l] * M[l][i];
    }
    c[r - k] = -tr / mpq_class(static_cast<long>(k));
  }
  return RatQ(LaurentPoly::from_coeffs(0, std::move(c)));
}

IntMatrix levi_lattice_action(const GroupSpec& spec, const LeviSpec& levi, const Permutation& w, int sign) {
  int m = levi.m;
  if (static_cast<int>(w.size()) != m) throw ValidationError("levi lattice: permutation degree differs from m");
  if (spec.kind == GroupKind::GL) {
    IntMatrix A(static_cast<std::size_t>(m), std::vector<long>(static_cast<std::size_t>(m), 0));
    for (int j = 0; j < m; ++j) A[static_cast<std::size_t>(w[static_cast<std::size_t>(j)])][static_cast<std::size_t>(j)] = sign;
    return A;
  }
  // Basis f_j = e_j - e_{j+1}; coordinate k of a sum-zero vector x is x_1 + ... + x_k.
  int r = m - 1;
  IntMatrix A(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r), 0));
  for (int j = 0; j < r; ++j) {
    int a = w[static_cast<std::size_t>(j)];
    int b = w[static_cast<std::size_t>(j + 1)];
    for (int k = 0; k < r; ++k) {
      long v = (a <= k ? 1 : 0) - (b <= k ? 1 : 0);
      A[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = sign * v;
    }
  }
  return A;
}

RatQ levi_torus_order(const GroupSpec& spec, const LeviSpec& levi, const Partition& rho) {
  if (rho.size() != levi.m) throw ValidationError("levi_torus_order: cycle type of wrong size");
  int sign = spec.twisted() ? -1 : 1;
  return twisted_torus_order(levi_lattice_action(spec, levi, permutation_of_type(rho), sign));
}

RatQ levi_torus_order(const GroupSpec& spec, const LeviSpec& levi, const Permutation& w) {
  if (static_cast<int>(w.size()) != levi.m) throw ValidationError("levi_torus_order: permutation of wrong degree");
  if (!spec.twisted()) return twisted_torus_order(levi_lattice_action(spec, levi, w, 1));
  return twisted_torus_order(levi_lattice_action(spec, levi, compose(w, longest_element(levi.m)), -1));
}

A0R a0_r(const GroupSpec& spec, const LeviSpec& levi, const Partition& lambda) {
  if (lambda.size() != spec.n || levi.d * levi.m != spec.n) throw ValidationError("a0_r: size mismatch");
  if (!d_quotient(lambda, levi.d)) {
    throw ValidationError("partition " + lambda.to_string() + " is not divisible by d = " + std::to_string(levi.d));
  }
  int dim_c = class_dims(spec.n, lambda, spec.kind).dim_C;
  int dim_z = dim_center_of_levi(spec, levi);
  int dim_l = levi.m * levi.d * levi.d - (spec.kind == GroupKind::SL ? 1 : 0);
  int dim_c0 = levi.m * (levi.d * levi.d - levi.d);
  A0R out{};
  out.a0 = -dim_z - dim_c;
  out.r = dim_group(spec) - dim_l + dim_c0 + dim_z;
  out.a0_plus_r = out.a0 + out.r;
  if (out.a0_plus_r % 2 != 0) throw ConsistencyError("a0 + r is odd for " + lambda.to_string());
  return out;
}

RatQ centralizer_order(const GroupSpec& spec, const Partition& lambda) {
  if (lambda.size() != spec.n) throw ValidationError("centralizer_order: size mismatch");
  bool tw = spec.twisted();
  int dim_z = class_dims(spec.n, lambda, GroupKind::GL).dim_Z_of_u;
  int reductive_dim = 0;
  RatQ r(1);
  for (int i = 1; i <= spec.n; ++i) {
    int mi = lambda.multiplicity(i);
    if (mi == 0) continue;
    reductive_dim += mi * mi;
    r *= tw ? unitary_order(mi) : general_linear_order(mi);
  }
  r *= RatQ::q(dim_z - reductive_dim);
  if (spec.kind == GroupKind::SL) r /= RatQ(LaurentPoly::monomial(1) + LaurentPoly(tw ? 1 : -1));
  return r;
}

}  // namespace greenfn
