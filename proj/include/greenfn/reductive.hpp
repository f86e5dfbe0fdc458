#pragma once

#include <string>
#include <vector>

#include "greenfn/partition.hpp"
#include "greenfn/qpoly.hpp"
#include "greenfn/symgroup.hpp"

namespace greenfn {

enum class FrobeniusKind { Split, NonSplit };

/// GL_n or SL_n with a split or non-split (unitary) Frobenius.
/// p = 0 stands for a characteristic coprime to n.
struct GroupSpec {
  GroupKind kind = GroupKind::GL;
  FrobeniusKind frobenius = FrobeniusKind::Split;
  int n = 1;
  int p = 0;

  bool twisted() const { return frobenius == FrobeniusKind::NonSplit; }
  std::string name() const;
};

void validate(const GroupSpec& spec);

/// Largest divisor of n prime to p (n itself when p = 0).
int prime_to_p_part(int n, int p);

struct LeviSpec {
  int d = 1;
  int m = 1;
};

LeviSpec levi_for(int n, int d);

using IntMatrix = std::vector<std::vector<long>>;

int dim_group(const GroupSpec& spec);
int dim_center_of_levi(const GroupSpec& spec, const LeviSpec& levi);

/// |G^F| as a polynomial in q.
RatQ group_order(const GroupSpec& spec);

/// Order of a Chevalley group of type GL_m twisted by x -> -x^T (unitary group).
RatQ unitary_order(int m);
RatQ general_linear_order(int m);

/// det(q Id - A).
RatQ twisted_torus_order(const IntMatrix& A);

/// Matrix of the signed permutation action on the cocharacter lattice of Z_L^0:
/// Z^m for GL, the sum-zero sublattice (basis e_i - e_{i+1}) for SL.
IntMatrix levi_lattice_action(const GroupSpec& spec, const LeviSpec& levi, const Permutation& w, int sign);

/// |Z^0_{L^w}^F|. Split: rho is the cycle type of w. Non-split: rho is the
/// cycle type of w*w0 and the Frobenius acts as -(w*w0) on the lattice.
RatQ levi_torus_order(const GroupSpec& spec, const LeviSpec& levi, const Partition& rho);
/// Same with an explicit w in S_m.
RatQ levi_torus_order(const GroupSpec& spec, const LeviSpec& levi, const Permutation& w);

struct A0R {
  int a0;
  int r;
  int a0_plus_r;
};

A0R a0_r(const GroupSpec& spec, const LeviSpec& levi, const Partition& lambda);

/// |Z_G(u)^F| for u of Jordan type lambda; for SL the factor gcd(gcd(lambda), q -+ 1)
/// is left out so the value is a polynomial.
RatQ centralizer_order(const GroupSpec& spec, const Partition& lambda);

}  // namespace greenfn
