#pragma once

#include <string>
#include <vector>

#include "greenfn/cyclotomic.hpp"
#include "greenfn/partition.hpp"
#include "greenfn/reductive.hpp"

namespace greenfn {

/// Series of the generalized Springer correspondence attached to a central
/// character xi of order d; xi(zeta^x) = z_d^(xi_exponent * x).
struct SeriesLabel {
  int d = 1;
  int xi_exponent = 1;
  bool cuspidal = false;

  std::string to_string() const;
};

/// One index (lambda, rho) of a series block with its invariants.
struct SpringerDatum {
  Partition lambda;
  int rho_exponent = 0;    // rho(a) = zeta_{component_order}^(rho_exponent * a)
  int component_order = 1;  // n'_lambda
  Partition mu;             // lambda / d
  int a_E = 0;
  int d_u = 0;
  int delta = 0;
  int a0 = 0;
  int r = 0;
  int dim_C = 0;

  std::string label() const { return lambda.to_string(); }
};

std::vector<SeriesLabel> enumerate_series(GroupKind kind, int n, int p);
/// Series with the given d, validated against the group.
SeriesLabel make_series(const GroupSpec& spec, int d, int xi_exponent = 1);

/// Data of the block in solver order.
std::vector<SpringerDatum> enumerate_block(const GroupSpec& spec, const SeriesLabel& series);

struct ComponentGroup {
  int order = 1;
  int frobenius_multiplier = 1;  // F acts on Z_order as multiplication by this
};

ComponentGroup component_group(const GroupSpec& spec, const Partition& lambda, int q_residue);

/// Representatives of the cokernel of (multiplier - 1) on Z_order.
std::vector<int> twist_classes(const ComponentGroup& group);

/// Default residue of q modulo n': 1 for split, -1 for non-split.
int default_q_residue(const GroupSpec& spec);

struct ClassColumn {
  Partition lambda;
  int twist = 0;

  std::string label() const { return lambda.to_string() + "|" + std::to_string(twist); }
};

/// Values of Y^0_i on the classes u_a; values lie in Q(zeta_d).
struct Y0Table {
  int cyclotomic_order = 1;
  std::vector<SpringerDatum> rows;
  std::vector<ClassColumn> columns;
  std::vector<std::vector<Cyclotomic>> values;
};

Y0Table y0_table(const GroupSpec& spec, const SeriesLabel& series, int q_residue);

}  // namespace greenfn
