#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "greenfn/cyclotomic.hpp"
#include "greenfn/solver.hpp"
#include "greenfn/springer.hpp"

namespace greenfn {

/// nu_lambda = z_d^k, keyed by lambda.
using NuInputs = std::map<Partition, long>;

using CycloMatrix = std::vector<std::vector<CycloPoly>>;

/// gamma_i for every datum of the block, in block order.
std::vector<Cyclotomic> gamma_values(const GroupSpec& spec, const SeriesLabel& series,
                                     const std::vector<SpringerDatum>& data, const NuInputs& nu);

/// X_i(u_a) = sum_j p_ji gamma_j Y^0_j(u_a); rows follow the block, columns the Y^0 table.
CycloMatrix x_functions(const OmegaSystem& system, const Y0Table& y0, const std::vector<Cyclotomic>& gammas);

struct GreenTable {
  GroupSpec spec;
  SeriesLabel series;
  int q_residue = 0;
  /// Cycle types of w (split) or of w*w0 (non-split).
  std::vector<Partition> rows;
  std::vector<ClassColumn> columns;
  CycloMatrix entries;
  int cyclotomic_order = 1;
};

GreenTable green_table(const GroupSpec& spec, const SeriesLabel& series, int q_residue, const NuInputs& nu);

nlohmann::json to_json(const GreenTable& table);
std::string to_csv(const GreenTable& table);

/// Checks that every entry is fixed by z -> z^t combined with a -> t*a on
/// twist labels, t the Frobenius multiplier.
bool twisted_rows_consistent(const GreenTable& table);

struct EnnolaItem {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct EnnolaReport {
  std::vector<EnnolaItem> items;
  bool passed() const;
};

/// Compares the non-split group at residue q_residue with the split group at
/// residue -q_residue, entry by entry.
EnnolaReport ennola_check(GroupKind kind, int n, int p, const SeriesLabel& series, int q_residue, const NuInputs& nu);

}  // namespace greenfn
