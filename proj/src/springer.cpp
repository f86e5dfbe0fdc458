#include "greenfn/springer.hpp"

#include <algorithm>
#include <numeric>

#include "greenfn/errors.hpp"
#include "greenfn/symgroup.hpp"

namespace greenfn {

namespace {

long pmod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::string SeriesLabel::to_string() const {
  std::string s = "d=" + std::to_string(d);
  if (xi_exponent != 1) s += ",xi=" + std::to_string(xi_exponent);
  return s;
}

std::vector<SeriesLabel> enumerate_series(GroupKind kind, int n, int p) {
  if (n < 1) throw ValidationError("n must be at least 1");
  std::vector<SeriesLabel> out;
  int np = kind == GroupKind::GL ? 1 : prime_to_p_part(n, p);
  for (int d = 1; d <= np; ++d) {
    if (np % d == 0) out.push_back({d, 1, d == n});
  }
  return out;
}

SeriesLabel make_series(const GroupSpec& spec, int d, int xi_exponent) {
  validate(spec);
  int np = spec.kind == GroupKind::GL ? 1 : prime_to_p_part(spec.n, spec.p);
  if (d < 1 || np % d != 0) {
    throw ValidationError("d = " + std::to_string(d) + " must divide n' = " + std::to_string(np) + " for " + spec.name());
  }
  if (std::gcd(pmod(xi_exponent, d), static_cast<long>(d)) != 1 && d > 1) {
    throw ValidationError("xi exponent must be a unit modulo d");
  }
  return {d, d == 1 ? 1 : static_cast<int>(pmod(xi_exponent, d)), d == spec.n};
}

std::vector<SpringerDatum> enumerate_block(const GroupSpec& spec, const SeriesLabel& series) {
  SeriesLabel s = make_series(spec, series.d, series.xi_exponent);
  LeviSpec levi = levi_for(spec.n, s.d);
  int np = spec.kind == GroupKind::GL ? 1 : prime_to_p_part(spec.n, spec.p);
  std::vector<SpringerDatum> out;
  for (const auto& lambda : partitions_of(spec.n)) {
    auto mu = d_quotient(lambda, s.d);
    if (!mu) continue;
    SpringerDatum dat;
    dat.lambda = lambda;
    int g = np;
    for (int part : lambda.parts()) g = std::gcd(g, part);
    dat.component_order = g;
    dat.rho_exponent = static_cast<int>(pmod(static_cast<long>(s.xi_exponent) * (g / s.d), g));
    dat.mu = *mu;
    dat.a_E = a_value(*mu);
    ClassDims dims = class_dims(spec.n, lambda, spec.kind);
    dat.d_u = dims.d_u;
    dat.dim_C = dims.dim_C;
    dat.delta = dat.a_E - dat.d_u;
    A0R ar = a0_r(spec, levi, lambda);
    dat.a0 = ar.a0;
    dat.r = ar.r;
    if (ar.a0_plus_r != 2 * dat.d_u) throw ConsistencyError("(a0 + r)/2 differs from d_u for " + lambda.to_string());
    out.push_back(dat);
  }
  std::sort(out.begin(), out.end(),
            [](const SpringerDatum& a, const SpringerDatum& b) { return block_order_less(a.lambda, b.lambda); });
  return out;
}

int default_q_residue(const GroupSpec& spec) {
  int np = spec.kind == GroupKind::GL ? 1 : prime_to_p_part(spec.n, spec.p);
  if (np == 1) return 0;
  return spec.twisted() ? np - 1 : 1;
}

ComponentGroup component_group(const GroupSpec& spec, const Partition& lambda, int q_residue) {
  if (lambda.size() != spec.n) throw ValidationError("component_group: partition of wrong size");
  int np = spec.kind == GroupKind::GL ? 1 : prime_to_p_part(spec.n, spec.p);
  if (np > 1 && std::gcd(pmod(q_residue, np), static_cast<long>(np)) != 1) {
    throw ValidationError("q residue " + std::to_string(q_residue) + " is not a unit modulo n' = " + std::to_string(np));
  }
  int g = np;
  for (int part : lambda.parts()) g = std::gcd(g, part);
  ComponentGroup cg;
  cg.order = g;
  long t = spec.twisted() ? -q_residue : q_residue;
  cg.frobenius_multiplier = static_cast<int>(pmod(t, g));
  return cg;
}

std::vector<int> twist_classes(const ComponentGroup& group) {
  int g = std::gcd(group.order, static_cast<int>(pmod(group.frobenius_multiplier - 1, group.order)));
  if (g == 0) g = group.order;
  std::vector<int> reps(static_cast<std::size_t>(g));
  std::iota(reps.begin(), reps.end(), 0);
  return reps;
}

Y0Table y0_table(const GroupSpec& spec, const SeriesLabel& series, int q_residue) {
  Y0Table t;
  t.cyclotomic_order = series.d;
  t.rows = enumerate_block(spec, series);
  std::vector<std::size_t> first_col;
  for (const auto& dat : t.rows) {
    ComponentGroup cg = component_group(spec, dat.lambda, q_residue);
    if (pmod(cg.frobenius_multiplier - 1, series.d) != 0 && series.d > 1) {
      throw ValidationError("series " + series.to_string() + " is not F-stable for q = " + std::to_string(q_residue) +
                            " mod n' on " + spec.name());
    }
    first_col.push_back(t.columns.size());
    for (int a : twist_classes(cg)) t.columns.push_back({dat.lambda, a});
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::vector<Cyclotomic> row(t.columns.size(), Cyclotomic(series.d));
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (t.columns[c].lambda != t.rows[i].lambda) continue;
      row[c] = Cyclotomic::root_of_unity(series.d, static_cast<long>(series.xi_exponent) * t.columns[c].twist);
    }
    t.values.push_back(std::move(row));
  }
  return t;
}

}  // namespace greenfn
