#include "greenfn/greentab.hpp"

#include <sstream>

#include "greenfn/errors.hpp"
#include "greenfn/symgroup.hpp"

namespace greenfn {

namespace {

long pmod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::vector<Cyclotomic> gamma_values(const GroupSpec& spec, const SeriesLabel& series,
                                     const std::vector<SpringerDatum>& data, const NuInputs& nu) {
  std::vector<Cyclotomic> out;
  for (const auto& dat : data) {
    if (!spec.twisted() || series.cuspidal) {
      out.emplace_back(series.d, 1);
      continue;
    }
    long k = 0;
    auto it = nu.find(dat.lambda);
    if (it != nu.end()) {
      k = it->second;
    } else if (series.d != 1 && dat.lambda != Partition::single_row(spec.n)) {
      throw ValidationError("missing nu for lambda = " + dat.lambda.to_string() + " in series " + series.to_string());
    }
    Cyclotomic g = Cyclotomic::root_of_unity(series.d, k);
    if (dat.delta % 2 != 0) g = -g;
    out.push_back(g);
  }
  return out;
}

CycloMatrix x_functions(const OmegaSystem& system, const Y0Table& y0, const std::vector<Cyclotomic>& gammas) {
  if (!system.P) throw ValidationError("x_functions needs a solved system");
  std::size_t k = system.P->size();
  if (y0.rows.size() != k || gammas.size() != k) throw ValidationError("x_functions: dimension mismatch");
  int N = y0.cyclotomic_order;
  CycloMatrix X(k, std::vector<CycloPoly>(y0.columns.size(), CycloPoly(N)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const RatQ& pji = (*system.P)[j][i];
      if (pji.is_zero()) continue;
      const LaurentPoly& p = pji.as_laurent();
      for (std::size_t c = 0; c < y0.columns.size(); ++c) {
        if (y0.values[j][c].is_zero()) continue;
        X[i][c] += CycloPoly(gammas[j] * y0.values[j][c], p);
      }
    }
  }
  return X;
}

GreenTable green_table(const GroupSpec& spec, const SeriesLabel& series, int q_residue, const NuInputs& nu) {
  GreenTable t;
  t.spec = spec;
  t.series = make_series(spec, series.d, series.xi_exponent);
  t.q_residue = q_residue;
  t.cyclotomic_order = t.series.d;
  OmegaSystem sys = solve(omega_matrix(spec, t.series));
  check_integrality(sys);
  Y0Table y0 = y0_table(spec, t.series, q_residue);
  std::vector<Cyclotomic> gammas = gamma_values(spec, t.series, sys.data, nu);
  CycloMatrix X = x_functions(sys, y0, gammas);
  LeviSpec levi = levi_for(spec.n, t.series.d);
  int dim_z = dim_center_of_levi(spec, levi);
  t.rows = partitions_of(levi.m);
  t.columns = y0.columns;
  for (const auto& rho : t.rows) {
    std::vector<CycloPoly> row(t.columns.size(), CycloPoly(t.cyclotomic_order));
    for (std::size_t i = 0; i < sys.data.size(); ++i) {
      const SpringerDatum& dat = sys.data[i];
      long tr = twisted_trace(dat.mu, rho, spec.twisted(), levi.m);
      if (tr == 0) continue;
      // Sign of the normalized complex K[-dim Z_L]: (-1)^(a0 + dim Z_L) = (-1)^dim C.
      long sign = (dat.a0 + dim_z) % 2 == 0 ? 1 : -1;
      LaurentPoly factor = LaurentPoly::monomial((dat.a0 + dat.r) / 2, mpq_class(sign * tr));
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (!X[i][c].is_zero()) row[c] += X[i][c] * factor;
      }
    }
    t.entries.push_back(std::move(row));
  }
  return t;
}

nlohmann::json to_json(const GreenTable& table) {
  nlohmann::json j;
  j["schema"] = "green-table/v1";
  j["group"] = table.spec.name();
  j["series"] = table.series.to_string();
  j["q_residue"] = table.q_residue;
  j["cyclotomic_order"] = table.cyclotomic_order;
  j["row_convention"] = table.spec.twisted() ? "cycle type of w*w0" : "cycle type of w";
  j["rows"] = nlohmann::json::array();
  for (const auto& r : table.rows) j["rows"].push_back(r.to_string());
  j["columns"] = nlohmann::json::array();
  for (const auto& c : table.columns) j["columns"].push_back(c.label());
  j["entries"] = nlohmann::json::array();
  for (const auto& row : table.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    j["entries"].push_back(r);
  }
  return j;
}

std::string to_csv(const GreenTable& table) {
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  std::ostringstream os;
  os << "w";
  for (const auto& c : table.columns) os << "," << quote(c.label());
  os << "\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << quote(table.rows[r].to_string());
    for (const auto& x : table.entries[r]) os << "," << quote(x.to_string());
    os << "\n";
  }
  return os.str();
}

bool twisted_rows_consistent(const GreenTable& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    ComponentGroup cg = component_group(table.spec, table.columns[c].lambda, table.q_residue);
    long t = cg.frobenius_multiplier;
    int classes = static_cast<int>(twist_classes(cg).size());
    int image = static_cast<int>(pmod(t * table.columns[c].twist, classes));
    std::size_t target = c;
    for (std::size_t c2 = 0; c2 < table.columns.size(); ++c2) {
      if (table.columns[c2].lambda == table.columns[c].lambda && table.columns[c2].twist == image) target = c2;
    }
    long tg = pmod(t, table.cyclotomic_order);
    if (table.cyclotomic_order == 1) tg = 1;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      if (table.entries[r][c].galois(tg) != table.entries[r][target]) return false;
    }
  }
  return true;
}

bool EnnolaReport::passed() const {
  for (const auto& i : items) {
    if (!i.pass) return false;
  }
  return true;
}

namespace {

EnnolaItem compare_matrices(const std::string& name, const RatMatrix& twisted, const RatMatrix& split,
                            const std::vector<SpringerDatum>& data) {
  EnnolaItem item{name, true, "all entries agree"};
  for (std::size_t i = 0; i < twisted.size(); ++i) {
    for (std::size_t j = 0; j < twisted.size(); ++j) {
      RatQ expect = split[i][j].substitute_neg_q();
      if ((data[i].delta + data[j].delta) % 2 != 0) expect = -expect;
      if (twisted[i][j] != expect) {
        item.pass = false;
        item.detail = "entry (" + data[i].label() + ", " + data[j].label() + "): " + twisted[i][j].to_string() +
                      " vs " + expect.to_string();
        return item;
      }
    }
  }
  return item;
}

}  // namespace

EnnolaReport ennola_check(GroupKind kind, int n, int p, const SeriesLabel& series, int q_residue, const NuInputs& nu) {
  EnnolaReport report;
  GroupSpec tw{kind, FrobeniusKind::NonSplit, n, p};
  GroupSpec sp{kind, FrobeniusKind::Split, n, p};
  OmegaSystem a = solve(omega_matrix(tw, series));
  OmegaSystem b = solve(omega_matrix(sp, series));
  report.items.push_back(compare_matrices("omega", a.omega, b.omega, a.data));
  report.items.push_back(compare_matrices("P", *a.P, *b.P, a.data));
  report.items.push_back(compare_matrices("Lambda", *a.Lambda, *b.Lambda, a.data));

  EnnolaItem table_item{"table", true, "all entries agree"};
  int np = kind == GroupKind::GL ? 1 : prime_to_p_part(n, p);
  int split_residue = np > 1 ? static_cast<int>(pmod(-q_residue, np)) : 0;
  GreenTable qt = green_table(tw, series, q_residue, nu);
  GreenTable qs = green_table(sp, series, split_residue, NuInputs{});
  if (qt.rows != qs.rows || qt.columns.size() != qs.columns.size()) {
    table_item.pass = false;
    table_item.detail = "row or column sets differ";
  } else {
    for (std::size_t c = 0; c < qt.columns.size() && table_item.pass; ++c) {
      if (qt.columns[c].label() != qs.columns[c].label()) {
        table_item.pass = false;
        table_item.detail = "column " + qt.columns[c].label() + " has no partner";
        break;
      }
      long k = 0;
      auto it = nu.find(qt.columns[c].lambda);
      if (it != nu.end()) k = it->second;
      CycloPoly nu_poly(Cyclotomic::root_of_unity(qt.cyclotomic_order, k), LaurentPoly(1));
      for (std::size_t r = 0; r < qt.rows.size(); ++r) {
        CycloPoly expect = nu_poly * qs.entries[r][c].substitute_neg_q();
        if (qt.entries[r][c] != expect) {
          table_item.pass = false;
          table_item.detail = "row " + qt.rows[r].to_string() + ", column " + qt.columns[c].label() + ": " +
                              qt.entries[r][c].to_string() + " vs " + expect.to_string();
          break;
        }
      }
    }
  }
  report.items.push_back(table_item);
  return report;
}

}  // namespace greenfn
