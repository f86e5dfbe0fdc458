#include "greenfn/solver.hpp"

#include <set>

#include "greenfn/errors.hpp"
#include "greenfn/symgroup.hpp"

namespace greenfn {

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, std::vector<RatQ>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = RatQ(1);
  return m;
}

RatMatrix transpose(const RatMatrix& a) {
  if (a.empty()) return {};
  RatMatrix t(a[0].size(), std::vector<RatQ>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw ValidationError("matrix dimensions do not agree");
  RatMatrix c(a.size(), std::vector<RatQ>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

RatMatrix inverse(const RatMatrix& a) {
  std::size_t n = a.size();
  RatMatrix m = a;
  RatMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw ValidationError("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    RatQ s = RatQ(1) / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      RatQ f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

OmegaSystem omega_matrix(const GroupSpec& spec, const SeriesLabel& series) {
  OmegaSystem sys;
  sys.series = spec.name() + ":" + series.to_string();
  sys.data = enumerate_block(spec, series);
  LeviSpec levi = levi_for(spec.n, series.d);
  bool tw = spec.twisted();
  std::size_t k = sys.data.size();
  for (std::size_t i = 0; i < k; ++i) sys.indices.push_back({sys.data[i].label(), sys.data[i].dim_C, static_cast<int>(i)});

  RatQ order = group_order(spec);
  const CharacterTable& table = character_table(levi.m);
  // Class sums: rho runs over cycle types of w (split) or of w*w0 (non-split).
  std::vector<RatQ> weight;
  for (const auto& rho : table.labels()) {
    RatQ torus = levi_torus_order(spec, levi, rho);
    weight.push_back(order / torus / RatQ(static_cast<long>(centralizer_size(rho))));
  }
  sys.omega.assign(k, std::vector<RatQ>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      RatQ acc;
      for (std::size_t c = 0; c < table.labels().size(); ++c) {
        long ti = twisted_trace(sys.data[i].mu, table.labels()[c], tw, levi.m);
        long tj = twisted_trace(sys.data[j].mu, table.labels()[c], tw, levi.m);
        if (ti * tj != 0) acc += weight[c] * RatQ(ti * tj);
      }
      int e = sys.data[i].a0 + sys.data[j].a0;
      if (e % 2 != 0) throw ConsistencyError("a0 + a0' is odd");
      acc *= RatQ::q(-dim_group(spec) - e / 2);
      if (!acc.is_polynomial()) throw ConsistencyError("omega entry is not a polynomial: " + acc.to_string());
      sys.omega[i][j] = acc;
      sys.omega[j][i] = acc;
    }
  }
  return sys;
}

std::vector<std::pair<std::size_t, std::size_t>> block_ranges(const OmegaSystem& system) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= system.indices.size(); ++i) {
    if (i == system.indices.size() || system.indices[i].block != system.indices[start].block) {
      out.emplace_back(start, i);
      start = i;
    }
  }
  return out;
}

namespace {

RatMatrix sub(const RatMatrix& m, std::pair<std::size_t, std::size_t> r, std::pair<std::size_t, std::size_t> c) {
  RatMatrix s(r.second - r.first, std::vector<RatQ>(c.second - c.first));
  for (std::size_t i = r.first; i < r.second; ++i) {
    for (std::size_t j = c.first; j < c.second; ++j) s[i - r.first][j - c.first] = m[i][j];
  }
  return s;
}

void put(RatMatrix& m, std::pair<std::size_t, std::size_t> r, std::pair<std::size_t, std::size_t> c, const RatMatrix& s) {
  for (std::size_t i = r.first; i < r.second; ++i) {
    for (std::size_t j = c.first; j < c.second; ++j) m[i][j] = s[i - r.first][j - c.first];
  }
}

void subtract_in_place(RatMatrix& a, const RatMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= b[i][j];
  }
}

void check_shape(const OmegaSystem& s) {
  std::size_t n = s.omega.size();
  if (n == 0) throw ValidationError("empty system");
  if (s.indices.size() != n) throw ValidationError("index list and omega differ in size");
  for (const auto& row : s.omega) {
    if (row.size() != n) throw ValidationError("omega is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s.omega[i][j] != s.omega[j][i]) {
        throw ValidationError("omega is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  std::set<int> seen;
  auto ranges = block_ranges(s);
  int last_dim = 0;
  for (std::size_t b = 0; b < ranges.size(); ++b) {
    const auto& first = s.indices[ranges[b].first];
    if (!seen.insert(first.block).second) throw ValidationError("block " + std::to_string(first.block) + " is not contiguous");
    for (std::size_t i = ranges[b].first; i < ranges[b].second; ++i) {
      if (s.indices[i].dim_C != first.dim_C) throw ValidationError("class dimension varies inside block " + std::to_string(first.block));
    }
    if (b > 0 && first.dim_C < last_dim) throw ValidationError("blocks are not ordered by increasing class dimension");
    last_dim = first.dim_C;
  }
}

}  // namespace

OmegaSystem solve(OmegaSystem system) {
  check_shape(system);
  std::size_t n = system.omega.size();
  auto ranges = block_ranges(system);
  RatMatrix P(n, std::vector<RatQ>(n));
  RatMatrix L(n, std::vector<RatQ>(n));
  for (std::size_t a = 0; a < ranges.size(); ++a) {
    RatMatrix lam = sub(system.omega, ranges[a], ranges[a]);
    for (std::size_t b = 0; b < a; ++b) {
      RatMatrix pba = sub(P, ranges[b], ranges[a]);
      subtract_in_place(lam, multiply(multiply(transpose(pba), sub(L, ranges[b], ranges[b])), pba));
    }
    RatMatrix lam_inv;
    try {
      lam_inv = inverse(lam);
    } catch (const ValidationError&) {
      throw ValidationError("non-singular block-diagonal violated at block " + std::to_string(a));
    }
    put(L, ranges[a], ranges[a], lam);
    put(P, ranges[a], ranges[a], identity_matrix(ranges[a].second - ranges[a].first));
    for (std::size_t c = a + 1; c < ranges.size(); ++c) {
      RatMatrix rhs = sub(system.omega, ranges[a], ranges[c]);
      for (std::size_t b = 0; b < a; ++b) {
        RatMatrix left = multiply(transpose(sub(P, ranges[b], ranges[a])), sub(L, ranges[b], ranges[b]));
        subtract_in_place(rhs, multiply(left, sub(P, ranges[b], ranges[c])));
      }
      put(P, ranges[a], ranges[c], multiply(lam_inv, rhs));
    }
  }
  system.P = std::move(P);
  system.Lambda = std::move(L);
  if (!satisfies_equation(system)) throw ConsistencyError("solution fails tP Lambda P = Omega");
  return system;
}

bool satisfies_equation(const OmegaSystem& system) {
  if (!system.P || !system.Lambda) return false;
  return multiply(multiply(transpose(*system.P), *system.Lambda), *system.P) == system.omega;
}

void check_integrality(const OmegaSystem& system) {
  if (!system.P || !system.Lambda) throw ValidationError("system is not solved");
  for (const RatMatrix* m : {&*system.P, &*system.Lambda}) {
    for (const auto& row : *m) {
      for (const auto& x : row) {
        if (!x.is_integral_polynomial()) throw ConsistencyError("non-integral entry " + x.to_string() + " in " + system.series);
      }
    }
  }
}

namespace {

nlohmann::json matrix_json(const RatMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(r);
  }
  return rows;
}

RatMatrix matrix_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an array of rows");
  RatMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw ValidationError(what + " rows must be arrays");
    std::vector<RatQ> r;
    for (const auto& x : row) {
      if (!x.is_string()) throw ValidationError(what + " entries must be strings");
      r.push_back(RatQ::parse(x.get<std::string>()));
    }
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

nlohmann::json to_json(const OmegaSystem& system) {
  nlohmann::json j;
  j["schema"] = "omega-system/v1";
  j["series"] = system.series;
  j["indices"] = nlohmann::json::array();
  for (const auto& idx : system.indices) {
    j["indices"].push_back({{"label", idx.label}, {"dim_C", idx.dim_C}, {"block", idx.block}});
  }
  j["omega"] = matrix_json(system.omega);
  if (system.P) j["P"] = matrix_json(*system.P);
  if (system.Lambda) j["Lambda"] = matrix_json(*system.Lambda);
  return j;
}

OmegaSystem load_external_system(const nlohmann::json& document) {
  if (!document.is_object()) throw ValidationError("system document must be a JSON object");
  if (document.contains("schema") && document["schema"] != "omega-system/v1") {
    throw ValidationError("unsupported schema " + document["schema"].dump());
  }
  for (const char* key : {"series", "indices", "omega"}) {
    if (!document.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  }
  OmegaSystem s;
  if (!document["series"].is_string()) throw ValidationError("series must be a string");
  s.series = document["series"].get<std::string>();
  const auto& idx = document["indices"];
  if (!idx.is_array() || idx.empty()) throw ValidationError("indices must be a non-empty array");
  for (const auto& e : idx) {
    if (!e.is_object() || !e.contains("label") || !e.contains("dim_C") || !e.contains("block") || !e["label"].is_string() ||
        !e["dim_C"].is_number_integer() || !e["block"].is_number_integer()) {
      throw ValidationError("each index needs string label and integer dim_C, block");
    }
    s.indices.push_back({e["label"].get<std::string>(), e["dim_C"].get<int>(), e["block"].get<int>()});
  }
  s.omega = matrix_from_json(document["omega"], "omega");
  check_shape(s);
  return s;
}

}  // namespace greenfn
