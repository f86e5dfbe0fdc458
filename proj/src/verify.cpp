#include "greenfn/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "greenfn/errors.hpp"
#include "greenfn/greentab.hpp"
#include "greenfn/kostka.hpp"
#include "greenfn/oracle.hpp"
#include "greenfn/reductive.hpp"
#include "greenfn/solver.hpp"
#include "greenfn/springer.hpp"
#include "greenfn/symgroup.hpp"

namespace greenfn {

namespace {

/// Collects the first few failures of a criterion.
class Findings {
 public:
  void fail(const std::string& what) {
    ++count_;
    if (count_ <= 3) messages_.push_back(what);
  }
  bool ok() const { return count_ == 0; }
  std::string summary(const std::string& success) const {
    if (ok()) return success;
    std::ostringstream os;
    os << count_ << " failure(s): ";
    for (std::size_t i = 0; i < messages_.size(); ++i) os << (i ? "; " : "") << messages_[i];
    return os.str();
  }

 private:
  long count_ = 0;
  std::vector<std::string> messages_;
};

int bound(int builtin, int max_n) { return max_n > 0 ? std::min(builtin, max_n) : builtin; }

const char* kind_name(GroupKind k) { return k == GroupKind::GL ? "GL" : "SL"; }

std::string criterion1(int max_n, Findings& f) {
  auto start = std::chrono::steady_clock::now();
  int systems = 0;
  for (GroupKind kind : {GroupKind::GL, GroupKind::SL}) {
    for (FrobeniusKind fr : {FrobeniusKind::Split, FrobeniusKind::NonSplit}) {
      for (int n = 1; n <= bound(6, max_n); ++n) {
        GroupSpec spec{kind, fr, n, 0};
        for (const auto& series : enumerate_series(kind, n, 0)) {
          std::string where = spec.name() + ":" + series.to_string();
          try {
            OmegaSystem sys = solve(omega_matrix(spec, series));
            ++systems;
            if (!satisfies_equation(sys)) f.fail(where + " equation fails");
            const RatMatrix& P = *sys.P;
            const RatMatrix& L = *sys.Lambda;
            for (std::size_t i = 0; i < P.size(); ++i) {
              if (P[i][i] != RatQ(1)) f.fail(where + " P diagonal not 1");
              if (L[i][i].is_zero()) f.fail(where + " Lambda has a zero diagonal entry");
              for (std::size_t j = 0; j < P.size(); ++j) {
                if (i != j && !L[i][j].is_zero()) f.fail(where + " Lambda not diagonal");
                if (i > j && !P[i][j].is_zero()) f.fail(where + " P not upper unitriangular");
              }
            }
            for (const auto& [b, e] : block_ranges(sys)) {
              if (e - b != 1) f.fail(where + " block of size " + std::to_string(e - b));
            }
          } catch (const std::exception& ex) {
            f.fail(where + ": " + ex.what());
          }
        }
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 60) f.fail("runtime " + std::to_string(secs) + " s exceeds 60 s");
  return std::to_string(systems) + " systems solved exactly";
}

std::string criterion2(int max_n, Findings& f) {
  int checks = 0;
  for (int n = 1; n <= bound(4, max_n); ++n) {
    GroupSpec spec{GroupKind::GL, FrobeniusKind::Split, n, 0};
    SeriesLabel series = make_series(spec, 1);
    GreenTable table = green_table(spec, series, default_q_residue(spec), {});
    auto row = static_cast<std::size_t>(std::find(table.rows.begin(), table.rows.end(), Partition::single_column(n)) -
                                        table.rows.begin());
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const Partition& lambda = table.columns[c].lambda;
      for (int q : {2, 3, 4, 5}) {
        Cyclotomic value = table.entries[row][c].evaluate(q);
        long count = count_flags(n, q, lambda, 1);
        ++checks;
        if (!value.is_rational() || value.rational_part() != count) {
          f.fail("GL" + std::to_string(n) + " lambda=" + lambda.to_string() + " q=" + std::to_string(q) + ": " +
                 value.to_string() + " vs " + std::to_string(count));
        }
      }
    }
  }
  return std::to_string(checks) + " entries equal flag counts";
}

std::string criterion3(int max_n, Findings& f) {
  const std::vector<long> sample{2, 3, 4, 5, 7, 8, 9, 11, 13};
  int cases = 0;
  for (int n = 1; n <= bound(6, max_n); ++n) {
    for (int d : {2, 3}) {
      if (n % d != 0) continue;
      GroupSpec spec{GroupKind::SL, FrobeniusKind::Split, n, 0};
      LeviSpec levi = levi_for(n, d);
      for (const auto& lambda : partitions_of(n)) {
        auto mu = d_quotient(lambda, d);
        if (!mu) continue;
        ++cases;
        int degree = a0_r(spec, levi, lambda).a0_plus_r / 2;
        std::vector<std::pair<long, mpq_class>> points;
        for (std::size_t i = 0; i < static_cast<std::size_t>(degree) + 2; ++i) {
          points.emplace_back(sample[i], count_flags(n, static_cast<int>(sample[i]), lambda, d));
        }
        Interpolation ip = interpolate_counts(points, degree);
        long dim = character_value(*mu, Partition::single_column(mu->size()));
        std::string where = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " lambda=" + lambda.to_string() +
                            " count " + ip.poly.to_string();
        if (!ip.paving_ok()) {
          std::string diag;
          for (const auto& s : ip.diagnostics) diag += (diag.empty() ? "" : ", ") + s;
          f.fail(where + " (" + diag + ")");
        }
        if (ip.poly.leading() != dim) {
          f.fail(where + " leading coefficient differs from dim chi^" + mu->to_string() + " = " + std::to_string(dim));
        }
      }
    }
  }
  return std::to_string(cases) + " classes interpolate to paving polynomials";
}

std::string criterion4(int max_n, Findings& f) {
  int items = 0;
  for (GroupKind kind : {GroupKind::GL, GroupKind::SL}) {
    for (int n = 1; n <= bound(6, max_n); ++n) {
      GroupSpec tw{kind, FrobeniusKind::NonSplit, n, 0};
      for (const auto& series : enumerate_series(kind, n, 0)) {
        NuInputs nu;
        for (const auto& dat : enumerate_block(tw, series)) nu[dat.lambda] = 0;
        try {
          EnnolaReport report = ennola_check(kind, n, 0, series, default_q_residue(tw), nu);
          for (const auto& item : report.items) {
            ++items;
            if (!item.pass) f.fail(tw.name() + ":" + series.to_string() + " " + item.name + ": " + item.detail);
          }
        } catch (const std::exception& ex) {
          f.fail(tw.name() + ":" + series.to_string() + ": " + ex.what());
        }
      }
    }
  }
  return std::to_string(items) + " comparisons agree";
}

std::string criterion5(int max_n, Findings& f) {
  int tables = 0;
  for (GroupKind kind : {GroupKind::GL, GroupKind::SL}) {
    for (int n = 1; n <= bound(4, max_n); ++n) {
      for (int q : {3, 5, 7}) {
        if (std::gcd(q, n) != 1) continue;
        GroupSpec tw{kind, FrobeniusKind::NonSplit, n, 0};
        int np = kind == GroupKind::GL ? 1 : n;
        int residue = static_cast<int>(q % np);
        for (const auto& series : enumerate_series(kind, n, 0)) {
          if ((q + 1) % series.d != 0) continue;
          std::string where = tw.name() + ":" + series.to_string() + " q=" + std::to_string(q);
          try {
            NuInputs nu;
            for (const auto& dat : enumerate_block(tw, series)) {
              CLambdaInput in;
              in.n = n;
              in.q = q;
              in.lambda = dat.lambda;
              in.d = series.d;
              in.xi_exponent = series.xi_exponent;
              nu[dat.lambda] = compute_c_lambda(in).nu_exponent;
            }
            EnnolaReport report = ennola_check(kind, n, 0, series, residue, nu);
            ++tables;
            for (const auto& item : report.items) {
              if (!item.pass) f.fail(where + " " + item.name + ": " + item.detail);
            }
          } catch (const std::exception& ex) {
            f.fail(where + ": " + ex.what());
          }
        }
      }
    }
  }
  return std::to_string(tables) + " twisted tables match the transformed split tables";
}

std::string criterion6(int max_n, Findings& f) {
  int cases = 0;
  for (int n = 1; n <= bound(4, max_n); ++n) {
    for (int q : {3, 5}) {
      for (int d = 1; d <= n; ++d) {
        if (n % d != 0 || (q + 1) % d != 0) continue;
        CLambdaInput in;
        in.n = n;
        in.q = q;
        in.lambda = Partition::single_row(n);
        in.d = d;
        CLambdaResult r = compute_c_lambda(in);
        ++cases;
        if (r.c_residue != 0 || r.nu != Cyclotomic(d, 1)) {
          f.fail("n=" + std::to_string(n) + " d=" + std::to_string(d) + " q=" + std::to_string(q) + ": c=" +
                 std::to_string(r.c_residue) + " nu=" + r.nu.to_string());
        }
      }
    }
  }
  return std::to_string(cases) + " regular classes give the identity twist";
}

std::string criterion7(int max_n, Findings& f) {
  int identities = 0;
  for (GroupKind kind : {GroupKind::GL, GroupKind::SL}) {
    for (int n = 1; n <= bound(8, max_n); ++n) {
      GroupSpec sp{kind, FrobeniusKind::Split, n, 0};
      GroupSpec tw{kind, FrobeniusKind::NonSplit, n, 0};
      int rank = kind == GroupKind::GL ? n : n - 1;
      RatQ sign = rank % 2 == 0 ? RatQ(1) : RatQ(-1);
      ++identities;
      if (group_order(tw) != sign * group_order(sp).substitute_neg_q()) f.fail(tw.name() + " group order");
      for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        LeviSpec levi = levi_for(n, d);
        RatQ zsign = dim_center_of_levi(sp, levi) % 2 == 0 ? RatQ(1) : RatQ(-1);
        for (const auto& rho : partitions_of(levi.m)) {
          ++identities;
          if (levi_torus_order(tw, levi, rho) != zsign * levi_torus_order(sp, levi, rho).substitute_neg_q()) {
            f.fail(tw.name() + " d=" + std::to_string(d) + " rho=" + rho.to_string());
          }
        }
        if (levi.m > 5) continue;
        Permutation w0 = longest_element(levi.m);
        for (const auto& w : all_permutations(levi.m)) {
          ++identities;
          if (levi_torus_order(tw, levi, compose(w, w0)) != zsign * levi_torus_order(sp, levi, w).substitute_neg_q()) {
            f.fail(tw.name() + " d=" + std::to_string(d) + " w=" + cycle_type(w).to_string());
          }
        }
      }
    }
  }
  return std::to_string(identities) + " order identities hold";
}

std::string criterion8(int max_n, Findings& f) {
  int values = 0;
  for (int m = 1; m <= bound(5, max_n); ++m) {
    for (const auto& mu : partitions_of(m)) {
      for (const auto& rho : partitions_of(m)) {
        ++values;
        long brute = brute_symmetric_character(mu, rho);
        long mn = character_value(mu, rho);
        if (brute != mn) f.fail("chi^" + mu.to_string() + "(" + rho.to_string() + "): " + std::to_string(mn) + " vs " + std::to_string(brute));
      }
    }
  }
  for (int m = 1; m <= bound(7, max_n); ++m) {
    const CharacterTable& t = character_table(m);
    std::size_t k = t.labels().size();
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        mpq_class s = 0;
        for (std::size_t c = 0; c < k; ++c) {
          s += mpq_class(t.value(a, c) * t.value(b, c), static_cast<long>(centralizer_size(t.labels()[c])));
        }
        s.canonicalize();
        if (s != (a == b ? 1 : 0)) f.fail("orthogonality m=" + std::to_string(m));
      }
    }
  }
  return std::to_string(values) + " values match; rows orthonormal";
}

std::string criterion9(int max_n, Findings& f) {
  int checks = 0;
  for (int n = 1; n <= bound(3, max_n); ++n) {
    GroupSpec spec{GroupKind::GL, FrobeniusKind::Split, n, 0};
    for (const auto& lambda : partitions_of(n)) {
      for (int q : {2, 3}) {
        ++checks;
        mpq_class symbolic = centralizer_order(spec, lambda).evaluate(q);
        long brute = brute_centralizer(n, q, lambda);
        if (symbolic != brute) {
          f.fail("lambda=" + lambda.to_string() + " q=" + std::to_string(q) + ": " + symbolic.get_str() + " vs " + std::to_string(brute));
        }
      }
    }
  }
  for (GroupKind kind : {GroupKind::GL, GroupKind::SL}) {
    for (int n = 1; n <= bound(6, max_n); ++n) {
      GroupSpec sp{kind, FrobeniusKind::Split, n, 0};
      GroupSpec tw{kind, FrobeniusKind::NonSplit, n, 0};
      for (const auto& lambda : partitions_of(n)) {
        ++checks;
        int dim_z = class_dims(n, lambda, kind).dim_Z_of_u;
        RatQ sign = dim_z % 2 == 0 ? RatQ(1) : RatQ(-1);
        if (centralizer_order(tw, lambda) != sign * centralizer_order(sp, lambda).substitute_neg_q()) {
          f.fail(std::string(kind_name(kind)) + std::to_string(n) + " lambda=" + lambda.to_string() + " sign relation");
        }
      }
    }
  }
  return std::to_string(checks) + " centralizer checks";
}

struct KostkaConvention {
  std::string name;
  std::function<RatQ(const Partition&, const Partition&)> entry;
};

RatQ inverted(const LaurentPoly& k) {
  LaurentPoly out;
  for (int e = k.low(); !k.is_zero() && e <= k.high(); ++e) {
    if (k.coeff(e) != 0) out += LaurentPoly::monomial(-e, k.coeff(e));
  }
  return RatQ(out);
}

RatQ safe_kostka(const Partition& a, const Partition& b) {
  if (!dominates(a, b)) return RatQ(0);
  return RatQ(kostka_foulkes(a, b));
}

RatQ safe_kostka_inverted(const Partition& a, const Partition& b) {
  if (!dominates(a, b)) return RatQ(0);
  return inverted(kostka_foulkes(a, b));
}

/// Candidates for P(row, col) in terms of K; the row label is the smaller class.
std::vector<KostkaConvention> kostka_conventions() {
  return {
      {"K[row,col](q)", [](const Partition& a, const Partition& b) { return safe_kostka(a, b); }},
      {"K[col,row](q)", [](const Partition& a, const Partition& b) { return safe_kostka(b, a); }},
      {"q^(n(row)-n(col)) K[col,row](1/q)",
       [](const Partition& a, const Partition& b) { return RatQ::q(n_invariant(a) - n_invariant(b)) * safe_kostka_inverted(b, a); }},
      {"q^(n(col)-n(row)) K[row,col](1/q)",
       [](const Partition& a, const Partition& b) { return RatQ::q(n_invariant(b) - n_invariant(a)) * safe_kostka_inverted(a, b); }},
      {"K[row',col'](q)", [](const Partition& a, const Partition& b) { return safe_kostka(transpose(a), transpose(b)); }},
      {"K[col',row'](q)", [](const Partition& a, const Partition& b) { return safe_kostka(transpose(b), transpose(a)); }},
      {"q^(n(row')-n(col')) K[col',row'](1/q)",
       [](const Partition& a, const Partition& b) {
         Partition at = transpose(a), bt = transpose(b);
         return RatQ::q(n_invariant(at) - n_invariant(bt)) * safe_kostka_inverted(bt, at);
       }},
      {"q^(n(col')-n(row')) K[row',col'](1/q)",
       [](const Partition& a, const Partition& b) {
         Partition at = transpose(a), bt = transpose(b);
         return RatQ::q(n_invariant(bt) - n_invariant(at)) * safe_kostka_inverted(at, bt);
       }},
  };
}

bool convention_matches(const KostkaConvention& c, int n) {
  GroupSpec spec{GroupKind::GL, FrobeniusKind::Split, n, 0};
  OmegaSystem sys = solve(omega_matrix(spec, make_series(spec, 1)));
  const RatMatrix& P = *sys.P;
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = 0; j < P.size(); ++j) {
      if (i == j) continue;
      if (P[i][j] != c.entry(sys.data[i].lambda, sys.data[j].lambda)) return false;
    }
  }
  return true;
}

std::string criterion10(int max_n, Findings& f) {
  std::vector<std::string> pinned = kostka_matching_conventions(bound(3, max_n));
  if (pinned.size() != 1) {
    f.fail(std::to_string(pinned.size()) + " conventions match at n <= 3");
    return "";
  }
  for (const auto& c : kostka_conventions()) {
    if (c.name != pinned.front()) continue;
    for (int n = 1; n <= bound(6, max_n); ++n) {
      if (!convention_matches(c, n)) f.fail("convention " + c.name + " fails at n=" + std::to_string(n));
    }
  }
  return "P(row,col) = " + pinned.front() + " through n = " + std::to_string(bound(6, max_n));
}

const std::vector<std::pair<std::string, std::function<std::string(int, Findings&)>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<std::string(int, Findings&)>>> table{
      {"matrix equation", criterion1},
      {"flag-count oracle equivalence", criterion2},
      {"paving positivity and dimension", criterion3},
      {"Ennola suite", criterion4},
      {"twisted table identity with computed nu", criterion5},
      {"nu normalization", criterion6},
      {"order identities", criterion7},
      {"character-table oracle", criterion8},
      {"centralizer orders", criterion9},
      {"Kostka-Foulkes cross-check", criterion10},
  };
  return table;
}

}  // namespace

std::vector<std::string> kostka_matching_conventions(int max_n) {
  std::vector<std::string> out;
  for (const auto& c : kostka_conventions()) {
    bool all = true;
    for (int n = 1; n <= max_n && all; ++n) all = convention_matches(c, n);
    if (all) out.push_back(c.name);
  }
  return out;
}

CriterionResult run_criterion(int id, int max_n) {
  if (id < 1 || id > kCriterionCount) throw ValidationError("criterion must be between 1 and 10, got " + std::to_string(id));
  const auto& [title, body] = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult result;
  result.id = id;
  result.title = title;
  auto start = std::chrono::steady_clock::now();
  Findings findings;
  std::string success;
  try {
    success = body(max_n, findings);
  } catch (const std::exception& ex) {
    findings.fail(std::string("exception: ") + ex.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.pass = findings.ok();
  result.detail = findings.summary(success);
  return result;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  std::vector<int> ids = options.only;
  if (ids.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) {
    if (id < 1 || id > kCriterionCount) throw ValidationError("criterion must be between 1 and 10, got " + std::to_string(id));
  }
  std::vector<CriterionResult> results(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) results[i] = run_criterion(ids[i], options.max_n);
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(ids.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return "criterion " + std::to_string(r.id) + " " + (r.pass ? "PASS" : "FAIL") + " " + r.title + " (" + secs +
         " s): " + r.detail;
}

}  // namespace greenfn
