#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "greenfn/errors.hpp"
#include "greenfn/greentab.hpp"
#include "greenfn/oracle.hpp"
#include "greenfn/solver.hpp"
#include "greenfn/springer.hpp"
#include "greenfn/symgroup.hpp"
#include "greenfn/verify.hpp"

using namespace greenfn;
using nlohmann::json;

namespace {

struct JobConfig {
  std::string kind = "gl";
  std::string frobenius = "split";
  int n = 0;
  int p = 0;
  int series = 1;
  int xi = 1;
  int q_residue = -1;
  std::string nu;
  int nu_oracle_q = 0;
  std::string format = "json";
  std::string output;
};

void add_group_options(CLI::App* cmd, JobConfig& c, bool with_frobenius = true) {
  cmd->add_option("--kind", c.kind, "gl or sl")->check(CLI::IsMember({"gl", "sl"}));
  if (with_frobenius) cmd->add_option("--frobenius", c.frobenius, "split or nonsplit")->check(CLI::IsMember({"split", "nonsplit"}));
  cmd->add_option("--n", c.n, "rank parameter")->required();
  cmd->add_option("--p", c.p, "characteristic, 0 for one prime to n");
}

void add_series_options(CLI::App* cmd, JobConfig& c) {
  cmd->add_option("--series", c.series, "d of the series");
  cmd->add_option("--xi", c.xi, "exponent of the central character");
}

void add_output_options(CLI::App* cmd, JobConfig& c, bool csv) {
  if (csv) cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", c.output, "write to this file instead of stdout");
}

GroupSpec group_of(const JobConfig& c) {
  GroupSpec s;
  s.kind = c.kind == "sl" ? GroupKind::SL : GroupKind::GL;
  s.frobenius = c.frobenius == "nonsplit" ? FrobeniusKind::NonSplit : FrobeniusKind::Split;
  s.n = c.n;
  s.p = c.p;
  validate(s);
  return s;
}

int q_residue_of(const JobConfig& c, const GroupSpec& s) {
  int np = s.kind == GroupKind::GL ? 1 : prime_to_p_part(s.n, s.p);
  if (c.nu_oracle_q > 0) return np > 1 ? c.nu_oracle_q % np : 0;
  if (c.q_residue >= 0) return np > 1 ? c.q_residue % np : 0;
  return default_q_residue(s);
}

/// "2,2=1;4=0": nu for lambda is z_d^k.
NuInputs parse_nu(const std::string& text) {
  NuInputs out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("nu entry '" + item + "' is not of the form lambda=k");
    long k = 0;
    try {
      k = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ValidationError("nu exponent in '" + item + "' is not an integer");
    }
    out[Partition::parse(item.substr(0, eq))] = k;
  }
  return out;
}

NuInputs nu_inputs(const JobConfig& c, const GroupSpec& s, const SeriesLabel& series) {
  NuInputs nu = parse_nu(c.nu);
  if (c.nu_oracle_q <= 0) return nu;
  for (const auto& dat : enumerate_block(s, series)) {
    if (nu.count(dat.lambda)) continue;
    CLambdaInput in;
    in.n = s.n;
    in.q = c.nu_oracle_q;
    in.lambda = dat.lambda;
    in.d = series.d;
    in.frobenius = s.frobenius;
    in.xi_exponent = series.xi_exponent;
    nu[dat.lambda] = compute_c_lambda(in).nu_exponent;
  }
  return nu;
}

void emit(const JobConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw ValidationError("cannot open output file " + c.output);
  out << text;
}

std::string matrix_csv(const std::vector<SystemIndex>& idx, const RatMatrix& m) {
  std::ostringstream os;
  os << "index";
  for (const auto& i : idx) os << ",\"" << i.label << "\"";
  os << "\n";
  for (std::size_t r = 0; r < m.size(); ++r) {
    os << "\"" << idx[r].label << "\"";
    for (const auto& x : m[r]) os << ",\"" << x.to_string() << "\"";
    os << "\n";
  }
  return os.str();
}

std::string system_output(const JobConfig& c, const OmegaSystem& s) {
  if (c.format == "json") return to_json(s).dump(2) + "\n";
  std::string out = "# omega\n" + matrix_csv(s.indices, s.omega);
  if (s.P) out += "# P\n" + matrix_csv(s.indices, *s.P);
  if (s.Lambda) out += "# Lambda\n" + matrix_csv(s.indices, *s.Lambda);
  return out;
}

json datum_json(const SpringerDatum& d) {
  return {{"lambda", d.lambda.to_string()}, {"rho_exponent", d.rho_exponent}, {"component_order", d.component_order},
          {"mu", d.mu.to_string()},         {"a_E", d.a_E},                   {"d_u", d.d_u},
          {"delta", d.delta},               {"a0", d.a0},                     {"r", d.r},
          {"dim_C", d.dim_C}};
}

std::string run_series(const JobConfig& c) {
  GroupSpec s = group_of(c);
  auto list = enumerate_series(s.kind, s.n, s.p);
  if (c.format == "csv") {
    std::string out = "d,xi_exponent,cuspidal\n";
    for (const auto& x : list) out += std::to_string(x.d) + "," + std::to_string(x.xi_exponent) + "," + (x.cuspidal ? "true" : "false") + "\n";
    return out;
  }
  json j = json::array();
  for (const auto& x : list) j.push_back({{"d", x.d}, {"xi_exponent", x.xi_exponent}, {"cuspidal", x.cuspidal}});
  return j.dump(2) + "\n";
}

std::string run_block(const JobConfig& c) {
  GroupSpec s = group_of(c);
  SeriesLabel series = make_series(s, c.series, c.xi);
  auto block = enumerate_block(s, series);
  if (c.format == "csv") {
    std::string out = "lambda,rho_exponent,component_order,mu,a_E,d_u,delta,a0,r,dim_C\n";
    for (const auto& d : block) {
      out += "\"" + d.lambda.to_string() + "\"," + std::to_string(d.rho_exponent) + "," + std::to_string(d.component_order) +
             ",\"" + d.mu.to_string() + "\"," + std::to_string(d.a_E) + "," + std::to_string(d.d_u) + "," +
             std::to_string(d.delta) + "," + std::to_string(d.a0) + "," + std::to_string(d.r) + "," + std::to_string(d.dim_C) + "\n";
    }
    return out;
  }
  json j{{"group", s.name()}, {"series", series.to_string()}, {"cuspidal", series.cuspidal}, {"data", json::array()}};
  for (const auto& d : block) j["data"].push_back(datum_json(d));
  return j.dump(2) + "\n";
}

std::string run_omega(const JobConfig& c) {
  GroupSpec s = group_of(c);
  return system_output(c, omega_matrix(s, make_series(s, c.series, c.xi)));
}

std::string run_solve(const JobConfig& c, const std::string& external) {
  if (external.empty()) {
    GroupSpec s = group_of(c);
    return system_output(c, solve(omega_matrix(s, make_series(s, c.series, c.xi))));
  }
  std::ifstream in(external);
  if (!in) throw ValidationError("cannot open " + external);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON in ") + external + ": " + e.what());
  }
  return system_output(c, solve(load_external_system(doc)));
}

std::string run_green(const JobConfig& c) {
  GroupSpec s = group_of(c);
  SeriesLabel series = make_series(s, c.series, c.xi);
  GreenTable t = green_table(s, series, q_residue_of(c, s), nu_inputs(c, s, series));
  return c.format == "csv" ? to_csv(t) : to_json(t).dump(2) + "\n";
}

std::string run_ennola(const JobConfig& c) {
  JobConfig tw = c;
  tw.frobenius = "nonsplit";
  GroupSpec s = group_of(tw);
  SeriesLabel series = make_series(s, c.series, c.xi);
  int np = s.kind == GroupKind::GL ? 1 : prime_to_p_part(s.n, s.p);
  int qr = c.q_residue >= 0 || c.nu_oracle_q > 0 ? q_residue_of(c, s) : (np > 1 ? np - 1 : 0);
  NuInputs nu = nu_inputs(tw, s, series);
  EnnolaReport r = ennola_check(s.kind, s.n, s.p, series, qr, nu);
  json j{{"group", s.name()}, {"series", series.to_string()}, {"q_residue", qr}, {"passed", r.passed()}, {"items", json::array()}};
  for (const auto& i : r.items) j["items"].push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
  return j.dump(2) + "\n";
}

template <typename F>
std::string timed(const json& input, F&& body) {
  auto start = std::chrono::steady_clock::now();
  json count = body();
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return json{{"input", input}, {"count", count}, {"runtime_ms", ms}}.dump(2) + "\n";
}

std::string character_table_csv(int m) {
  const CharacterTable& t = character_table(m);
  std::ostringstream os;
  os << "mu";
  for (const auto& rho : t.labels()) os << ",\"" << rho.to_string() << "\"";
  os << "\n";
  for (std::size_t i = 0; i < t.labels().size(); ++i) {
    os << "\"" << t.labels()[i].to_string() << "\"";
    for (std::size_t j = 0; j < t.labels().size(); ++j) os << "," << t.value(i, j);
    os << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Green functions of GL_n and SL_n"};
  app.require_subcommand(1);
  JobConfig cfg;
  std::function<std::string()> action;

  auto* series = app.add_subcommand("series", "list the series of the group");
  add_group_options(series, cfg, false);
  add_output_options(series, cfg, true);
  series->callback([&] { action = [&] { return run_series(cfg); }; });

  auto* block = app.add_subcommand("block", "index set of one series in solver order");
  add_group_options(block, cfg);
  add_series_options(block, cfg);
  add_output_options(block, cfg, true);
  block->callback([&] { action = [&] { return run_block(cfg); }; });

  auto* omega = app.add_subcommand("omega", "omega matrix of one series");
  add_group_options(omega, cfg);
  add_series_options(omega, cfg);
  add_output_options(omega, cfg, true);
  omega->callback([&] { action = [&] { return run_omega(cfg); }; });

  std::string external;
  auto* solve_cmd = app.add_subcommand("solve", "solve tP Lambda P = Omega");
  solve_cmd->add_option("--external", external, "omega-system/v1 document to solve");
  solve_cmd->add_option("--kind", cfg.kind)->check(CLI::IsMember({"gl", "sl"}));
  solve_cmd->add_option("--frobenius", cfg.frobenius)->check(CLI::IsMember({"split", "nonsplit"}));
  solve_cmd->add_option("--n", cfg.n);
  solve_cmd->add_option("--p", cfg.p);
  add_series_options(solve_cmd, cfg);
  add_output_options(solve_cmd, cfg, true);
  solve_cmd->callback([&] {
    if (external.empty() && cfg.n == 0) throw CLI::ValidationError("solve", "needs --external or --n");
    action = [&] { return run_solve(cfg, external); };
  });

  auto* green = app.add_subcommand("green", "generalized Green function table");
  add_group_options(green, cfg);
  add_series_options(green, cfg);
  green->add_option("--q-residue", cfg.q_residue, "q modulo n'");
  green->add_option("--nu", cfg.nu, "nu exponents, e.g. \"2,2=1;4=0\"");
  green->add_option("--nu-oracle", cfg.nu_oracle_q, "compute missing nu at this odd prime power q");
  add_output_options(green, cfg, true);
  green->callback([&] { action = [&] { return run_green(cfg); }; });

  auto* ennola = app.add_subcommand("ennola", "compare non-split and split data under q -> -q");
  add_group_options(ennola, cfg, false);
  add_series_options(ennola, cfg);
  ennola->add_option("--q-residue", cfg.q_residue, "q modulo n' for the non-split group");
  ennola->add_option("--nu", cfg.nu, "nu exponents, e.g. \"2,2=1;4=0\"");
  ennola->add_option("--nu-oracle", cfg.nu_oracle_q, "compute missing nu at this odd prime power q");
  add_output_options(ennola, cfg, false);
  ennola->callback([&] { action = [&] { return run_ennola(cfg); }; });

  auto* oracle = app.add_subcommand("oracle", "brute-force finite field oracles");
  oracle->require_subcommand(1);
  int on = 0, oq = 0, od = 1;
  std::string olambda, orho, osigns, ofrob = "nonsplit";
  bool ohist = false;

  auto* flags = oracle->add_subcommand("flags", "count d-step flags with regular quotients");
  flags->add_option("--n", on)->required();
  flags->add_option("--q", oq)->required();
  flags->add_option("--lambda", olambda)->required();
  flags->add_option("--d", od);
  add_output_options(flags, cfg, false);
  flags->callback([&] {
    action = [&] {
      Partition l = Partition::parse(olambda);
      return timed({{"n", on}, {"q", oq}, {"lambda", l.to_string()}, {"d", od}}, [&] { return count_flags(on, oq, l, od); });
    };
  });

  auto* cent = oracle->add_subcommand("centralizer", "centralizer order in GL_n(F_q)");
  cent->add_option("--n", on)->required();
  cent->add_option("--q", oq)->required();
  cent->add_option("--lambda", olambda)->required();
  add_output_options(cent, cfg, false);
  cent->callback([&] {
    action = [&] {
      Partition l = Partition::parse(olambda);
      return timed({{"n", on}, {"q", oq}, {"lambda", l.to_string()}}, [&] { return brute_centralizer(on, oq, l); });
    };
  });

  auto* clam = oracle->add_subcommand("clambda", "class of c_lambda and nu");
  clam->add_option("--n", on)->required();
  clam->add_option("--q", oq)->required();
  clam->add_option("--lambda", olambda)->required();
  clam->add_option("--d", od);
  clam->add_option("--xi", cfg.xi);
  clam->add_option("--frobenius", ofrob)->check(CLI::IsMember({"split", "nonsplit"}));
  clam->add_option("--signs", osigns, "hermitian form signs, e.g. \"1,-1\"");
  clam->add_flag("--histogram", ohist);
  add_output_options(clam, cfg, false);
  clam->callback([&] {
    action = [&] {
      CLambdaInput in;
      in.n = on;
      in.q = oq;
      in.lambda = Partition::parse(olambda);
      in.d = od;
      in.xi_exponent = cfg.xi;
      in.frobenius = ofrob == "split" ? FrobeniusKind::Split : FrobeniusKind::NonSplit;
      in.histogram = ohist;
      std::stringstream ss(osigns);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          in.form_signs.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw ValidationError("bad form sign '" + tok + "'");
        }
      }
      json input{{"n", on}, {"q", oq}, {"lambda", in.lambda.to_string()}, {"d", od}, {"xi", cfg.xi}, {"frobenius", ofrob}};
      return timed(input, [&] {
        CLambdaResult r = compute_c_lambda(in);
        json out{{"c_residue", r.c_residue},
                 {"nu_exponent", r.nu_exponent},
                 {"nu", r.nu.to_string()},
                 {"standard_flag", r.standard_flag},
                 {"normalization_ambiguous", r.normalization_ambiguous},
                 {"points_examined", r.points_examined}};
        if (ohist) {
          json h = json::object();
          for (auto [k, v] : r.histogram) h[std::to_string(k)] = v;
          out["histogram"] = h;
        }
        return out;
      });
    };
  });

  auto* chr = oracle->add_subcommand("char", "symmetric group character by polytabloids");
  chr->add_option("--mu", olambda)->required();
  chr->add_option("--rho", orho)->required();
  add_output_options(chr, cfg, false);
  chr->callback([&] {
    action = [&] {
      Partition mu = Partition::parse(olambda);
      Partition rho = Partition::parse(orho);
      return timed({{"mu", mu.to_string()}, {"rho", rho.to_string()}}, [&] { return brute_symmetric_character(mu, rho); });
    };
  });

  int table_m = 0;
  auto* chartable = app.add_subcommand("chartable", "character table of S_m as CSV");
  chartable->add_option("--m", table_m)->required()->check(CLI::Range(1, 20));
  add_output_options(chartable, cfg, false);
  chartable->callback([&] { action = [&] { return character_table_csv(table_m); }; });

  std::string suite = "all";
  VerifyOptions vopt;
  bool verify_failed = false;
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"all"}));
  verify->add_option("--max-n", vopt.max_n)->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", vopt.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--criterion", vopt.only)->check(CLI::Range(1, kCriterionCount));
  add_output_options(verify, cfg, false);
  verify->callback([&] {
    action = [&] {
      std::string out;
      for (const auto& r : run_acceptance(vopt)) {
        out += format_result(r) + "\n";
        verify_failed = verify_failed || !r.pass;
      }
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    emit(cfg, action());
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return verify_failed ? 2 : 0;
}
