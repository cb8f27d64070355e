// fekete -- bound tables, verification runs, extremal dumps and series
// transforms for the strip-starlike class toolkit. All commands are
// deterministic given their configuration (including the seed) and write
// byte-identical output across runs.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fekete/io.hpp"
#include "fekete/verify.hpp"

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double alpha = kPi / 2;
  int k = 1;
  double mu_min = -2.0;
  double mu_max = 3.0;
  double mu_step = 0.1;
  int order = 12;
  int samples = 200;
  std::uint64_t seed = 42;
  int resolution = 60;
  double margin = 0.0;
  std::string out = "-";
  std::string format = "csv";
};

// Angles are accepted as plain radians, or with an explicit `deg`/`rad`
// suffix (pi fractions are error-prone by hand).
double parse_alpha(const std::string& text) {
  std::string body = text;
  double scale = 1.0;
  if (body.size() > 3 && body.ends_with("deg")) {
    body = body.substr(0, body.size() - 3);
    scale = kPi / 180.0;
  } else if (body.size() > 3 && body.ends_with("rad")) {
    body = body.substr(0, body.size() - 3);
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(body, &used);
    if (used != body.size()) throw std::invalid_argument(body);
    return v * scale;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse angle '" + text + "' (use radians, or e.g. 120deg)");
  }
}

void validate(const RunConfig& c) {
  if (!(c.mu_step > 0)) throw ConfigError("mu-step must be > 0");
  if (c.mu_min > c.mu_max) throw ConfigError("mu-min must be <= mu-max");
  if (!(c.alpha >= kPi / 2 - 1e-12 && c.alpha <= kPi - 1e-6 + 1e-12))
    throw ConfigError("alpha must lie in [pi/2, pi - 1e-6]");
  if (c.order < 4 || c.order > 64) throw ConfigError("order must lie in [4, 64]");
  if (c.k < 1) throw ConfigError("k must be >= 1");
  if (c.samples < 1) throw ConfigError("samples must be >= 1");
  if (c.resolution < 2) throw ConfigError("resolution must be >= 2");
  if (c.margin < 0) throw ConfigError("margin must be >= 0");
  if (c.format != "csv" && c.format != "json") throw ConfigError("format must be csv or json");
}

std::vector<double> mu_grid(const RunConfig& c) {
  std::vector<double> mus;
  const int n = static_cast<int>(std::floor((c.mu_max - c.mu_min) / c.mu_step + 1e-9));
  for (int i = 0; i <= n; ++i) mus.push_back(c.mu_min + i * c.mu_step);
  return mus;
}

void write_output(const RunConfig& c, const std::string& text) {
  if (c.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file " + c.out);
  f << text;
}

void load_config_file(const std::string& path, RunConfig* c) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file " + path);
  json obj;
  try {
    f >> obj;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (obj.contains("alpha")) c->alpha = obj["alpha"].get<double>();
  if (obj.contains("k")) c->k = obj["k"].get<int>();
  if (obj.contains("mu_min")) c->mu_min = obj["mu_min"].get<double>();
  if (obj.contains("mu_max")) c->mu_max = obj["mu_max"].get<double>();
  if (obj.contains("mu_step")) c->mu_step = obj["mu_step"].get<double>();
  if (obj.contains("order")) c->order = obj["order"].get<int>();
  if (obj.contains("samples")) c->samples = obj["samples"].get<int>();
  if (obj.contains("seed")) c->seed = obj["seed"].get<std::uint64_t>();
  if (obj.contains("resolution")) c->resolution = obj["resolution"].get<int>();
  if (obj.contains("margin")) c->margin = obj["margin"].get<double>();
  if (obj.contains("out")) c->out = obj["out"].get<std::string>();
  if (obj.contains("format")) c->format = obj["format"].get<std::string>();
}

// Attach the shared flags. Option values land in *c after CLI11 parsing,
// overriding whatever the config file preloaded.
void add_common_flags(CLI::App* cmd, RunConfig* c, std::string* alpha_text) {
  cmd->add_option("--alpha", *alpha_text, "sector angle (radians, or with deg/rad suffix)");
  cmd->add_option("--k", c->k, "root transform index k >= 1");
  cmd->add_option("--mu-min", c->mu_min, "first mu of the grid");
  cmd->add_option("--mu-max", c->mu_max, "last mu of the grid");
  cmd->add_option("--mu-step", c->mu_step, "mu grid step (> 0)");
  cmd->add_option("--order", c->order, "series truncation order (4..64)");
  cmd->add_option("--samples", c->samples, "number of sampled class members");
  cmd->add_option("--seed", c->seed, "RNG stream seed");
  cmd->add_option("--resolution", c->resolution, "oracle lattice points per unit");
  cmd->add_option("--margin", c->margin, "membership margin");
  cmd->add_option("--out", c->out, "output path ('-' for stdout)");
  cmd->add_option("--format", c->format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

// ---- subcommands ----------------------------------------------------------

int cmd_bounds(const RunConfig& c) {
  validate(c);
  const fekete::SectorAlpha s(c.alpha);
  const std::vector<double> mus = mu_grid(c);

  if (c.format == "json") {
    json rows = json::array();
    for (double mu : mus) {
      const fekete::PiecewiseBound t = fekete::thm31_bound(s, c.k, mu);
      const fekete::PiecewiseBound f = fekete::thm41_fs_bound(s, mu);
      json row;
      row["alpha"] = c.alpha;
      row["k"] = c.k;
      row["mu"] = mu;
      row["bound"] = t.value;
      row["region"] = fekete::region_name(t.region);
      row["delta1"] = t.delta1;
      row["delta2"] = t.delta2;
      if (c.k == 1) row["cor31_bound"] = fekete::cor31_bound(s, mu).value;
      row["thm41_fs_bound"] = f.value;
      row["thm41_region"] = fekete::region_name(f.region);
      rows.push_back(row);
    }
    write_output(c, rows.dump(2) + "\n");
    return 0;
  }

  std::ostringstream out;
  out << "alpha,k,mu,bound,region,delta1,delta2,cor31_bound,thm41_fs_bound,thm41_region\n";
  for (double mu : mus) {
    const fekete::PiecewiseBound t = fekete::thm31_bound(s, c.k, mu);
    const fekete::PiecewiseBound f = fekete::thm41_fs_bound(s, mu);
    out << fekete::fmt_double(c.alpha) << ',' << c.k << ',' << fekete::fmt_double(mu) << ','
        << fekete::fmt_double(t.value) << ',' << fekete::region_name(t.region) << ','
        << fekete::fmt_double(t.delta1) << ',' << fekete::fmt_double(t.delta2) << ',';
    if (c.k == 1) out << fekete::fmt_double(fekete::cor31_bound(s, mu).value);
    out << ',' << fekete::fmt_double(f.value) << ',' << fekete::region_name(f.region) << '\n';
  }
  write_output(c, out.str());
  return 0;
}

int cmd_verify(const RunConfig& c, double bound_scale) {
  validate(c);
  const fekete::SectorAlpha s(c.alpha);
  const fekete::OracleGrid grid{c.resolution};
  const double oracle_tol = 2.5 / c.resolution;

  json results = json::array();
  long total_violations = 0;
  double max_gap = 0.0;
  double max_oracle_gap = 0.0;
  for (double mu : mu_grid(c)) {
    const fekete::VerificationReport rep =
        fekete::verify_on_samples(s, c.k, mu, c.samples, c.seed);
    const double gap = fekete::sharpness_gap(s, c.k, mu);
    const fekete::OracleResult oracle = fekete::oracle_max_fs(s, c.k, mu, grid);

    const double effective_bound = rep.bound * bound_scale;
    const bool violated = rep.max_observed > effective_bound + fekete::kViolationTolerance;
    total_violations += rep.violations + (violated ? 1 : 0);
    max_gap = std::max(max_gap, std::abs(gap));
    max_oracle_gap = std::max(max_oracle_gap, std::abs(oracle.max_value - rep.bound));

    json row = json::parse(fekete::verification_report_to_json(rep));
    row["sharpness_gap_extremal"] = gap;
    row["oracle_max"] = oracle.max_value;
    row["oracle_argmax"] = oracle.argmax_kind;
    results.push_back(row);
  }

  const bool ok =
      total_violations == 0 && max_gap <= fekete::kViolationTolerance && max_oracle_gap <= oracle_tol;
  json report;
  report["alpha"] = c.alpha;
  report["k"] = c.k;
  report["samples"] = c.samples;
  report["seed"] = c.seed;
  report["resolution"] = c.resolution;
  report["results"] = results;
  report["summary"] = {{"violations", total_violations},
                       {"max_sharpness_gap", max_gap},
                       {"max_oracle_gap", max_oracle_gap},
                       {"oracle_tolerance", oracle_tol},
                       {"status", ok ? "ok" : "violation"}};

  if (c.format == "csv") {
    std::ostringstream out;
    out << fekete::verification_report_csv_header() << '\n';
    for (const json& row : results) {
      fekete::VerificationReport rep;
      rep.alpha = row["alpha"];
      rep.k = row["k"];
      rep.mu = row["mu"];
      rep.bound = row["bound"];
      rep.max_observed = row["max_observed"];
      rep.argmax = row["argmax"];
      rep.violations = row["violations"];
      rep.sharpness_gap = row["sharpness_gap"];
      out << fekete::verification_report_csv_row(rep) << '\n';
    }
    write_output(c, out.str());
  } else {
    write_output(c, report.dump(2) + "\n");
  }
  return ok ? 0 : 1;
}

int cmd_extremal(const RunConfig& c, const std::string& which) {
  validate(c);
  if (which != "f1" && which != "f2") throw ConfigError("--which must be f1 or f2");
  const fekete::SectorAlpha s(c.alpha);
  const fekete::NormalizedSeries f =
      which == "f1" ? fekete::extremal_f1(s, c.order) : fekete::extremal_f2(s, c.order);
  const fekete::RootTransformSeries rt =
      fekete::kth_root_transform(f, c.k, c.k * (c.order - 1) + 1);

  if (c.format == "json") {
    json obj;
    obj["alpha"] = c.alpha;
    obj["which"] = which;
    obj["k"] = c.k;
    obj["f"] = json::parse(fekete::series_to_json(f.series()));
    obj["root_transform"] = json::parse(fekete::series_to_json(rt.series));
    write_output(c, obj.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "series,index,re,im\n";
  for (int n = 0; n <= f.order(); ++n)
    out << "f," << n << ',' << fekete::fmt_double(f[n].real()) << ','
        << fekete::fmt_double(f[n].imag()) << '\n';
  for (int n = 0; n <= rt.series.order(); ++n)
    out << "root_transform," << n << ',' << fekete::fmt_double(rt.series[n].real()) << ','
        << fekete::fmt_double(rt.series[n].imag()) << '\n';
  write_output(c, out.str());
  return 0;
}

int cmd_transform(const RunConfig& c, const std::string& input_path) {
  validate(c);
  std::ifstream in(input_path);
  if (!in) throw ConfigError("cannot open input series " + input_path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  fekete::TruncatedSeries raw(1);
  try {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{'))
      raw = fekete::series_from_json(text);
    else
      raw = fekete::series_from_csv(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("input series parse error: ") + e.what());
  }
  std::optional<fekete::NormalizedSeries> f;
  try {
    f.emplace(std::move(raw));
  } catch (const std::exception&) {
    throw ConfigError("input series is not normalized (needs c0 = 0, c1 = 1)");
  }

  const fekete::RootTransformSeries rt =
      fekete::kth_root_transform(*f, c.k, c.k * (f->order() - 1) + 1);
  const fekete::NormalizedSeries inv = fekete::invert_series(*f);

  if (c.format == "json") {
    json obj;
    obj["k"] = c.k;
    obj["root_transform"] = json::parse(fekete::series_to_json(rt.series));
    obj["inverse"] = json::parse(fekete::series_to_json(inv.series()));
    write_output(c, obj.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "series,index,re,im\n";
  for (int n = 0; n <= rt.series.order(); ++n)
    out << "root_transform," << n << ',' << fekete::fmt_double(rt.series[n].real()) << ','
        << fekete::fmt_double(rt.series[n].imag()) << '\n';
  for (int n = 0; n <= inv.order(); ++n)
    out << "inverse," << n << ',' << fekete::fmt_double(inv[n].real()) << ','
        << fekete::fmt_double(inv[n].imag()) << '\n';
  write_output(c, out.str());
  return 0;
}

int cmd_oracle(const RunConfig& c) {
  validate(c);
  const fekete::SectorAlpha s(c.alpha);
  const fekete::OracleGrid grid{c.resolution};

  std::ostringstream out;
  json rows = json::array();
  if (c.format == "csv")
    out << "alpha,k,mu,mu_prime,bound,oracle_max,witness_max,grid_max,argmax,"
           "zeta1_re,zeta1_im,zeta2_re,zeta2_im\n";
  for (double mu : mu_grid(c)) {
    const fekete::OracleResult r = fekete::oracle_max_fs(s, c.k, mu, grid);
    const double bound = fekete::thm31_bound(s, c.k, mu).value;
    const double mp = fekete::mu_prime(s, c.k, mu);
    if (c.format == "csv") {
      out << fekete::fmt_double(c.alpha) << ',' << c.k << ',' << fekete::fmt_double(mu) << ','
          << fekete::fmt_double(mp) << ',' << fekete::fmt_double(bound) << ','
          << fekete::fmt_double(r.max_value) << ',' << fekete::fmt_double(r.witness_max) << ','
          << fekete::fmt_double(r.grid_max) << ',' << r.argmax_kind << ','
          << fekete::fmt_double(r.arg_zeta1.real()) << ',' << fekete::fmt_double(r.arg_zeta1.imag())
          << ',' << fekete::fmt_double(r.arg_zeta2.real()) << ','
          << fekete::fmt_double(r.arg_zeta2.imag()) << '\n';
    } else {
      rows.push_back({{"alpha", c.alpha},
                      {"k", c.k},
                      {"mu", mu},
                      {"mu_prime", mp},
                      {"bound", bound},
                      {"oracle_max", r.max_value},
                      {"witness_max", r.witness_max},
                      {"grid_max", r.grid_max},
                      {"argmax", r.argmax_kind}});
    }
  }
  write_output(c, c.format == "csv" ? out.str() : rows.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification toolkit for sharp coefficient-functional bounds\n"
               "on strip-starlike analytic function classes"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string alpha_text, config_path, which = "f1", input_path;
  double bound_scale = 1.0;

  // The config file provides defaults; explicit flags override it.
  for (int i = 1; i < argc - 1; ++i) {
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  }
  try {
    if (!config_path.empty()) load_config_file(config_path, &cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* bounds = app.add_subcommand("bounds", "tabulate the closed-form bounds over a mu grid");
  CLI::App* verify = app.add_subcommand(
      "verify", "sampled non-violation + sharpness + oracle agreement; exit 1 on any violation");
  CLI::App* extremal = app.add_subcommand("extremal", "dump an extremal function and its root transform");
  CLI::App* transform = app.add_subcommand("transform", "root-transform and invert an input series");
  CLI::App* oracle = app.add_subcommand("oracle", "brute-force functional maximization table");

  for (CLI::App* cmd : {bounds, verify, extremal, transform, oracle}) {
    add_common_flags(cmd, &cfg, &alpha_text);
    cmd->add_option("--config", config_path, "JSON config file (flags override it)");
  }
  extremal->add_option("--which", which, "f1 or f2")->check(CLI::IsMember({"f1", "f2"}));
  transform->add_option("--in", input_path, "input series (CSV index,re,im or JSON [[re,im],...])")
      ->required();
  verify->add_option("--bound-scale", bound_scale, "internal test hook")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return 0;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!alpha_text.empty()) cfg.alpha = parse_alpha(alpha_text);
    if (bounds->parsed()) return cmd_bounds(cfg);
    if (verify->parsed()) return cmd_verify(cfg, bound_scale);
    if (extremal->parsed()) return cmd_extremal(cfg, which);
    if (transform->parsed()) return cmd_transform(cfg, input_path);
    if (oracle->parsed()) return cmd_oracle(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
