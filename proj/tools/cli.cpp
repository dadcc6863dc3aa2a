#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "wcentropy/closed_form.hpp"
#include "wcentropy/convergence.hpp"
#include "wcentropy/empirical.hpp"
#include "wcentropy/error.hpp"
#include "wcentropy/format.hpp"
#include "wcentropy/sample_io.hpp"
#include "wcentropy/serialize.hpp"

namespace wcentropy::cli {

namespace {

struct RunConfig {
  std::string input_path;
  std::vector<std::string> wf_specs;
  bool multi = false;
  std::size_t n_min = 2;
  std::optional<double> lambda;
  std::string sizes = "100,1000,10000,100000";
  std::size_t reps = 20;
  std::uint64_t seed = 20150101;
  std::string output_path;
  std::string format;
  double p = 2.0;
  std::string prefix_order = "row-major";
};

// Self-check threshold between the telescoped and piecewise estimators.
constexpr double kSelfCheckTolerance = 1e-8;

std::vector<WeightFunction> parse_wfs(const std::vector<std::string>& specs, const char* fallback) {
  std::vector<WeightFunction> out;
  if (specs.empty()) {
    out.push_back(WeightFunction::parse(fallback));
    return out;
  }
  for (const auto& s : specs) out.push_back(WeightFunction::parse(s));
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size() || v < 0 || v != std::floor(v)) throw std::invalid_argument(item);
      sizes.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw ParameterError("cannot parse sample size '" + item + "'");
    }
  }
  if (sizes.empty()) throw ParameterError("--sizes is empty");
  return sizes;
}

SampleFile load_input(const RunConfig& cfg) {
  if (cfg.input_path.empty()) throw ParameterError("--input is required");
  return parse_sample_file(cfg.input_path);
}

// Writes to --out if given, else to `out`.
template <typename Fn>
void emit(const RunConfig& cfg, std::ostream& out, Fn&& write) {
  if (cfg.output_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file) throw ParameterError("cannot open '" + cfg.output_path + "' for writing");
  write(file);
  if (!file) throw ParameterError("failed writing '" + cfg.output_path + "'");
}

bool json_format(const RunConfig& cfg, bool json_default) {
  if (cfg.format.empty()) return json_default;
  return cfg.format == "json";
}

int cmd_estimate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto file = load_input(cfg);
  const auto sample = OrderedSample::from_unsorted(file.values);
  std::vector<EntropyEstimate> estimates;
  for (const auto& wf : parse_wfs(cfg.wf_specs, "constant:1")) {
    const auto verdict = check_integrability(wf, cfg.p);
    if (!verdict.valid()) {
      err << "warning: " << wf.spec() << " fails the integrability condition for p = " << format_shortest(cfg.p)
          << " (" << verdict.reason << "); the finite-sample estimate is still reported\n";
    }
    const auto fast = estimate_orderstats(sample, wf);
    const auto slow = estimate_piecewise(sample, wf);
    for (auto [a, b, name] : {std::tuple{fast.wcre, slow.wcre, "WCRE"}, std::tuple{fast.wce, slow.wce, "WCE"}}) {
      if (!std::isfinite(a) || std::fabs(a - b) > kSelfCheckTolerance * std::max(1.0, std::fabs(b))) {
        err << "error: " << name << " self-check failed for " << wf.spec() << ": order-statistics "
            << format_double(a) << " vs piecewise " << format_double(b) << '\n';
        return kSelfCheck;
      }
    }
    estimates.push_back({Measure::WCRE, fast.wcre, sample.size(), wf.spec(), Method::OrderStats});
    estimates.push_back({Measure::WCE, fast.wce, sample.size(), wf.spec(), Method::OrderStats});
  }
  emit(cfg, out, [&](std::ostream& os) {
    if (json_format(cfg, true)) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& e : estimates) j.push_back(to_json(e));
      os << j.dump(2) << '\n';
    } else {
      write_estimates_csv(os, estimates);
    }
  });
  return kSuccess;
}

int cmd_curves(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto file = load_input(cfg);
  const auto order = parse_prefix_order(cfg.prefix_order);
  const auto values = apply_prefix_order(file.values, file.row_lengths, order);
  std::vector<CurveSeries> series;
  for (const auto& wf : parse_wfs(cfg.wf_specs, "constant:1")) {
    series.push_back({wf, prefix_curves(values, wf, cfg.n_min)});
  }
  const bool json = json_format(cfg, false);
  emit(cfg, out, [&](std::ostream& os) {
    if (json) {
      auto j = curves_json(series);
      j["prefix_order"] = to_string(order);
      os << j.dump(2) << '\n';
    } else {
      write_curves_csv(os, series, cfg.multi);
    }
  });
  if (!json && !cfg.output_path.empty()) {
    std::ofstream manifest(cfg.output_path + ".manifest.json", std::ios::binary);
    auto j = curves_manifest(series, cfg.multi);
    j["data"] = cfg.output_path;
    j["prefix_order"] = to_string(order);
    manifest << j.dump(2) << '\n';
  }
  return kSuccess;
}

int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto wfs = parse_wfs(cfg.wf_specs, "constant:1");
  if (wfs.size() != 1) throw ParameterError("convergence takes exactly one --wf");
  ConvergenceConfig conf;
  conf.rate = cfg.lambda.value_or(0.5);
  conf.sizes = parse_sizes(cfg.sizes);
  conf.replications = cfg.reps;
  conf.seed = cfg.seed;
  conf.p = cfg.p;
  const auto report = run_convergence(wfs.front(), conf);
  emit(cfg, out, [&](std::ostream& os) {
    if (json_format(cfg, false)) {
      os << to_json(report).dump(2) << '\n';
    } else {
      write_convergence_csv(os, report);
    }
  });
  return kSuccess;
}

int cmd_identities(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<IdentityGridPoint> grid;
  if (cfg.wf_specs.empty() && !cfg.lambda) {
    grid = default_identity_grid();
  } else {
    const std::vector<double> rates =
        cfg.lambda ? std::vector<double>{*cfg.lambda} : std::vector<double>{0.25, 0.5, 1.0, 2.0, 5.0};
    for (const auto& wf : cfg.wf_specs.empty() ? std::vector<WeightFunction>{WeightFunction::constant(1.0),
                                                                             WeightFunction::gaussian(1.0),
                                                                             WeightFunction::exponential_tilt(-0.5)}
                                               : parse_wfs(cfg.wf_specs, "constant:1")) {
      for (double rate : rates) grid.push_back({rate, wf});
    }
  }

  nlohmann::json results = nlohmann::json::array();
  bool all_pass = true;
  for (const auto& point : grid) {
    const ExponentialPopulation pop(point.rate);
    for (int which = 0; which < 2; ++which) {
      const char* name = which == 0 ? "kl" : "equilibrium";
      try {
        const auto report =
            which == 0 ? check_kl_identity(pop, point.wf) : check_equilibrium_identity(pop, point.wf);
        auto j = to_json(report);
        j["status"] = report.pass ? "pass" : "fail";
        all_pass = all_pass && report.pass;
        results.push_back(std::move(j));
      } catch (const DivergenceError& e) {
        err << "note: " << name << " identity for " << pop.describe() << ", " << point.wf.spec()
            << " is divergent and excluded: " << e.what() << '\n';
        results.push_back({{"identity", name},
                           {"population", pop.describe()},
                           {"wf", point.wf.spec()},
                           {"status", "divergent"},
                           {"pass", nullptr}});
      }
    }
  }
  emit(cfg, out, [&](std::ostream& os) {
    if (json_format(cfg, true)) {
      os << results.dump(2) << '\n';
    } else {
      os << "identity,population,wf,lhs,rhs,abs_discrepancy,tolerance,status\n";
      for (const auto& r : results) {
        auto num = [&](const char* key) {
          return r.contains(key) && r[key].is_number() ? format_double(r[key].get<double>()) : std::string();
        };
        os << r["identity"].get<std::string>() << ',' << r["population"].get<std::string>() << ",\""
           << r["wf"].get<std::string>() << "\"," << num("lhs") << ',' << num("rhs") << ',' << num("abs_discrepancy")
           << ',' << num("tolerance") << ',' << r["status"].get<std::string>() << '\n';
      }
    }
  });
  return all_pass ? kSuccess : kSelfCheck;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted cumulative (residual) entropy estimation", "wcentropy"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.output_path, "Output file (default: stdout)");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_wf = [&](CLI::App* sub) {
    sub->add_option("--wf", cfg.wf_specs, "Weight function, e.g. gaussian:0.5, exptilt:-0.2, poly:1,2")
        ->allow_extra_args(false);
  };

  auto* estimate = app.add_subcommand("estimate", "Empirical WCRE and WCE of a whole sample");
  estimate->add_option("--input", cfg.input_path, "Sample file")->required();
  add_wf(estimate);
  estimate->add_option("--p", cfg.p, "Moment order for the integrability check (> 1)");
  add_common(estimate);

  auto* curves = app.add_subcommand("curves", "WCRE(n) and WCE(n) over growing prefixes of a sample");
  curves->add_option("--input", cfg.input_path, "Sample file")->required();
  add_wf(curves);
  curves->add_flag("--multi", cfg.multi, "One column pair per weight function");
  curves->add_option("--n-min", cfg.n_min, "Smallest prefix (>= 2)");
  curves->add_option("--prefix-order", cfg.prefix_order, "row-major, column-major or sorted")
      ->check(CLI::IsMember({"row-major", "column-major", "sorted"}));
  add_common(curves);

  auto* convergence = app.add_subcommand("convergence", "Monte Carlo error against exponential ground truth");
  add_wf(convergence);
  convergence->add_option("--lambda", cfg.lambda, "Exponential rate (default 0.5, i.e. mean 2)");
  convergence->add_option("--sizes", cfg.sizes, "Comma-separated sample sizes");
  convergence->add_option("--reps", cfg.reps, "Replications per size");
  convergence->add_option("--seed", cfg.seed, "Base seed");
  convergence->add_option("--p", cfg.p, "Moment order for the integrability gate (> 1)");
  add_common(convergence);

  auto* identities = app.add_subcommand("identities", "KL and equilibrium identity checks by quadrature");
  add_wf(identities);
  identities->add_option("--lambda", cfg.lambda, "Exponential rate (default: grid 0.25,0.5,1,2,5)");
  add_common(identities);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (estimate->parsed()) return cmd_estimate(cfg, out, err);
    if (curves->parsed()) return cmd_curves(cfg, out, err);
    if (convergence->parsed()) return cmd_convergence(cfg, out, err);
    return cmd_identities(cfg, out, err);
  } catch (const IntegrabilityError& e) {
    err << "refused: " << e.what() << '\n';
    return kValidation;
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kSelfCheck;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace wcentropy::cli
