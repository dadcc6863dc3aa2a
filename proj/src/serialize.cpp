#include "wcentropy/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "wcentropy/error.hpp"
#include "wcentropy/format.hpp"

namespace wcentropy {

namespace {

nlohmann::json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

void write_curves_csv(std::ostream& out, const std::vector<CurveSeries>& series, bool multi) {
  if (series.empty()) throw ParameterError("no curve series to write");
  const auto& first = series.front().points;
  for (const auto& s : series) {
    if (s.points.size() != first.size()) throw ParameterError("curve series differ in length");
    for (std::size_t k = 0; k < first.size(); ++k) {
      if (s.points[k].n != first[k].n) throw ParameterError("curve series differ in n");
    }
  }
  multi = multi || series.size() > 1;

  out << "n";
  for (const auto& s : series) {
    if (multi) {
      out << ",wcre[" << s.wf.spec() << "],wce[" << s.wf.spec() << "]";
    } else {
      out << ",wcre,wce";
    }
  }
  out << '\n';
  for (std::size_t k = 0; k < first.size(); ++k) {
    out << first[k].n;
    for (const auto& s : series) out << ',' << format_double(s.points[k].wcre) << ',' << format_double(s.points[k].wce);
    out << '\n';
  }
}

std::vector<CurvePoint> read_curves_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "n,wcre,wce") throw ParseError("expected header 'n,wcre,wce'", 1, 1);
  std::vector<CurvePoint> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string n, wcre, wce;
    if (!std::getline(row, n, ',') || !std::getline(row, wcre, ',') || !std::getline(row, wce)) {
      throw ParseError("expected three fields", line_no, 1);
    }
    try {
      out.push_back({std::stoul(n), std::stod(wcre), std::stod(wce)});
    } catch (const std::exception&) {
      throw ParseError("malformed curve row", line_no, 1);
    }
  }
  return out;
}

nlohmann::json curves_json(const std::vector<CurveSeries>& series) {
  nlohmann::json out;
  out["series"] = nlohmann::json::array();
  for (const auto& s : series) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : s.points) points.push_back({{"n", p.n}, {"wcre", p.wcre}, {"wce", p.wce}});
    out["series"].push_back({{"label", s.wf.label()}, {"wf", s.wf.spec()}, {"points", std::move(points)}});
  }
  return out;
}

nlohmann::json curves_manifest(const std::vector<CurveSeries>& series, bool multi) {
  multi = multi || series.size() > 1;
  nlohmann::json out;
  out["x"] = "n";
  out["series"] = nlohmann::json::array();
  for (const auto& s : series) {
    const std::string suffix = multi ? "[" + s.wf.spec() + "]" : "";
    out["series"].push_back({{"label", s.wf.label()},
                             {"wf", s.wf.spec()},
                             {"wcre_column", "wcre" + suffix},
                             {"wce_column", "wce" + suffix}});
  }
  return out;
}

nlohmann::json to_json(const EntropyEstimate& e) {
  return {{"kind", to_string(e.kind)},
          {"value", number_or_null(e.value)},
          {"n", e.n},
          {"wf", e.wf},
          {"method", to_string(e.method)}};
}

void write_estimates_csv(std::ostream& out, const std::vector<EntropyEstimate>& estimates) {
  out << "kind,value,n,wf,method\n";
  for (const auto& e : estimates) {
    out << to_string(e.kind) << ',' << format_double(e.value) << ',' << e.n << ",\"" << e.wf << "\","
        << to_string(e.method) << '\n';
  }
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json notes = nlohmann::json::object();
  for (const auto& [name, value] : r.notes) notes[name] = value ? number_or_null(*value) : nlohmann::json(nullptr);
  return {{"identity", r.identity},
          {"population", r.population},
          {"wf", r.wf},
          {"lhs", number_or_null(r.lhs)},
          {"rhs", number_or_null(r.rhs)},
          {"abs_discrepancy", number_or_null(r.abs_discrepancy)},
          {"tolerance", r.tolerance},
          {"pass", r.pass},
          {"notes", std::move(notes)}};
}

nlohmann::json to_json(const ConvergenceReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"mean_abs_err", row.mean_abs_err},
                    {"max_abs_err", row.max_abs_err},
                    {"stddev", row.stddev},
                    {"truth", row.truth},
                    {"wce_mean_abs_err", row.wce_mean_abs_err},
                    {"wce_max_abs_err", row.wce_max_abs_err},
                    {"wce_stddev", row.wce_stddev},
                    {"wce_truth", row.wce_truth}});
  }
  return {{"wf", r.wf},
          {"lambda", r.rate},
          {"sample_sizes", r.sample_sizes},
          {"replications", r.replications},
          {"seed", r.seed},
          {"p", r.p},
          {"wce_note", "empirical observation, not covered by the a.s. convergence theorem"},
          {"rows", std::move(rows)}};
}

void write_convergence_csv(std::ostream& out, const ConvergenceReport& r) {
  out << "# wf=" << r.wf << '\n';
  out << "# lambda=" << format_shortest(r.rate) << '\n';
  out << "# sizes=";
  for (std::size_t k = 0; k < r.sample_sizes.size(); ++k) out << (k ? "," : "") << r.sample_sizes[k];
  out << '\n';
  out << "# reps=" << r.replications << '\n';
  out << "# seed=" << r.seed << '\n';
  out << "# p=" << format_shortest(r.p) << '\n';
  out << "# wce_* columns: empirical observation, not covered by the a.s. convergence theorem\n";
  out << "n,mean_abs_err,max_abs_err,stddev,truth,wce_mean_abs_err,wce_max_abs_err,wce_stddev,wce_truth\n";
  for (const auto& row : r.rows) {
    out << row.n << ',' << format_double(row.mean_abs_err) << ',' << format_double(row.max_abs_err) << ','
        << format_double(row.stddev) << ',' << format_double(row.truth) << ',' << format_double(row.wce_mean_abs_err)
        << ',' << format_double(row.wce_max_abs_err) << ',' << format_double(row.wce_stddev) << ','
        << format_double(row.wce_truth) << '\n';
  }
}

}  // namespace wcentropy
