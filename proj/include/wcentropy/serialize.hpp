#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "wcentropy/closed_form.hpp"
#include "wcentropy/convergence.hpp"
#include "wcentropy/empirical.hpp"

namespace wcentropy {

// CSV output: header row, LF line endings, %.17g decimals.

struct CurveSeries {
  WeightFunction wf;
  std::vector<CurvePoint> points;
};

/// Single series: `n,wcre,wce`. Several series (or `multi`): one column pair
/// per series, `n,wcre[<spec>],wce[<spec>],...`; all series must share n.
void write_curves_csv(std::ostream& out, const std::vector<CurveSeries>& series, bool multi = false);

/// Reads the single-series layout back.
std::vector<CurvePoint> read_curves_csv(std::istream& in);

nlohmann::json curves_json(const std::vector<CurveSeries>& series);

/// Names each series after its legend label and the CSV columns holding it.
nlohmann::json curves_manifest(const std::vector<CurveSeries>& series, bool multi);

nlohmann::json to_json(const EntropyEstimate& e);
void write_estimates_csv(std::ostream& out, const std::vector<EntropyEstimate>& estimates);

nlohmann::json to_json(const IdentityReport& r);

nlohmann::json to_json(const ConvergenceReport& r);

/// `#` header lines echoing the config, then
/// `n,mean_abs_err,max_abs_err,stddev,truth,wce_mean_abs_err,wce_max_abs_err,wce_stddev,wce_truth`.
void write_convergence_csv(std::ostream& out, const ConvergenceReport& r);

}  // namespace wcentropy
