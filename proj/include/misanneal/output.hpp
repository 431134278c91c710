#ifndef MISANNEAL_OUTPUT_HPP
#define MISANNEAL_OUTPUT_HPP

#include <string>
#include <vector>

#include "misanneal/analysis.hpp"
#include "misanneal/spectra.hpp"

#include <json.hpp>

namespace misanneal {

using Json = nlohmann::ordered_json;

// Shortest round-trip decimal form (printf %.17g trimmed by value).
std::string format_double(double x);

// Completed members only, index order; skipped members are reported in the
// summary JSON.  Columns:
//   n,m,generator,seed,alpha,mean_size,ratio,mis_probability,runtime_ms
// runtime_ms is wall-clock and is the only nondeterministic column.
std::string runs_csv(const std::vector<RunRecord>& runs);

Json run_record_json(const RunRecord& rec);
Json ensemble_summary_json(const EnsembleResult& result);

// Columns: theta,lambda0,lambda1,gap.
std::string gap_curve_csv(const GapCurve& curve);
Json gap_summary_json(int n, std::size_t dimension, const GapCurve& curve);

// Columns: theta,index,prob; rows with prob < prob_floor are dropped.
std::string trajectory_csv(const std::vector<TrajectoryPoint>& trajectory,
                           double prob_floor = 1e-9);

// Columns: index,mask_hex,size.
std::string basis_csv(const IsBasis& basis);

// Minimal self-contained line chart (no external renderer).
struct SvgSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<SvgSeries>& series);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace misanneal

#endif
