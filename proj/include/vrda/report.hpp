#ifndef VRDA_REPORT_HPP
#define VRDA_REPORT_HPP

#include <string>

#include "vrda/analysis.hpp"
#include "vrda/predictor.hpp"
#include "vrda/run.hpp"

namespace vrda {

/// Full JSON serialization of a training run. Required keys are always
/// present; `snapshots` appears only under full retention. Weight vectors
/// use the weights schema {"dim": n, "entries": {...}} and round-trip
/// exactly.
std::string run_to_json_string(const TrainingRun& run);
TrainingRun run_from_json_string(const std::string& text,
                                 const std::string& name);
TrainingRun read_run(const std::string& path);
void write_run(const std::string& path, const TrainingRun& run);

/// BoundReport as JSON; inapplicable optional fields serialize as null.
std::string bound_report_to_json_string(const BoundReport& rep);

/// Metrics as JSON; `agreement` (vote vs average rate) is included when
/// non-negative.
std::string metrics_to_json_string(const Metrics& m, PredictMode mode,
                                   double agreement = -1.0);

}  // namespace vrda

#endif
