#ifndef VRDA_PREDICTOR_HPP
#define VRDA_PREDICTOR_HPP

#include <span>
#include <string>

#include "vrda/dataset.hpp"
#include "vrda/run.hpp"

namespace vrda {

enum class PredictMode { vote, average, final };

std::string to_string(PredictMode m);
PredictMode predict_mode_from_string(const std::string& name);

/// sign decision of w'x with sign(0) = +1.
int predict_linear(const SparseVector& w, const SparseVector& x);

/// Survival-count-weighted majority vote over the snapshots; ties go to
/// +1 (consistent with predict_linear).
int vote_predict(std::span<const PredictorSnapshot> snapshots,
                 const SparseVector& x);

/// (1/K) sum_k c_k w_k over the K snapshots given, canonical form.
SparseVector averaged_weights(std::span<const PredictorSnapshot> snapshots);

/// Classification metrics of the +1 class. F = 2PR/(P+R), 0 when P+R = 0.
struct Metrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double fscore = 0.0;
  std::uint64_t mistakes = 0;
  std::uint64_t examples = 0;
};

Metrics evaluate(PredictMode mode, const TrainingRun& run, const Dataset& test);

/// Fraction of test examples on which vote and weighted-average
/// predictions agree. Requires full snapshots.
double vote_average_agreement(const TrainingRun& run, const Dataset& test);

}  // namespace vrda

#endif
