#include "vrda/predictor.hpp"

#include <stdexcept>

namespace vrda {

std::string to_string(PredictMode m) {
  switch (m) {
    case PredictMode::vote: return "vote";
    case PredictMode::average: return "average";
    case PredictMode::final: return "final";
  }
  return "?";
}

PredictMode predict_mode_from_string(const std::string& name) {
  if (name == "vote") return PredictMode::vote;
  if (name == "average") return PredictMode::average;
  if (name == "final") return PredictMode::final;
  throw std::invalid_argument("unknown predict mode: " + name);
}

int predict_linear(const SparseVector& w, const SparseVector& x) {
  return w.dot(x) >= 0.0 ? 1 : -1;
}

int vote_predict(std::span<const PredictorSnapshot> snapshots,
                 const SparseVector& x) {
  if (snapshots.empty())
    throw std::invalid_argument("vote_predict: empty snapshot list");
  double tally = 0.0;
  for (const PredictorSnapshot& snap : snapshots)
    tally += static_cast<double>(snap.c) * predict_linear(snap.w, x);
  return tally >= 0.0 ? 1 : -1;
}

SparseVector averaged_weights(std::span<const PredictorSnapshot> snapshots) {
  if (snapshots.empty())
    throw std::invalid_argument("averaged_weights: empty snapshot list");
  SparseVector sum(snapshots.front().w.dim());
  for (const PredictorSnapshot& snap : snapshots)
    sum = sum.add_scaled(snap.w, static_cast<double>(snap.c));
  return sum.scaled(1.0 / static_cast<double>(snapshots.size()));
}

namespace {

Metrics count_metrics(const Dataset& test, auto&& predict) {
  Metrics m;
  m.examples = test.size();
  std::uint64_t tp = 0, fp = 0, fn = 0;
  for (const Example& z : test) {
    int yhat = predict(z.x);
    if (yhat != z.y) ++m.mistakes;
    if (yhat == 1 && z.y == 1) ++tp;
    if (yhat == 1 && z.y == -1) ++fp;
    if (yhat == -1 && z.y == 1) ++fn;
  }
  m.accuracy = test.empty()
                   ? 0.0
                   : 1.0 - static_cast<double>(m.mistakes) / test.size();
  m.precision = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
  m.recall = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
  m.fscore = m.precision + m.recall > 0.0
                 ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                 : 0.0;
  return m;
}

}  // namespace

Metrics evaluate(PredictMode mode, const TrainingRun& run, const Dataset& test) {
  if (test.empty()) throw std::invalid_argument("evaluate: empty test set");
  switch (mode) {
    case PredictMode::vote: {
      if (!run.has_full_snapshots())
        throw std::invalid_argument(
            "evaluate: vote mode needs full snapshot retention");
      return count_metrics(test, [&run](const SparseVector& x) {
        return vote_predict(run.snapshots, x);
      });
    }
    case PredictMode::average: {
      SparseVector avg = run.averaged_weights();
      return count_metrics(test, [&avg](const SparseVector& x) {
        return predict_linear(avg, x);
      });
    }
    case PredictMode::final: {
      const SparseVector& w = run.final_snapshot.w;
      return count_metrics(test, [&w](const SparseVector& x) {
        return predict_linear(w, x);
      });
    }
  }
  throw std::logic_error("evaluate: bad mode");
}

double vote_average_agreement(const TrainingRun& run, const Dataset& test) {
  if (test.empty())
    throw std::invalid_argument("vote_average_agreement: empty test set");
  if (!run.has_full_snapshots())
    throw std::invalid_argument(
        "vote_average_agreement: needs full snapshot retention");
  SparseVector avg = run.averaged_weights();
  std::uint64_t agree = 0;
  for (const Example& z : test)
    if (vote_predict(run.snapshots, z.x) == predict_linear(avg, z.x)) ++agree;
  return static_cast<double>(agree) / test.size();
}

}  // namespace vrda
