#include "vrda/baselines.hpp"

#include <algorithm>
#include <stdexcept>

namespace vrda {

namespace {

// Shared run bookkeeping for the baseline loops.
struct Recorder {
  TrainingRun run;

  explicit Recorder(std::size_t dim) {
    run.first_weights = SparseVector(dim);
    run.weighted_sum = SparseVector(dim);
    run.final_s = SparseVector(dim);
  }

  void finalize_snapshot(const SparseVector& w, std::uint64_t c) {
    if (run.config.retention == SnapshotRetention::full)
      run.snapshots.push_back({w, c});
    run.weighted_sum = run.weighted_sum.add_scaled(w, static_cast<double>(c));
    run.snapshot_count += 1;
    run.final_snapshot = {w, c};
  }
};

}  // namespace

TrainingRun train_perceptron(const Dataset& data, std::uint32_t epochs,
                             PerceptronVariant variant) {
  if (data.empty()) throw std::invalid_argument("train_perceptron: empty dataset");
  if (epochs < 1) throw std::invalid_argument("train_perceptron: epochs < 1");

  Recorder rec(data.dim());
  rec.run.algo =
      variant == PerceptronVariant::voted ? "perceptron" : "perceptron-avg";
  rec.run.config.loss = LossKind::hinge;
  rec.run.config.reg = RegularizerSpec::none();
  rec.run.config.eta = 1.0;
  rec.run.config.epochs = epochs;
  rec.run.config.policy = UpdatePolicy::on_error;

  SparseVector w(data.dim());
  std::uint64_t c = 0;
  std::uint64_t cum_mistakes = 0;

  for (std::uint32_t epoch = 0; epoch < epochs; ++epoch) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      const Example& z = data[i];
      const bool correct = (w.dot(z.x) >= 0.0 ? 1 : -1) == z.y;
      if (correct) {
        ++c;
      } else {
        ++cum_mistakes;
        rec.run.mistake_indices.push_back({epoch, i});
        rec.run.max_subgradient_norm =
            std::max(rec.run.max_subgradient_norm, z.x.l2_norm());
        rec.finalize_snapshot(w, c);
        w = w.add_scaled(z.x, static_cast<double>(z.y));
        c = 1;
        rec.run.nnz_curve.push_back(w.nnz());
        ++rec.run.update_count;
      }
      rec.run.cumulative_mistakes_curve.push_back(cum_mistakes);
    }
  }
  rec.finalize_snapshot(w, c);
  return std::move(rec.run);
}

TrainingRun train_truncated_gradient(const Dataset& data, LossKind loss,
                                     double lambda, double eta,
                                     std::uint32_t trunc_period,
                                     std::uint32_t epochs) {
  if (data.empty())
    throw std::invalid_argument("train_truncated_gradient: empty dataset");
  if (trunc_period < 1)
    throw std::invalid_argument("train_truncated_gradient: K < 1");
  if (eta <= 0.0) throw std::invalid_argument("train_truncated_gradient: eta <= 0");
  if (lambda < 0.0)
    throw std::invalid_argument("train_truncated_gradient: lambda < 0");
  if (epochs < 1)
    throw std::invalid_argument("train_truncated_gradient: epochs < 1");

  Recorder rec(data.dim());
  rec.run.algo = "tg";
  rec.run.config.loss = loss;
  rec.run.config.reg = lambda > 0.0 ? RegularizerSpec::l1(lambda)
                                    : RegularizerSpec::none();
  rec.run.config.eta = eta;
  rec.run.config.epochs = epochs;
  rec.run.config.policy = UpdatePolicy::every_step;

  const double gravity = static_cast<double>(trunc_period) * eta * lambda;
  SparseVector w(data.dim());
  std::uint64_t c = 0;
  std::uint64_t cum_mistakes = 0;
  std::uint64_t step = 0;

  for (std::uint32_t epoch = 0; epoch < epochs; ++epoch) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      const Example& z = data[i];
      const bool correct = (w.dot(z.x) >= 0.0 ? 1 : -1) == z.y;
      if (correct) {
        ++c;
      } else {
        ++cum_mistakes;
        rec.run.mistake_indices.push_back({epoch, i});
      }
      SparseVector g = loss_subgradient(loss, w, z);
      rec.run.max_subgradient_norm =
          std::max(rec.run.max_subgradient_norm, g.l2_norm());
      rec.finalize_snapshot(w, c);
      w = w.add_scaled(g, -eta);
      ++step;
      if (step % trunc_period == 0 && lambda > 0.0) w = shrink(w, gravity);
      c = correct ? 0 : 1;
      rec.run.nnz_curve.push_back(w.nnz());
      ++rec.run.update_count;
      rec.run.cumulative_mistakes_curve.push_back(cum_mistakes);
    }
  }
  rec.finalize_snapshot(w, c);
  return std::move(rec.run);
}

}  // namespace vrda
