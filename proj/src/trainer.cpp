#include "vrda/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vrda {

namespace {

void check_finite(const SparseVector& g) {
  for (const auto& [i, v] : g.entries()) {
    (void)i;
    if (!std::isfinite(v))
      throw std::runtime_error("train: non-finite subgradient (loss overflow)");
  }
}

}  // namespace

TrainingRun train(const Dataset& data, const TrainConfig& cfg) {
  cfg.validate();
  if (data.empty()) throw std::invalid_argument("train: empty dataset");

  const std::size_t n = data.dim();
  TrainingRun run;
  run.algo = "vrda";
  run.config = cfg;
  run.first_weights = SparseVector(n);
  run.weighted_sum = SparseVector(n);

  SparseVector w(n);       // w_1 = 0
  std::uint64_t c = 0;     // c_1 = 0
  SparseVector s(n);       // s_0 = 0
  std::size_t k = 1;

  auto finalize_snapshot = [&run](const SparseVector& wk, std::uint64_t ck) {
    if (run.config.retention == SnapshotRetention::full)
      run.snapshots.push_back({wk, ck});
    run.weighted_sum =
        run.weighted_sum.add_scaled(wk, static_cast<double>(ck));
    run.snapshot_count += 1;
    run.final_snapshot = {wk, ck};
  };

  std::uint64_t cum_mistakes = 0;
  for (std::uint32_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      const Example& z = data[i];
      const bool correct = (w.dot(z.x) >= 0.0 ? 1 : -1) == z.y;
      if (!correct) {
        ++cum_mistakes;
        run.mistake_indices.push_back({epoch, i});
      }
      if (correct) ++c;
      if (!correct || cfg.policy == UpdatePolicy::every_step) {
        SparseVector g = loss_subgradient(cfg.loss, w, z);
        check_finite(g);
        run.max_subgradient_norm =
            std::max(run.max_subgradient_norm, g.l2_norm());
        s = s.add_scaled(g, 1.0);
        finalize_snapshot(w, c);
        w = rda_update({s, k, cfg.eta}, cfg.reg);
        c = correct ? 0 : 1;
        ++k;
        run.nnz_curve.push_back(w.nnz());
        ++run.update_count;
      }
      run.cumulative_mistakes_curve.push_back(cum_mistakes);
    }
  }
  finalize_snapshot(w, c);
  run.final_s = s;
  return run;
}

TrainingRun replay_on_subsequence(const Dataset& data,
                                  const std::vector<MistakeIndex>& mistake_indices,
                                  const TrainConfig& cfg) {
  cfg.validate();
  Dataset sub(data.dim());
  for (const MistakeIndex& mi : mistake_indices) {
    if (mi.sample >= data.size())
      throw std::out_of_range("replay_on_subsequence: sample index out of range");
    sub.add(data[mi.sample]);
  }

  TrainConfig replay_cfg = cfg;
  replay_cfg.policy = UpdatePolicy::every_step;
  replay_cfg.epochs = 1;

  if (sub.empty()) {
    TrainingRun run;
    run.algo = "vrda";
    run.config = replay_cfg;
    run.first_weights = SparseVector(data.dim());
    run.weighted_sum = SparseVector(data.dim());
    run.final_s = SparseVector(data.dim());
    if (replay_cfg.retention == SnapshotRetention::full)
      run.snapshots.push_back({SparseVector(data.dim()), 0});
    run.snapshot_count = 1;
    run.final_snapshot = {SparseVector(data.dim()), 0};
    return run;
  }
  return train(sub, replay_cfg);
}

}  // namespace vrda
