#ifndef VRDA_RUN_HPP
#define VRDA_RUN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vrda/losses.hpp"
#include "vrda/regularization.hpp"
#include "vrda/sparse_vector.hpp"

namespace vrda {

enum class UpdatePolicy { on_error, every_step };
enum class SnapshotRetention { full, final_and_average };

std::string to_string(UpdatePolicy p);
UpdatePolicy policy_from_string(const std::string& name);
std::string to_string(SnapshotRetention r);
SnapshotRetention retention_from_string(const std::string& name);

/// A trained predictor together with the number of examples it survived
/// to classify correctly. Immutable once emitted by a run.
struct PredictorSnapshot {
  SparseVector w;
  std::uint64_t c = 0;
};

/// Position of a mistake: (epoch, sample index within the epoch), both
/// 0-based.
struct MistakeIndex {
  std::uint32_t epoch = 0;
  std::size_t sample = 0;

  bool operator==(const MistakeIndex&) const = default;
};

struct TrainConfig {
  LossKind loss = LossKind::hinge;
  RegularizerSpec reg;
  double eta = 1.0;
  std::uint32_t epochs = 1;
  UpdatePolicy policy = UpdatePolicy::on_error;
  SnapshotRetention retention = SnapshotRetention::full;
  std::uint64_t seed = 0;  // bookkeeping only; training itself is deterministic

  void validate() const {
    if (eta <= 0.0) throw std::invalid_argument("TrainConfig: eta <= 0");
    if (epochs < 1) throw std::invalid_argument("TrainConfig: epochs < 1");
  }
};

/// Full log of one training execution. With full retention, snapshots
/// holds w_1..w_{M+1} (M = mistakes, w_1 = 0); with final_and_average
/// retention only the first/final predictors and the running c-weighted
/// sum survive.
struct TrainingRun {
  std::string algo = "vrda";
  TrainConfig config;

  std::vector<PredictorSnapshot> snapshots;  // empty unless retention == full
  std::size_t snapshot_count = 0;

  // final_and_average retention keeps these instead of the full list.
  SparseVector first_weights;
  PredictorSnapshot final_snapshot;
  SparseVector weighted_sum;  // sum_k c_k * w_k over all snapshots

  std::vector<MistakeIndex> mistake_indices;
  std::vector<std::size_t> nnz_curve;                 // per update
  std::vector<std::uint64_t> cumulative_mistakes_curve;  // per sample
  SparseVector final_s;
  std::uint64_t update_count = 0;
  double max_subgradient_norm = 0.0;

  std::uint64_t mistakes() const { return mistake_indices.size(); }
  bool has_full_snapshots() const {
    return config.retention == SnapshotRetention::full;
  }

  /// The c-weighted average predictor (1/K) sum_k c_k w_k over the K
  /// retained snapshots. Available under either retention level.
  SparseVector averaged_weights() const;

  /// Mistakes per epoch, derived from mistake_indices.
  std::vector<std::uint64_t> per_epoch_mistakes() const;
};

}  // namespace vrda

#endif
