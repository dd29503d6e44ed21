#include "vrda/run.hpp"

#include <stdexcept>

namespace vrda {

std::string to_string(UpdatePolicy p) {
  return p == UpdatePolicy::on_error ? "on-error" : "every-step";
}

UpdatePolicy policy_from_string(const std::string& name) {
  if (name == "on-error" || name == "on_error") return UpdatePolicy::on_error;
  if (name == "every-step" || name == "every_step")
    return UpdatePolicy::every_step;
  throw std::invalid_argument("unknown update policy: " + name);
}

std::string to_string(SnapshotRetention r) {
  return r == SnapshotRetention::full ? "full" : "final-and-average";
}

SnapshotRetention retention_from_string(const std::string& name) {
  if (name == "full") return SnapshotRetention::full;
  if (name == "final-and-average" || name == "final_and_average")
    return SnapshotRetention::final_and_average;
  throw std::invalid_argument("unknown retention level: " + name);
}

SparseVector TrainingRun::averaged_weights() const {
  if (snapshot_count == 0)
    throw std::logic_error("TrainingRun: no snapshots recorded");
  return weighted_sum.scaled(1.0 / static_cast<double>(snapshot_count));
}

std::vector<std::uint64_t> TrainingRun::per_epoch_mistakes() const {
  std::vector<std::uint64_t> out(config.epochs, 0);
  for (const MistakeIndex& mi : mistake_indices) {
    if (mi.epoch < out.size()) ++out[mi.epoch];
  }
  return out;
}

}  // namespace vrda
