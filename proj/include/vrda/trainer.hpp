#ifndef VRDA_TRAINER_HPP
#define VRDA_TRAINER_HPP

#include "vrda/dataset.hpp"
#include "vrda/run.hpp"

namespace vrda {

/// Voted/plain RDA training.
///
/// policy == on_error runs the conservative loop: predict with the current
/// w_k (sign(0) = +1); a correct prediction only bumps the survival count;
/// a mistake accumulates the subgradient into s and produces
/// w_{k+1} = rda_update.
///
/// policy == every_step accumulates and updates on every sample (plain
/// RDA); mistakes are still counted and logged.
TrainingRun train(const Dataset& data, const TrainConfig& cfg);

/// Runs every-step updates on exactly the subsequence of `data` named by
/// `mistake_indices` (taken from a prior on_error run with the same cfg).
/// The produced snapshot weights match the original run's bitwise.
TrainingRun replay_on_subsequence(const Dataset& data,
                                  const std::vector<MistakeIndex>& mistake_indices,
                                  const TrainConfig& cfg);

}  // namespace vrda

#endif
