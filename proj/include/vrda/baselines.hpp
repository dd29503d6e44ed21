#ifndef VRDA_BASELINES_HPP
#define VRDA_BASELINES_HPP

#include "vrda/dataset.hpp"
#include "vrda/run.hpp"

namespace vrda {

enum class PerceptronVariant { voted, averaged };

/// Classic conservative perceptron: on error w_{k+1} = w_k + y x, learning
/// rate 1. Survival counters and run logging follow the same scheme as
/// train(). The voted and averaged variants train identically; the
/// variant is recorded so evaluation defaults can differ.
TrainingRun train_perceptron(const Dataset& data, std::uint32_t epochs,
                             PerceptronVariant variant = PerceptronVariant::averaged);

/// Truncated-gradient baseline: every-step descent w <- w - eta g, and
/// every K-th step w <- shrink(w, K eta lambda).
TrainingRun train_truncated_gradient(const Dataset& data, LossKind loss,
                                     double lambda, double eta,
                                     std::uint32_t trunc_period,
                                     std::uint32_t epochs);

}  // namespace vrda

#endif
