#ifndef VRDA_LOSSES_HPP
#define VRDA_LOSSES_HPP

#include <string>

#include "vrda/dataset.hpp"
#include "vrda/sparse_vector.hpp"

namespace vrda {

enum class LossKind { hinge, logistic, exponential };

std::string to_string(LossKind kind);
LossKind loss_kind_from_string(const std::string& name);

/// Convex surrogate loss of the linear predictor w on example z.
/// hinge: max(0, 1 - y w'x); logistic: ln(1 + exp(-y w'x)), overflow-safe;
/// exponential: exp(-y w'x) with the exponent clamped at 700.
double loss_value(LossKind kind, const SparseVector& w, const Example& z);

/// A subgradient of loss_value at w. At the hinge kink (y w'x = 1) the
/// zero vector is returned.
SparseVector loss_subgradient(LossKind kind, const SparseVector& w,
                              const Example& z);

/// Scalar forms on the margin t = y * w'x; the vector versions above wrap
/// these.
double loss_value_at_margin(LossKind kind, double margin);
/// d/dt of the loss at margin t (subgradient choice at the hinge kink: 0).
double loss_margin_derivative(LossKind kind, double margin);

}  // namespace vrda

#endif
