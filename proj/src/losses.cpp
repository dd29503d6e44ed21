#include "vrda/losses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vrda {

namespace {
// Clamp exp arguments so exponential-loss overflow cannot inject
// infinities into the subgradient sum.
constexpr double kExpClamp = 700.0;

double clamped_exp(double t) { return std::exp(std::min(t, kExpClamp)); }
}  // namespace

std::string to_string(LossKind kind) {
  switch (kind) {
    case LossKind::hinge: return "hinge";
    case LossKind::logistic: return "log";
    case LossKind::exponential: return "exp";
  }
  return "?";
}

LossKind loss_kind_from_string(const std::string& name) {
  if (name == "hinge") return LossKind::hinge;
  if (name == "log" || name == "logistic") return LossKind::logistic;
  if (name == "exp" || name == "exponential") return LossKind::exponential;
  throw std::invalid_argument("unknown loss kind: " + name);
}

double loss_value_at_margin(LossKind kind, double t) {
  switch (kind) {
    case LossKind::hinge:
      return std::max(0.0, 1.0 - t);
    case LossKind::logistic:
      // ln(1 + exp(-t)) without overflow for large |t|.
      return std::max(-t, 0.0) + std::log1p(std::exp(-std::abs(t)));
    case LossKind::exponential:
      return clamped_exp(-t);
  }
  return 0.0;
}

double loss_margin_derivative(LossKind kind, double t) {
  switch (kind) {
    case LossKind::hinge:
      return t < 1.0 ? -1.0 : 0.0;
    case LossKind::logistic:
      // -sigma(-t), computed from the stable side.
      return -1.0 / (1.0 + std::exp(t));
    case LossKind::exponential:
      return -clamped_exp(-t);
  }
  return 0.0;
}

double loss_value(LossKind kind, const SparseVector& w, const Example& z) {
  return loss_value_at_margin(kind, z.y * w.dot(z.x));
}

SparseVector loss_subgradient(LossKind kind, const SparseVector& w,
                              const Example& z) {
  double margin = z.y * w.dot(z.x);
  double d = loss_margin_derivative(kind, margin);
  if (d == 0.0) return SparseVector(w.dim());
  return z.x.scaled(d * z.y);
}

}  // namespace vrda
