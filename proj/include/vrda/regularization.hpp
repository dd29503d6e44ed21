#ifndef VRDA_REGULARIZATION_HPP
#define VRDA_REGULARIZATION_HPP

#include <string>

#include "vrda/sparse_vector.hpp"

namespace vrda {

enum class RegKind { none, l1, l2 };

std::string to_string(RegKind kind);
RegKind reg_kind_from_string(const std::string& name);

/// Regularizer Psi(w) = lambda * psi(w), with psi the bare regularizer
/// (||w||_1 for l1, (1/2)||w||_2^2 for l2, 0 for none).
struct RegularizerSpec {
  RegKind kind = RegKind::none;
  double lambda = 0.0;

  RegularizerSpec() = default;
  RegularizerSpec(RegKind k, double l) : kind(k), lambda(k == RegKind::none ? 0.0 : l) {
    if (l < 0.0) throw std::invalid_argument("RegularizerSpec: lambda < 0");
  }

  static RegularizerSpec none() { return {}; }
  static RegularizerSpec l1(double lambda) { return {RegKind::l1, lambda}; }
  static RegularizerSpec l2(double lambda) { return {RegKind::l2, lambda}; }
};

/// Dual-averaging state: s holds the accumulated subgradients of the k
/// updates performed so far, eta the learning-rate parameter of
/// beta_k = eta * sqrt(k).
struct RdaState {
  SparseVector s;
  std::size_t k = 0;
  double eta = 1.0;
};

/// Coordinate-wise soft thresholding: shifts entries toward zero by
/// lambda and zeroes those with |value| <= lambda. Output is canonical.
SparseVector shrink(const SparseVector& g, double lambda);

/// Bare regularizer value psi(w) (lambda factored out).
double psi_bare(RegKind kind, const SparseVector& w);

/// Closed-form minimizer of
///   (1/k) s'w + Psi(w) + (beta_k/k) * (1/2)||w||_2^2,   beta_k = eta*sqrt(k):
///   none: w = -(sqrt(k)/eta) * s/k
///   l1:   w = -(sqrt(k)/eta) * shrink(s/k, lambda)
///   l2:   w = -s / (k*lambda + eta*sqrt(k))
SparseVector rda_update(const RdaState& state, const RegularizerSpec& reg);

/// Independent check for rda_update: minimizes the same objective by
/// coordinate-wise scalar search over the first `dims` coordinates.
/// Test-scale only (dims <= 10).
SparseVector rda_update_oracle(const RdaState& state,
                               const RegularizerSpec& reg, std::size_t dims);

}  // namespace vrda

#endif
