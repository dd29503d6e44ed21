#ifndef VRDA_ANALYSIS_HPP
#define VRDA_ANALYSIS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "vrda/dataset.hpp"
#include "vrda/run.hpp"

namespace vrda {

/// Reference predictor the bounds are evaluated against.
using Comparator = SparseVector;

/// Relative strength of regularization: delta = psi(u) - (1/M) sum_k
/// psi(w_k) over the M predictors active at the run's mistakes, and the
/// relaxed delta_bar = psi(u) - psi(mean of those predictors). Uses the
/// bare regularizer psi (lambda factored out).
struct RelativeStrength {
  double delta = 0.0;
  double delta_bar = 0.0;
};
RelativeStrength relative_strength(const Comparator& u, const TrainingRun& run,
                                   const RegularizerSpec& reg);

/// Total loss of u over the mistake subsequence: L(u) = sum_k l_{i(k)}(u).
double subsequence_loss(const Comparator& u, const Dataset& data,
                        const std::vector<MistakeIndex>& mistake_indices,
                        LossKind loss);

/// Observed regret over the mistake subsequence:
///   sum_k (l_{i(k)}(w_k) + Psi(w_k)) - sum_k (l_{i(k)}(u) + Psi(u)),
/// Psi = lambda * psi.
double regret_observed(const Comparator& u, const TrainingRun& run,
                       const Dataset& data, const RegularizerSpec& reg);

/// Regret upper bound (eta/2 ||u||^2 + G^2/eta) sqrt(M); equals
/// sqrt(2) G ||u|| sqrt(M) at the minimizing eta = sqrt(2) G / ||u||.
double regret_bound(double eta, double G, double norm_u, std::uint64_t M);
double optimal_eta(double G, double norm_u);

/// For a, b, c > 0, a x - b sqrt(x) - c <= 0 implies x <= mid <= outer with
///   mid   = c/a + (b/a)^2 + (b/a) sqrt(c/a)
///   outer = (sqrt(c/a) + b/a)^2.
std::pair<double, double> quadratic_bound(double a, double b, double c);

/// Mistake bound (sqrt(L/(1-ld)) + sqrt(2) R ||u|| / (1-ld))^2 when
/// lambda*delta < 1; nullopt otherwise (the inequality is then vacuous).
std::optional<double> mistake_bound(double L_u, double R, double norm_u,
                                     double lambda_delta_u);

/// separable iff y_i u'x_i >= 1 for all i; margin gamma = 1/||u||.
struct Separability {
  bool separable = false;
  double gamma = 0.0;
};
Separability check_separability(const Comparator& u, const Dataset& data);

/// R = max_i ||x_i||_2.
double data_radius(const Dataset& data);

/// Leave-one-out generalization bound 2E/(m+1).
double online_to_batch_bound(double expected_mistakes, std::uint64_t m);

/// Mean mistake count of single-epoch on_error runs over uniformly random
/// permutations of the data. Permutation p draws from substream (seed, p),
/// so the estimate is independent of thread count. threads = 0 picks
/// hardware concurrency.
double estimate_expected_mistakes(const Dataset& data, const TrainConfig& cfg,
                                  std::uint32_t permutations,
                                  std::uint64_t seed,
                                  unsigned threads = 0);

/// Every bound of the mistake-bound and online-to-batch analyses evaluated
/// on one run, with satisfied/applicability flags.
struct BoundReport {
  std::uint64_t M_observed = 0;
  bool defined = false;  // false when M = 0: delta/regret are undefined

  double L_u = 0.0;
  double delta_u = 0.0;
  double delta_bar_u = 0.0;
  double lambda_delta_u = 0.0;
  double R = 0.0;
  double norm_u = 0.0;
  double G = 0.0;

  bool separable = false;
  std::optional<double> gamma;

  bool mistake_bound_applicable = false;  // lambda * delta < 1
  std::optional<double> mistake_bound;
  std::optional<bool> mistake_bound_satisfied;

  std::optional<double> bound_separable;  // 2 (R/gamma)^2 / (1-ld)^2
  std::optional<bool> separable_bound_satisfied;

  double regret = 0.0;
  double regret_limit = 0.0;
  std::optional<bool> regret_satisfied;  // asserted for single-epoch on_error

  std::optional<double> expected_mistakes;     // filled when estimated
  std::optional<double> online_to_batch;       // 2E/(m+1)

  /// True when no applicable bound is violated.
  bool all_satisfied() const;
};

/// Evaluates the full report for a run against comparator u. Requires full
/// snapshots when M >= 1.
BoundReport make_bound_report(const TrainingRun& run, const Dataset& data,
                              const Comparator& u);

}  // namespace vrda

#endif
