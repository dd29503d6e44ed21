#include "vrda/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "vrda/rng.hpp"
#include "vrda/trainer.hpp"

namespace vrda {

namespace {

// Snapshot index of the predictor that was active at each logged mistake.
// on_error runs update exactly at mistakes, so the k-th mistake was made
// by snapshot k-1; every_step runs update once per sample, so the active
// snapshot at flat sample position p is snapshot p.
std::vector<std::size_t> active_snapshot_indices(const TrainingRun& run) {
  std::vector<std::size_t> out;
  out.reserve(run.mistake_indices.size());
  if (run.config.policy == UpdatePolicy::on_error) {
    for (std::size_t k = 0; k < run.mistake_indices.size(); ++k)
      out.push_back(k);
  } else {
    if (run.config.epochs == 0 ||
        run.cumulative_mistakes_curve.size() % run.config.epochs != 0)
      throw std::logic_error("active_snapshot_indices: malformed run");
    std::size_t m = run.cumulative_mistakes_curve.size() / run.config.epochs;
    for (const MistakeIndex& mi : run.mistake_indices)
      out.push_back(static_cast<std::size_t>(mi.epoch) * m + mi.sample);
  }
  return out;
}

void require_full_snapshots(const TrainingRun& run, const char* who) {
  if (!run.has_full_snapshots())
    throw std::invalid_argument(std::string(who) + ": run lacks full snapshots");
}

}  // namespace

RelativeStrength relative_strength(const Comparator& u, const TrainingRun& run,
                                   const RegularizerSpec& reg) {
  require_full_snapshots(run, "relative_strength");
  const std::uint64_t M = run.mistakes();
  if (M == 0)
    throw std::invalid_argument("relative_strength: undefined for M = 0");

  double psi_sum = 0.0;
  SparseVector w_mean(run.first_weights.dim());
  for (std::size_t idx : active_snapshot_indices(run)) {
    const SparseVector& wk = run.snapshots.at(idx).w;
    psi_sum += psi_bare(reg.kind, wk);
    w_mean = w_mean.add_scaled(wk, 1.0 / static_cast<double>(M));
  }
  double psi_u = psi_bare(reg.kind, u);
  return {psi_u - psi_sum / static_cast<double>(M),
          psi_u - psi_bare(reg.kind, w_mean)};
}

double subsequence_loss(const Comparator& u, const Dataset& data,
                        const std::vector<MistakeIndex>& mistake_indices,
                        LossKind loss) {
  double total = 0.0;
  for (const MistakeIndex& mi : mistake_indices) {
    if (mi.sample >= data.size())
      throw std::out_of_range("subsequence_loss: sample index out of range");
    total += loss_value(loss, u, data[mi.sample]);
  }
  return total;
}

double regret_observed(const Comparator& u, const TrainingRun& run,
                       const Dataset& data, const RegularizerSpec& reg) {
  require_full_snapshots(run, "regret_observed");
  if (run.mistakes() == 0)
    throw std::invalid_argument("regret_observed: undefined for M = 0");

  const double psi_u = reg.lambda * psi_bare(reg.kind, u);
  double regret = 0.0;
  const auto active = active_snapshot_indices(run);
  for (std::size_t k = 0; k < run.mistake_indices.size(); ++k) {
    const MistakeIndex& mi = run.mistake_indices[k];
    if (mi.sample >= data.size())
      throw std::out_of_range("regret_observed: sample index out of range");
    const Example& z = data[mi.sample];
    const SparseVector& wk = run.snapshots.at(active[k]).w;
    regret += loss_value(run.config.loss, wk, z) +
              reg.lambda * psi_bare(reg.kind, wk);
    regret -= loss_value(run.config.loss, u, z) + psi_u;
  }
  return regret;
}

double regret_bound(double eta, double G, double norm_u, std::uint64_t M) {
  if (eta <= 0.0) throw std::invalid_argument("regret_bound: eta <= 0");
  return (0.5 * eta * norm_u * norm_u + G * G / eta) *
         std::sqrt(static_cast<double>(M));
}

double optimal_eta(double G, double norm_u) {
  if (G <= 0.0 || norm_u <= 0.0)
    throw std::invalid_argument("optimal_eta: G and ||u|| must be positive");
  return std::sqrt(2.0) * G / norm_u;
}

std::pair<double, double> quadratic_bound(double a, double b, double c) {
  if (a <= 0.0) throw std::invalid_argument("quadratic_bound: a <= 0");
  if (b < 0.0 || c < 0.0)
    throw std::invalid_argument("quadratic_bound: b, c must be >= 0");
  double ba = b / a, ca = c / a;
  double mid = ca + ba * ba + ba * std::sqrt(ca);
  double root = std::sqrt(ca) + ba;
  return {mid, root * root};
}

std::optional<double> mistake_bound(double L_u, double R, double norm_u,
                                     double lambda_delta_u) {
  if (L_u < 0.0) throw std::invalid_argument("mistake_bound: L(u) < 0");
  if (R < 0.0) throw std::invalid_argument("mistake_bound: R < 0");
  if (norm_u < 0.0) throw std::invalid_argument("mistake_bound: ||u|| < 0");
  if (lambda_delta_u >= 1.0) return std::nullopt;
  double denom = 1.0 - lambda_delta_u;
  double root = std::sqrt(L_u / denom) + std::sqrt(2.0) * R * norm_u / denom;
  return root * root;
}

Separability check_separability(const Comparator& u, const Dataset& data) {
  if (u.nnz() == 0)
    throw std::invalid_argument("check_separability: u = 0, margin undefined");
  Separability out;
  out.separable = true;
  for (const Example& z : data) {
    if (z.y * u.dot(z.x) < 1.0) {
      out.separable = false;
      break;
    }
  }
  out.gamma = 1.0 / u.l2_norm();
  return out;
}

double data_radius(const Dataset& data) {
  if (data.empty()) throw std::invalid_argument("data_radius: empty dataset");
  double r = 0.0;
  for (const Example& z : data) r = std::max(r, z.x.l2_norm());
  return r;
}

double online_to_batch_bound(double expected_mistakes, std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("online_to_batch_bound: m < 1");
  if (expected_mistakes < 0.0)
    throw std::invalid_argument("online_to_batch_bound: E < 0");
  return 2.0 * expected_mistakes / (static_cast<double>(m) + 1.0);
}

double estimate_expected_mistakes(const Dataset& data, const TrainConfig& cfg,
                                  std::uint32_t permutations,
                                  std::uint64_t seed, unsigned threads) {
  if (permutations < 1)
    throw std::invalid_argument("estimate_expected_mistakes: permutations < 1");
  if (data.empty())
    throw std::invalid_argument("estimate_expected_mistakes: empty dataset");

  TrainConfig run_cfg = cfg;
  run_cfg.epochs = 1;
  run_cfg.policy = UpdatePolicy::on_error;
  run_cfg.retention = SnapshotRetention::final_and_average;

  auto run_one = [&](std::uint32_t p) -> std::uint64_t {
    Rng rng(seed, p);
    std::vector<std::size_t> order(data.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    Dataset permuted(data.dim());
    for (std::size_t i : order) permuted.add(data[i]);
    return train(permuted, run_cfg).mistakes();
  };

  if (threads == 0) threads = std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, permutations));

  // Integer totals commute, so the estimate is thread-schedule independent.
  std::atomic<std::uint32_t> next{0};
  std::atomic<std::uint64_t> total{0};
  auto worker = [&] {
    for (;;) {
      std::uint32_t p = next.fetch_add(1);
      if (p >= permutations) return;
      total.fetch_add(run_one(p));
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return static_cast<double>(total.load()) / static_cast<double>(permutations);
}

bool BoundReport::all_satisfied() const {
  if (mistake_bound_satisfied && !*mistake_bound_satisfied) return false;
  if (separable_bound_satisfied && !*separable_bound_satisfied) return false;
  if (regret_satisfied && !*regret_satisfied) return false;
  return true;
}

BoundReport make_bound_report(const TrainingRun& run, const Dataset& data,
                              const Comparator& u) {
  BoundReport rep;
  rep.M_observed = run.mistakes();
  rep.R = data_radius(data);
  rep.norm_u = u.l2_norm();
  rep.G = run.config.loss == LossKind::hinge ? rep.R
                                             : run.max_subgradient_norm;
  if (u.nnz() > 0) {
    Separability sep = check_separability(u, data);
    rep.separable = sep.separable;
    if (sep.separable) rep.gamma = sep.gamma;
  }
  if (rep.M_observed == 0) return rep;  // delta/regret undefined, no checks

  rep.defined = true;
  const RegularizerSpec& reg = run.config.reg;
  rep.L_u = subsequence_loss(u, data, run.mistake_indices, run.config.loss);
  RelativeStrength rs = relative_strength(u, run, reg);
  rep.delta_u = rs.delta;
  rep.delta_bar_u = rs.delta_bar;
  rep.lambda_delta_u = reg.lambda * rs.delta;
  rep.regret = regret_observed(u, run, data, reg);
  rep.regret_limit = regret_bound(run.config.eta, rep.G, rep.norm_u,
                                  rep.M_observed);

  // The mistake-bound analysis covers conservative single-epoch runs.
  const bool asserted = run.config.policy == UpdatePolicy::on_error &&
                        run.config.epochs == 1;
  if (!asserted) return rep;

  rep.regret_satisfied = rep.regret <= rep.regret_limit + 1e-9;
  rep.mistake_bound_applicable = rep.lambda_delta_u < 1.0;
  rep.mistake_bound =
      mistake_bound(rep.L_u, rep.G, rep.norm_u, rep.lambda_delta_u);
  if (rep.mistake_bound)
    rep.mistake_bound_satisfied =
        static_cast<double>(rep.M_observed) <= *rep.mistake_bound;
  if (rep.separable && run.config.loss == LossKind::hinge &&
      rep.mistake_bound_applicable && rep.gamma) {
    double denom = 1.0 - rep.lambda_delta_u;
    double ratio = rep.R / *rep.gamma;
    rep.bound_separable = 2.0 * ratio * ratio / (denom * denom);
    rep.separable_bound_satisfied =
        static_cast<double>(rep.M_observed) <= *rep.bound_separable;
  }
  return rep;
}

}  // namespace vrda
