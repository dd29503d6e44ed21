#include "vrda/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "json_util.hpp"
#include "vrda/analysis.hpp"
#include "vrda/baselines.hpp"
#include "vrda/dataio.hpp"
#include "vrda/predictor.hpp"
#include "vrda/report.hpp"
#include "vrda/trainer.hpp"

namespace vrda::cli {

namespace {

using nlohmann::json;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
  out << text << "\n";
  if (!out) throw std::runtime_error(out_path + ": write error");
}

// One row per processed sample; the nnz column tracks the weights in
// force after that sample (updates lag samples under on_error).
std::string curves_csv(const TrainingRun& run) {
  std::ostringstream os;
  os << "samples_processed,cumulative_mistakes,nnz\n";
  const bool every_step = run.config.policy == UpdatePolicy::every_step;
  for (std::size_t t = 0; t < run.cumulative_mistakes_curve.size(); ++t) {
    std::uint64_t updates =
        every_step ? t + 1 : run.cumulative_mistakes_curve[t];
    std::size_t z =
        updates == 0 ? 0 : run.nnz_curve[static_cast<std::size_t>(updates) - 1];
    os << t + 1 << "," << run.cumulative_mistakes_curve[t] << "," << z << "\n";
  }
  return os.str();
}

unsigned resolve_threads(unsigned requested, std::size_t jobs) {
  unsigned t = requested;
  if (t == 0) {
    if (const char* env = std::getenv("VRDA_THREADS"))
      t = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  if (t == 0) t = std::thread::hardware_concurrency();
  if (t == 0) t = 1;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

struct SynthArgs {
  std::string kind = "separable";
  std::size_t n = 1000;
  std::size_t dim = 50;
  double margin = 0.1;
  double density = 0.1;
  double flip = 0.1;
  std::size_t candidates = 8;
  std::uint64_t seed = 0;
  std::string out;
  std::string weights_out;
};

void cmd_synth(const SynthArgs& a) {
  SynthSpec spec;
  spec.kind = synth_kind_from_string(a.kind);
  spec.n_examples = a.n;
  spec.dim = a.dim;
  spec.margin = a.margin;
  spec.density = a.density;
  spec.flip_rate = a.flip;
  spec.candidates = a.candidates;
  spec.seed = a.seed;

  SynthData synth = generate(spec);
  write_svmlight(a.out, synth.data);
  if (!a.weights_out.empty()) write_weights(a.weights_out, synth.u);

  json info{{"kind", a.kind},
            {"examples", synth.data.size()},
            {"dim", synth.data.dim()},
            {"radius", data_radius(synth.data)},
            {"norm_u", synth.u.l2_norm()},
            {"out", a.out}};
  std::cout << info.dump(2) << "\n";
}

struct TrainArgs {
  std::string data;
  std::string algo = "vrda";
  std::string loss = "hinge";
  std::string reg = "none";
  double lambda = 0.0;
  double eta = 1.0;
  std::uint32_t epochs = 1;
  std::string policy = "on-error";
  std::string retention = "full";
  std::string variant = "averaged";
  std::uint32_t trunc_period = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string curves;
};

TrainingRun run_training(const TrainArgs& a, const Dataset& data) {
  if (a.algo == "vrda") {
    TrainConfig cfg;
    cfg.loss = loss_kind_from_string(a.loss);
    RegKind kind = reg_kind_from_string(a.reg);
    cfg.reg = RegularizerSpec(kind, a.lambda);
    cfg.eta = a.eta;
    cfg.epochs = a.epochs;
    cfg.policy = policy_from_string(a.policy);
    cfg.retention = retention_from_string(a.retention);
    cfg.seed = a.seed;
    return train(data, cfg);
  }
  if (a.algo == "perceptron")
    return train_perceptron(data, a.epochs,
                            a.variant == "voted" ? PerceptronVariant::voted
                                                 : PerceptronVariant::averaged);
  if (a.algo == "tg")
    return train_truncated_gradient(data, loss_kind_from_string(a.loss),
                                    a.lambda, a.eta, a.trunc_period, a.epochs);
  throw std::invalid_argument("unknown --algo '" + a.algo + "'");
}

void cmd_train(const TrainArgs& a) {
  Dataset data = read_svmlight(a.data);
  TrainingRun run = run_training(a, data);
  emit(a.out, run_to_json_string(run));
  if (!a.curves.empty()) {
    std::ofstream out(a.curves);
    if (!out) throw std::runtime_error(a.curves + ": cannot open for writing");
    out << curves_csv(run);
    if (!out) throw std::runtime_error(a.curves + ": write error");
  }
}

struct EvalArgs {
  std::string report;
  std::string data;
  std::string mode = "average";
  std::string out;
};

void cmd_eval(const EvalArgs& a) {
  TrainingRun run = read_run(a.report);
  Dataset test = read_svmlight(a.data);
  PredictMode mode = predict_mode_from_string(a.mode);
  Metrics m = evaluate(mode, run, test);
  double agreement = -1.0;
  if (mode == PredictMode::vote) agreement = vote_average_agreement(run, test);
  emit(a.out, metrics_to_json_string(m, mode, agreement));
}

struct BoundArgs {
  std::string report;
  std::string data;
  std::string comparator;
  std::uint32_t permutations = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out;
};

int cmd_bound(const BoundArgs& a) {
  TrainingRun run = read_run(a.report);
  Dataset data = read_svmlight(a.data);
  SparseVector u = read_weights(a.comparator);

  BoundReport rep = make_bound_report(run, data, u);
  if (a.permutations > 0) {
    rep.expected_mistakes = estimate_expected_mistakes(
        data, run.config, a.permutations, a.seed, a.threads);
    rep.online_to_batch =
        online_to_batch_bound(*rep.expected_mistakes, data.size());
  }
  emit(a.out, bound_report_to_json_string(rep));
  if (!rep.defined) {
    std::cerr << "warning: M = 0, relative strength and regret are undefined\n";
    return 0;
  }
  return rep.all_satisfied() ? 0 : 3;
}

struct BenchArgs {
  std::string data;
  std::string test;
  std::string matrix;
  std::vector<std::string> algos{"vrda"};
  std::vector<std::string> losses{"hinge"};
  std::vector<double> lambdas{0.0};
  double eta = 1.0;
  std::uint32_t epochs = 1;
  std::string policy = "on-error";
  std::uint32_t trunc_period = 1;
  unsigned threads = 0;
  std::string out;
};

void load_matrix(BenchArgs& a) {
  std::ifstream in(a.matrix);
  if (!in) throw ParseError(a.matrix + ": cannot open");
  json doc;
  try {
    std::ostringstream buf;
    buf << in.rdbuf();
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(a.matrix + ": " + e.what());
  }
  try {
    if (doc.contains("algos")) a.algos = doc["algos"].get<std::vector<std::string>>();
    if (doc.contains("losses")) a.losses = doc["losses"].get<std::vector<std::string>>();
    if (doc.contains("lambdas")) a.lambdas = doc["lambdas"].get<std::vector<double>>();
    if (doc.contains("eta")) a.eta = doc["eta"].get<double>();
    if (doc.contains("epochs")) a.epochs = doc["epochs"].get<std::uint32_t>();
    if (doc.contains("policy")) a.policy = doc["policy"].get<std::string>();
    if (doc.contains("trunc_period"))
      a.trunc_period = doc["trunc_period"].get<std::uint32_t>();
  } catch (const json::exception& e) {
    throw ParseError(a.matrix + ": bad matrix: " + e.what());
  }
}

struct BenchRow {
  std::string algo;
  std::string loss;
  double lambda = 0.0;
  double eta = 0.0;
  std::uint64_t M = 0;
  Metrics metrics;
  std::size_t nnz = 0;
  std::uint64_t update_count = 0;
};

void cmd_bench(BenchArgs& a) {
  if (!a.matrix.empty()) load_matrix(a);
  Dataset data = read_svmlight(a.data);
  Dataset test = a.test.empty() ? data : read_svmlight(a.test);

  struct Job {
    std::string algo, loss;
    double lambda;
  };
  std::vector<Job> jobs;
  for (const std::string& algo : a.algos)
    for (const std::string& loss : a.losses)
      for (double lambda : a.lambdas) jobs.push_back({algo, loss, lambda});
  if (jobs.empty()) throw std::invalid_argument("bench: empty config matrix");

  const UpdatePolicy policy = policy_from_string(a.policy);
  auto run_job = [&](const Job& job) -> BenchRow {
    TrainingRun run;
    double eta_used = a.eta;
    if (job.algo == "vrda") {
      TrainConfig cfg;
      cfg.loss = loss_kind_from_string(job.loss);
      cfg.reg = job.lambda > 0.0 ? RegularizerSpec::l1(job.lambda)
                                 : RegularizerSpec::none();
      cfg.eta = a.eta;
      cfg.epochs = a.epochs;
      cfg.policy = policy;
      cfg.retention = SnapshotRetention::final_and_average;
      run = train(data, cfg);
    } else if (job.algo == "perceptron" || job.algo == "perceptron-avg") {
      run = train_perceptron(data, a.epochs,
                             job.algo == "perceptron"
                                 ? PerceptronVariant::voted
                                 : PerceptronVariant::averaged);
      eta_used = 1.0;
    } else if (job.algo == "tg") {
      run = train_truncated_gradient(data, loss_kind_from_string(job.loss),
                                     job.lambda, a.eta, a.trunc_period,
                                     a.epochs);
    } else {
      throw std::invalid_argument("bench: unknown algo '" + job.algo + "'");
    }
    BenchRow row;
    row.algo = job.algo;
    row.loss = job.loss;
    row.lambda = job.lambda;
    row.eta = eta_used;
    row.M = run.mistakes();
    row.metrics = evaluate(PredictMode::average, run, test);
    row.nnz = run.final_snapshot.w.nnz();
    row.update_count = run.update_count;
    return row;
  };

  std::vector<BenchRow> rows(jobs.size());
  unsigned threads = resolve_threads(a.threads, jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size() || failed.load()) return;
      try {
        rows[i] = run_job(jobs[i]);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!failed.exchange(true)) error = e.what();
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failed.load()) throw std::invalid_argument(error);

  std::sort(rows.begin(), rows.end(), [](const BenchRow& x, const BenchRow& y) {
    return std::tie(x.algo, x.loss, x.lambda) < std::tie(y.algo, y.loss, y.lambda);
  });

  std::ostringstream os;
  os << "algo,loss,lambda,eta,M,accuracy,precision,recall,fscore,nnz,"
        "update_count\n";
  for (const BenchRow& r : rows) {
    os << r.algo << "," << r.loss << "," << format_double(r.lambda) << ","
       << format_double(r.eta) << "," << r.M << ","
       << format_double(r.metrics.accuracy) << ","
       << format_double(r.metrics.precision) << ","
       << format_double(r.metrics.recall) << ","
       << format_double(r.metrics.fscore) << "," << r.nnz << ","
       << r.update_count << "\n";
  }
  if (a.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(a.out);
    if (!out) throw std::runtime_error(a.out + ": cannot open for writing");
    out << os.str();
    if (!out) throw std::runtime_error(a.out + ": write error");
  }
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Sparse online linear classification with voted dual averaging"};
  app.require_subcommand(1);
  int exit_code = 0;

  SynthArgs synth_args;
  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic dataset");
  synth->add_option("--kind", synth_args.kind,
                    "separable | noisy | reranking")->capture_default_str();
  synth->add_option("--n", synth_args.n, "number of examples")
      ->capture_default_str();
  synth->add_option("--dim", synth_args.dim, "feature dimension")
      ->capture_default_str();
  synth->add_option("--margin", synth_args.margin, "planted margin gamma")
      ->capture_default_str();
  synth->add_option("--density", synth_args.density,
                    "support fraction per vector")->capture_default_str();
  synth->add_option("--flip", synth_args.flip, "label flip rate (noisy)")
      ->capture_default_str();
  synth->add_option("--candidates", synth_args.candidates,
                    "candidates per instance (reranking)")
      ->capture_default_str();
  synth->add_option("--seed", synth_args.seed, "RNG seed")
      ->capture_default_str();
  synth->add_option("-o,--out", synth_args.out, "output dataset (svmlight)")
      ->required();
  synth->add_option("--weights-out", synth_args.weights_out,
                    "write the planted comparator u (weights JSON)");
  synth->callback([&] { cmd_synth(synth_args); });

  TrainArgs train_args;
  CLI::App* train = app.add_subcommand("train", "Train a linear classifier");
  train->add_option("--data", train_args.data, "training set (svmlight)")
      ->required();
  train->add_option("--algo", train_args.algo, "vrda | perceptron | tg")
      ->capture_default_str();
  train->add_option("--loss", train_args.loss, "hinge | log | exp")
      ->capture_default_str();
  train->add_option("--reg", train_args.reg, "none | l1 | l2 (vrda)")
      ->capture_default_str();
  train->add_option("--lambda", train_args.lambda, "regularization weight")
      ->capture_default_str();
  train->add_option("--eta", train_args.eta, "learning-rate parameter")
      ->capture_default_str();
  train->add_option("--epochs", train_args.epochs, "passes over the data")
      ->capture_default_str();
  train->add_option("--policy", train_args.policy,
                    "on-error | every-step (vrda)")->capture_default_str();
  train->add_option("--retention", train_args.retention,
                    "full | final-and-average (vrda)")->capture_default_str();
  train->add_option("--variant", train_args.variant,
                    "voted | averaged (perceptron)")->capture_default_str();
  train->add_option("--trunc-period", train_args.trunc_period,
                    "truncation period K (tg)")->capture_default_str();
  train->add_option("--seed", train_args.seed, "recorded in the report")
      ->capture_default_str();
  train->add_option("-o,--out", train_args.out,
                    "report file (default: stdout)");
  train->add_option("--curves", train_args.curves,
                    "per-sample CSV (samples_processed,cumulative_mistakes,nnz)");
  train->callback([&] { cmd_train(train_args); });

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a training report");
  eval->add_option("--report", eval_args.report, "training report (JSON)")
      ->required();
  eval->add_option("--data", eval_args.data, "test set (svmlight)")->required();
  eval->add_option("--mode", eval_args.mode, "vote | average | final")
      ->capture_default_str();
  eval->add_option("-o,--out", eval_args.out, "metrics file (default: stdout)");
  eval->callback([&] { cmd_eval(eval_args); });

  BoundArgs bound_args;
  CLI::App* bound =
      app.add_subcommand("bound", "Check the run against its mistake bounds");
  bound->add_option("--report", bound_args.report, "training report (JSON)")
      ->required();
  bound->add_option("--data", bound_args.data, "training set (svmlight)")
      ->required();
  bound->add_option("-u,--comparator", bound_args.comparator,
                    "comparator weights (JSON)")->required();
  bound->add_option("--permutations", bound_args.permutations,
                    "permutation count for the expected-mistake estimate")
      ->capture_default_str();
  bound->add_option("--seed", bound_args.seed, "permutation RNG seed")
      ->capture_default_str();
  bound->add_option("--threads", bound_args.threads,
                    "permutation workers (0 = hardware)")
      ->capture_default_str();
  bound->add_option("-o,--out", bound_args.out, "report file (default: stdout)");
  bound->callback([&] { exit_code = cmd_bound(bound_args); });

  BenchArgs bench_args;
  CLI::App* bench =
      app.add_subcommand("bench", "Run an algo/loss/lambda cross product");
  bench->add_option("--data", bench_args.data, "training set (svmlight)")
      ->required();
  bench->add_option("--test", bench_args.test,
                    "test set (default: training set)");
  bench->add_option("--matrix", bench_args.matrix,
                    "JSON config matrix {algos, losses, lambdas, ...}");
  bench->add_option("--algos", bench_args.algos,
                    "vrda | perceptron | perceptron-avg | tg")
      ->delimiter(',')->capture_default_str();
  bench->add_option("--losses", bench_args.losses, "hinge | log | exp")
      ->delimiter(',')->capture_default_str();
  bench->add_option("--lambdas", bench_args.lambdas, "lambda values")
      ->delimiter(',')->capture_default_str();
  bench->add_option("--eta", bench_args.eta, "learning-rate parameter")
      ->capture_default_str();
  bench->add_option("--epochs", bench_args.epochs, "passes over the data")
      ->capture_default_str();
  bench->add_option("--policy", bench_args.policy, "on-error | every-step")
      ->capture_default_str();
  bench->add_option("--trunc-period", bench_args.trunc_period,
                    "truncation period K (tg)")->capture_default_str();
  bench->add_option("--threads", bench_args.threads,
                    "row workers (0 = VRDA_THREADS or hardware)")
      ->capture_default_str();
  bench->add_option("-o,--out", bench_args.out, "CSV file (default: stdout)");
  bench->callback([&] { cmd_bench(bench_args); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("vrda");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace vrda::cli
