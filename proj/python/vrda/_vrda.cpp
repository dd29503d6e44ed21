#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "vrda/analysis.hpp"
#include "vrda/baselines.hpp"
#include "vrda/dataio.hpp"
#include "vrda/predictor.hpp"
#include "vrda/report.hpp"
#include "vrda/trainer.hpp"

namespace py = pybind11;
using namespace vrda;

namespace {

SparseVector vector_from_entries(std::size_t dim,
                                 const std::map<std::size_t, double>& entries) {
  std::vector<std::pair<std::size_t, double>> pairs(entries.begin(),
                                                    entries.end());
  return SparseVector(dim, pairs);
}

std::map<std::size_t, double> vector_entries(const SparseVector& v) {
  return {v.entries().begin(), v.entries().end()};
}

TrainConfig make_config(const std::string& loss, const std::string& reg,
                        double lambda, double eta, std::uint32_t epochs,
                        const std::string& policy, const std::string& retention,
                        std::uint64_t seed) {
  TrainConfig cfg;
  cfg.loss = loss_kind_from_string(loss);
  cfg.reg = RegularizerSpec(reg_kind_from_string(reg), lambda);
  cfg.eta = eta;
  cfg.epochs = epochs;
  cfg.policy = policy_from_string(policy);
  cfg.retention = retention_from_string(retention);
  cfg.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_vrda, m) {
  m.doc() = "Sparse online linear classification with voted dual averaging";

  py::register_exception<ParseError>(m, "FormatError");

  py::class_<SparseVector>(m, "SparseVector")
      .def(py::init<std::size_t>(), py::arg("dim"))
      .def(py::init(&vector_from_entries), py::arg("dim"), py::arg("entries"))
      .def_property_readonly("dim", &SparseVector::dim)
      .def_property_readonly("nnz", &SparseVector::nnz)
      .def("entries", &vector_entries)
      .def("at", &SparseVector::at, py::arg("index"))
      .def("dot", &SparseVector::dot)
      .def("l2_norm", &SparseVector::l2_norm)
      .def("l1_norm", &SparseVector::l1_norm)
      .def("add_scaled", &SparseVector::add_scaled, py::arg("other"),
           py::arg("alpha"))
      .def("scaled", &SparseVector::scaled, py::arg("alpha"))
      .def("__eq__", [](const SparseVector& a, const SparseVector& b) {
        return a == b;
      })
      .def("__repr__", [](const SparseVector& v) {
        return "SparseVector(dim=" + std::to_string(v.dim()) +
               ", nnz=" + std::to_string(v.nnz()) + ")";
      });

  py::class_<Dataset>(m, "Dataset")
      .def(py::init<std::size_t>(), py::arg("dim"))
      .def_property_readonly("dim", &Dataset::dim)
      .def("add", [](Dataset& d, const SparseVector& x,
                     int y) { d.add(Example(x, y)); },
           py::arg("x"), py::arg("y"))
      .def("__len__", &Dataset::size)
      .def("__getitem__", [](const Dataset& d, std::size_t i) {
        if (i >= d.size()) throw py::index_error();
        return py::make_tuple(d[i].x, d[i].y);
      });

  py::class_<MistakeIndex>(m, "MistakeIndex")
      .def_readonly("epoch", &MistakeIndex::epoch)
      .def_readonly("sample", &MistakeIndex::sample)
      .def("__repr__", [](const MistakeIndex& mi) {
        return "MistakeIndex(epoch=" + std::to_string(mi.epoch) +
               ", sample=" + std::to_string(mi.sample) + ")";
      });

  py::class_<PredictorSnapshot>(m, "PredictorSnapshot")
      .def_readonly("w", &PredictorSnapshot::w)
      .def_readonly("c", &PredictorSnapshot::c);

  py::class_<TrainingRun>(m, "TrainingRun")
      .def_readonly("algo", &TrainingRun::algo)
      .def_property_readonly("mistakes", &TrainingRun::mistakes)
      .def_readonly("update_count", &TrainingRun::update_count)
      .def_readonly("snapshot_count", &TrainingRun::snapshot_count)
      .def_readonly("mistake_indices", &TrainingRun::mistake_indices)
      .def_readonly("nnz_curve", &TrainingRun::nnz_curve)
      .def_readonly("cumulative_mistakes",
                    &TrainingRun::cumulative_mistakes_curve)
      .def_readonly("max_subgradient_norm", &TrainingRun::max_subgradient_norm)
      .def_readonly("snapshots", &TrainingRun::snapshots)
      .def_property_readonly("final_weights",
                             [](const TrainingRun& r) {
                               return r.final_snapshot.w;
                             })
      .def("averaged_weights", &TrainingRun::averaged_weights)
      .def("per_epoch_mistakes", &TrainingRun::per_epoch_mistakes)
      .def("to_json", &run_to_json_string)
      .def_static("from_json", [](const std::string& text) {
        return run_from_json_string(text, "<string>");
      });

  py::class_<Metrics>(m, "Metrics")
      .def_readonly("accuracy", &Metrics::accuracy)
      .def_readonly("precision", &Metrics::precision)
      .def_readonly("recall", &Metrics::recall)
      .def_readonly("fscore", &Metrics::fscore)
      .def_readonly("mistakes", &Metrics::mistakes)
      .def_readonly("examples", &Metrics::examples);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("M_observed", &BoundReport::M_observed)
      .def_readonly("defined", &BoundReport::defined)
      .def_readonly("L_u", &BoundReport::L_u)
      .def_readonly("delta_u", &BoundReport::delta_u)
      .def_readonly("delta_bar_u", &BoundReport::delta_bar_u)
      .def_readonly("lambda_delta_u", &BoundReport::lambda_delta_u)
      .def_readonly("R", &BoundReport::R)
      .def_readonly("norm_u", &BoundReport::norm_u)
      .def_readonly("G", &BoundReport::G)
      .def_readonly("separable", &BoundReport::separable)
      .def_readonly("gamma", &BoundReport::gamma)
      .def_readonly("mistake_bound_applicable", &BoundReport::mistake_bound_applicable)
      .def_readonly("mistake_bound", &BoundReport::mistake_bound)
      .def_readonly("mistake_bound_satisfied", &BoundReport::mistake_bound_satisfied)
      .def_readonly("bound_separable", &BoundReport::bound_separable)
      .def_readonly("separable_bound_satisfied",
                    &BoundReport::separable_bound_satisfied)
      .def_readonly("regret", &BoundReport::regret)
      .def_readonly("regret_limit", &BoundReport::regret_limit)
      .def_readonly("regret_satisfied", &BoundReport::regret_satisfied)
      .def_readonly("expected_mistakes", &BoundReport::expected_mistakes)
      .def_readonly("online_to_batch", &BoundReport::online_to_batch)
      .def("all_satisfied", &BoundReport::all_satisfied)
      .def("to_json", &bound_report_to_json_string);

  m.def("generate",
        [](const std::string& kind, std::size_t n, std::size_t dim,
           double margin, double density, double flip, std::size_t candidates,
           std::uint64_t seed) {
          SynthSpec spec;
          spec.kind = synth_kind_from_string(kind);
          spec.n_examples = n;
          spec.dim = dim;
          spec.margin = margin;
          spec.density = density;
          spec.flip_rate = flip;
          spec.candidates = candidates;
          spec.seed = seed;
          SynthData out = generate(spec);
          return py::make_tuple(std::move(out.data), std::move(out.u));
        },
        py::arg("kind") = "separable", py::arg("n") = 1000,
        py::arg("dim") = 50, py::arg("margin") = 0.1,
        py::arg("density") = 0.1, py::arg("flip") = 0.1,
        py::arg("candidates") = 8, py::arg("seed") = 0);

  m.def("train",
        [](const Dataset& data, const std::string& loss, const std::string& reg,
           double lambda, double eta, std::uint32_t epochs,
           const std::string& policy, const std::string& retention,
           std::uint64_t seed) {
          return train(data, make_config(loss, reg, lambda, eta, epochs,
                                         policy, retention, seed));
        },
        py::arg("data"), py::arg("loss") = "hinge", py::arg("reg") = "none",
        py::arg("lambda_") = 0.0, py::arg("eta") = 1.0, py::arg("epochs") = 1,
        py::arg("policy") = "on-error", py::arg("retention") = "full",
        py::arg("seed") = 0);

  m.def("train_perceptron",
        [](const Dataset& data, std::uint32_t epochs,
           const std::string& variant) {
          return train_perceptron(data, epochs,
                                  variant == "voted"
                                      ? PerceptronVariant::voted
                                      : PerceptronVariant::averaged);
        },
        py::arg("data"), py::arg("epochs") = 1,
        py::arg("variant") = "averaged");

  m.def("train_truncated_gradient",
        [](const Dataset& data, const std::string& loss, double lambda,
           double eta, std::uint32_t trunc_period, std::uint32_t epochs) {
          return train_truncated_gradient(data, loss_kind_from_string(loss),
                                          lambda, eta, trunc_period, epochs);
        },
        py::arg("data"), py::arg("loss") = "hinge", py::arg("lambda_") = 0.0,
        py::arg("eta") = 0.1, py::arg("trunc_period") = 1,
        py::arg("epochs") = 1);

  m.def("replay_on_subsequence",
        [](const Dataset& data, const std::vector<MistakeIndex>& indices,
           const std::string& loss, const std::string& reg, double lambda,
           double eta) {
          TrainConfig cfg = make_config(loss, reg, lambda, eta, 1, "on-error",
                                        "full", 0);
          return replay_on_subsequence(data, indices, cfg);
        },
        py::arg("data"), py::arg("mistake_indices"), py::arg("loss") = "hinge",
        py::arg("reg") = "none", py::arg("lambda_") = 0.0, py::arg("eta") = 1.0);

  m.def("evaluate",
        [](const std::string& mode, const TrainingRun& run,
           const Dataset& test) {
          return evaluate(predict_mode_from_string(mode), run, test);
        },
        py::arg("mode"), py::arg("run"), py::arg("test"));
  m.def("vote_average_agreement", &vote_average_agreement, py::arg("run"),
        py::arg("test"));

  m.def("make_bound_report", &make_bound_report, py::arg("run"),
        py::arg("data"), py::arg("u"));
  m.def("estimate_expected_mistakes",
        [](const Dataset& data, const TrainingRun& run,
           std::uint32_t permutations, std::uint64_t seed, unsigned threads) {
          return estimate_expected_mistakes(data, run.config, permutations,
                                            seed, threads);
        },
        py::arg("data"), py::arg("run"), py::arg("permutations") = 20,
        py::arg("seed") = 0, py::arg("threads") = 0);
  m.def("online_to_batch_bound", &online_to_batch_bound,
        py::arg("expected_mistakes"), py::arg("m"));
  m.def("mistake_bound", &mistake_bound, py::arg("L_u"), py::arg("R"),
        py::arg("norm_u"), py::arg("lambda_delta_u"));
  m.def("quadratic_bound", &quadratic_bound, py::arg("a"), py::arg("b"),
        py::arg("c"));
  m.def("regret_bound", &regret_bound, py::arg("eta"), py::arg("G"),
        py::arg("norm_u"), py::arg("M"));
  m.def("optimal_eta", &optimal_eta, py::arg("G"), py::arg("norm_u"));
  m.def("data_radius", &data_radius, py::arg("data"));
  m.def("check_separability",
        [](const SparseVector& u, const Dataset& data) {
          Separability s = check_separability(u, data);
          return py::make_tuple(s.separable, s.gamma);
        },
        py::arg("u"), py::arg("data"));

  m.def("shrink", &shrink, py::arg("v"), py::arg("lambda_"));
  m.def("rda_update",
        [](const SparseVector& s, std::size_t k, double eta,
           const std::string& reg, double lambda) {
          return rda_update({s, k, eta},
                            RegularizerSpec(reg_kind_from_string(reg), lambda));
        },
        py::arg("s"), py::arg("k"), py::arg("eta"), py::arg("reg") = "none",
        py::arg("lambda_") = 0.0);

  m.def("read_svmlight",
        [](const std::string& path) { return read_svmlight(path); },
        py::arg("path"));
  m.def("write_svmlight",
        [](const std::string& path, const Dataset& data) {
          write_svmlight(path, data);
        },
        py::arg("path"), py::arg("data"));
  m.def("read_weights", &read_weights, py::arg("path"));
  m.def("write_weights", &write_weights, py::arg("path"), py::arg("w"));
}
