#include "vrda/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "json_util.hpp"
#include "vrda/dataio.hpp"

namespace vrda {

using nlohmann::json;

namespace {

json config_to_json(const TrainConfig& cfg) {
  return json{{"loss", to_string(cfg.loss)},
              {"reg", to_string(cfg.reg.kind)},
              {"lambda", cfg.reg.lambda},
              {"eta", cfg.eta},
              {"epochs", cfg.epochs},
              {"policy", to_string(cfg.policy)},
              {"retention", to_string(cfg.retention)},
              {"seed", cfg.seed}};
}

TrainConfig config_from_json(const json& doc, const std::string& name) {
  for (const char* key : {"loss", "reg", "lambda", "eta", "epochs", "policy",
                          "retention", "seed"})
    if (!doc.contains(key))
      throw ParseError(name + ": config missing key '" + key + "'");
  TrainConfig cfg;
  try {
    cfg.loss = loss_kind_from_string(doc["loss"].get<std::string>());
    RegKind kind = reg_kind_from_string(doc["reg"].get<std::string>());
    cfg.reg = RegularizerSpec(kind, doc["lambda"].get<double>());
    cfg.eta = doc["eta"].get<double>();
    cfg.epochs = doc["epochs"].get<std::uint32_t>();
    cfg.policy = policy_from_string(doc["policy"].get<std::string>());
    cfg.retention = retention_from_string(doc["retention"].get<std::string>());
    cfg.seed = doc["seed"].get<std::uint64_t>();
  } catch (const std::invalid_argument& e) {
    throw ParseError(name + ": " + e.what());
  } catch (const json::exception& e) {
    throw ParseError(name + ": bad config: " + e.what());
  }
  return cfg;
}

}  // namespace

std::string run_to_json_string(const TrainingRun& run) {
  json doc;
  doc["algo"] = run.algo;
  doc["config"] = config_to_json(run.config);
  doc["mistakes"] = run.mistakes();
  doc["update_count"] = run.update_count;
  doc["snapshot_count"] = run.snapshot_count;
  doc["max_subgradient_norm"] = run.max_subgradient_norm;

  json indices = json::array();
  for (const MistakeIndex& mi : run.mistake_indices)
    indices.push_back(json::array({mi.epoch, mi.sample}));
  doc["mistake_indices"] = std::move(indices);
  doc["per_epoch_mistakes"] = run.per_epoch_mistakes();
  doc["nnz_curve"] = run.nnz_curve;
  doc["cumulative_mistakes"] = run.cumulative_mistakes_curve;

  doc["first_weights"] = detail::weights_to_json(run.first_weights);
  doc["final_weights"] = detail::weights_to_json(run.final_snapshot.w);
  doc["final_c"] = run.final_snapshot.c;
  doc["weighted_sum"] = detail::weights_to_json(run.weighted_sum);
  doc["final_s"] = detail::weights_to_json(run.final_s);
  doc["averaged_weights"] = run.snapshot_count > 0
                                ? detail::weights_to_json(run.averaged_weights())
                                : json();

  if (run.has_full_snapshots()) {
    json snaps = json::array();
    for (const PredictorSnapshot& s : run.snapshots)
      snaps.push_back(json{{"c", s.c}, {"w", detail::weights_to_json(s.w)}});
    doc["snapshots"] = std::move(snaps);
  }
  return doc.dump(2);
}

TrainingRun run_from_json_string(const std::string& text,
                                 const std::string& name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(name + ": " + e.what());
  }
  for (const char* key :
       {"algo", "config", "mistakes", "update_count", "snapshot_count",
        "max_subgradient_norm", "mistake_indices", "nnz_curve",
        "cumulative_mistakes", "first_weights", "final_weights", "final_c",
        "weighted_sum", "final_s"})
    if (!doc.contains(key))
      throw ParseError(name + ": report missing key '" + key + "'");

  TrainingRun run;
  try {
    run.algo = doc["algo"].get<std::string>();
    run.config = config_from_json(doc["config"], name);
    run.update_count = doc["update_count"].get<std::uint64_t>();
    run.snapshot_count = doc["snapshot_count"].get<std::size_t>();
    run.max_subgradient_norm = doc["max_subgradient_norm"].get<double>();

    for (const json& pair : doc["mistake_indices"]) {
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError(name + ": mistake_indices entries must be pairs");
      run.mistake_indices.push_back(
          {pair[0].get<std::uint32_t>(), pair[1].get<std::size_t>()});
    }
    run.nnz_curve = doc["nnz_curve"].get<std::vector<std::size_t>>();
    run.cumulative_mistakes_curve =
        doc["cumulative_mistakes"].get<std::vector<std::uint64_t>>();

    run.first_weights = detail::weights_from_json(doc["first_weights"], name);
    run.final_snapshot.w = detail::weights_from_json(doc["final_weights"], name);
    run.final_snapshot.c = doc["final_c"].get<std::uint64_t>();
    run.weighted_sum = detail::weights_from_json(doc["weighted_sum"], name);
    run.final_s = detail::weights_from_json(doc["final_s"], name);

    if (run.config.retention == SnapshotRetention::full) {
      if (!doc.contains("snapshots"))
        throw ParseError(name + ": full retention report lacks snapshots");
      for (const json& s : doc["snapshots"]) {
        if (!s.is_object() || !s.contains("c") || !s.contains("w"))
          throw ParseError(name + ": snapshot entries need {c, w}");
        run.snapshots.push_back({detail::weights_from_json(s["w"], name),
                                 s["c"].get<std::uint64_t>()});
      }
      if (run.snapshots.size() != run.snapshot_count)
        throw ParseError(name + ": snapshot_count mismatch");
    }
  } catch (const json::exception& e) {
    throw ParseError(name + ": bad report: " + e.what());
  }
  if (doc["mistakes"].get<std::uint64_t>() != run.mistakes())
    throw ParseError(name + ": mistakes does not match mistake_indices");
  return run;
}

TrainingRun read_run(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_from_json_string(buf.str(), path);
}

void write_run(const std::string& path, const TrainingRun& run) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << run_to_json_string(run) << "\n";
  if (!out) throw std::runtime_error(path + ": write error");
}

std::string bound_report_to_json_string(const BoundReport& rep) {
  auto opt_num = [](const std::optional<double>& v) {
    return v ? json(*v) : json();
  };
  auto opt_bool = [](const std::optional<bool>& v) {
    return v ? json(*v) : json();
  };
  json doc;
  doc["M_observed"] = rep.M_observed;
  doc["defined"] = rep.defined;
  doc["L_u"] = rep.L_u;
  doc["delta_u"] = rep.delta_u;
  doc["delta_bar_u"] = rep.delta_bar_u;
  doc["lambda_delta_u"] = rep.lambda_delta_u;
  doc["R"] = rep.R;
  doc["norm_u"] = rep.norm_u;
  doc["G"] = rep.G;
  doc["separable"] = rep.separable;
  doc["gamma"] = opt_num(rep.gamma);
  doc["mistake_bound_applicable"] = rep.mistake_bound_applicable;
  doc["mistake_bound"] = opt_num(rep.mistake_bound);
  doc["mistake_bound_satisfied"] = opt_bool(rep.mistake_bound_satisfied);
  doc["bound_separable"] = opt_num(rep.bound_separable);
  doc["separable_bound_satisfied"] = opt_bool(rep.separable_bound_satisfied);
  doc["regret"] = rep.regret;
  doc["regret_limit"] = rep.regret_limit;
  doc["regret_satisfied"] = opt_bool(rep.regret_satisfied);
  doc["expected_mistakes"] = opt_num(rep.expected_mistakes);
  doc["online_to_batch"] = opt_num(rep.online_to_batch);
  doc["all_satisfied"] = rep.all_satisfied();
  return doc.dump(2);
}

std::string metrics_to_json_string(const Metrics& m, PredictMode mode,
                                   double agreement) {
  json doc{{"mode", to_string(mode)},       {"accuracy", m.accuracy},
           {"precision", m.precision},      {"recall", m.recall},
           {"fscore", m.fscore},            {"mistakes", m.mistakes},
           {"examples", m.examples}};
  doc["vote_average_agreement"] = agreement >= 0.0 ? json(agreement) : json();
  return doc.dump(2);
}

}  // namespace vrda
