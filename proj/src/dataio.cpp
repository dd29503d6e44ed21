#include "vrda/dataio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "json_util.hpp"
#include "vrda/rng.hpp"

namespace vrda {

std::string to_string(SynthKind kind) {
  switch (kind) {
    case SynthKind::separable: return "separable";
    case SynthKind::noisy: return "noisy";
    case SynthKind::reranking: return "reranking";
  }
  throw std::logic_error("to_string: bad SynthKind");
}

SynthKind synth_kind_from_string(const std::string& name) {
  if (name == "separable") return SynthKind::separable;
  if (name == "noisy") return SynthKind::noisy;
  if (name == "reranking") return SynthKind::reranking;
  throw std::invalid_argument("unknown dataset kind: " + name);
}

void SynthSpec::validate() const {
  if (n_examples < 1) throw std::invalid_argument("SynthSpec: n_examples < 1");
  if (dim < 1) throw std::invalid_argument("SynthSpec: dim < 1");
  if (!(margin > 0.0)) throw std::invalid_argument("SynthSpec: margin <= 0");
  if (!(density > 0.0) || density > 1.0)
    throw std::invalid_argument("SynthSpec: density outside (0, 1]");
  if (flip_rate < 0.0 || flip_rate >= 0.5)
    throw std::invalid_argument("SynthSpec: flip_rate outside [0, 0.5)");
  if (kind == SynthKind::reranking && candidates < 2)
    throw std::invalid_argument("SynthSpec: candidates < 2");
}

namespace {

std::size_t support_size(double density, std::size_t dim) {
  auto k = static_cast<std::size_t>(std::ceil(density * static_cast<double>(dim)));
  return std::clamp<std::size_t>(k, 1, dim);
}

std::vector<std::size_t> sample_support(Rng& rng, std::size_t k,
                                        std::size_t dim) {
  // Floyd's algorithm: k distinct indices without materializing [0, dim).
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  for (std::size_t j = dim - k; j < dim; ++j) {
    std::size_t t = static_cast<std::size_t>(rng.bounded(j + 1));
    if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) t = j;
    chosen.push_back(t);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

SparseVector random_unit_vector(Rng& rng, std::size_t k, std::size_t dim,
                                bool gaussian) {
  for (;;) {
    std::vector<std::pair<std::size_t, double>> entries;
    entries.reserve(k);
    for (std::size_t idx : sample_support(rng, k, dim)) {
      double v = gaussian ? rng.normal() : rng.uniform(-1.0, 1.0);
      entries.emplace_back(idx, v);
    }
    SparseVector x(dim, entries);
    double norm = x.l2_norm();
    if (norm > 1e-12) return x.scaled(1.0 / norm);
  }
}

// Planted separator with ||u|| = 1/margin, so y u'x >= 1 is exactly a
// margin-`margin` constraint on unit instances.
SparseVector planted_comparator(Rng& rng, const SynthSpec& spec) {
  SparseVector u0 =
      random_unit_vector(rng, support_size(spec.density, spec.dim), spec.dim,
                         /*gaussian=*/true);
  return u0.scaled(1.0 / spec.margin);
}

SynthData generate_pointwise(const SynthSpec& spec) {
  Rng rng(spec.seed, 0);
  SparseVector u = planted_comparator(rng, spec);
  std::size_t k = support_size(spec.density, spec.dim);

  Dataset data(spec.dim);
  const std::size_t max_attempts = 5000;
  for (std::size_t i = 0; i < spec.n_examples; ++i) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
      SparseVector x = random_unit_vector(rng, k, spec.dim, /*gaussian=*/false);
      double score = u.dot(x);
      if (std::fabs(score) < 1.0) continue;  // inside the margin band
      int y = score > 0.0 ? 1 : -1;
      if (spec.kind == SynthKind::noisy && rng.uniform() < spec.flip_rate)
        y = -y;
      data.add(Example(std::move(x), y));
      placed = true;
      break;
    }
    if (!placed)
      throw std::domain_error(
          "generate: margin rejection failed; lower --margin or raise "
          "--density");
  }
  return {std::move(data), std::move(u)};
}

// Preference pairs: a planted scorer ranks candidate feature vectors and
// the instance is (best - runner-up) with label +1. Pairs whose score gap
// is below `margin` are rejected, so v/margin separates the output with
// y u'x >= 1.
SynthData generate_reranking(const SynthSpec& spec) {
  Rng rng(spec.seed, 0);
  SparseVector u = planted_comparator(rng, spec);
  std::size_t k = support_size(spec.density, spec.dim);

  Dataset data(spec.dim);
  const std::size_t max_attempts = 5000;
  for (std::size_t i = 0; i < spec.n_examples; ++i) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
      SparseVector best(spec.dim), second(spec.dim);
      double best_score = 0.0, second_score = 0.0;
      for (std::size_t c = 0; c < spec.candidates; ++c) {
        SparseVector phi =
            random_unit_vector(rng, k, spec.dim, /*gaussian=*/false);
        double score = u.dot(phi);
        if (c == 0 || score > best_score) {
          second = best;
          second_score = best_score;
          best = phi;
          best_score = score;
          if (c == 0) second_score = score;
        } else if (c == 1 || score > second_score) {
          second = phi;
          second_score = score;
        }
      }
      SparseVector x = best.add_scaled(second, -1.0);
      if (u.dot(x) < 1.0) continue;  // gap below the planted margin
      data.add(Example(std::move(x), 1));
      placed = true;
      break;
    }
    if (!placed)
      throw std::domain_error(
          "generate: score-gap rejection failed; lower --margin or raise "
          "--candidates");
  }
  return {std::move(data), std::move(u)};
}

}  // namespace

SynthData generate(const SynthSpec& spec) {
  spec.validate();
  if (spec.kind == SynthKind::reranking) return generate_reranking(spec);
  return generate_pointwise(spec);
}

namespace {

[[noreturn]] void parse_fail(const std::string& name, std::size_t line,
                             const std::string& msg) {
  std::ostringstream os;
  os << name << ":" << line << ": " << msg;
  throw ParseError(os.str());
}

double parse_double(const std::string& tok, const std::string& name,
                    std::size_t line, const char* what) {
  // from_chars rejects an explicit plus sign; "+1" labels are standard.
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (first == last || ec != std::errc() || ptr != last)
    parse_fail(name, line, std::string("bad ") + what + " '" + tok + "'");
  return value;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

Dataset read_svmlight(std::istream& in, const std::string& name) {
  struct RawExample {
    int y;
    std::vector<std::pair<std::size_t, double>> entries;
  };
  std::vector<RawExample> raw;
  std::size_t declared_dim = 0;
  std::size_t max_index = 0;  // 1-based

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line;
    if (auto hash = body.find('#'); hash != std::string::npos) {
      std::istringstream comment(body.substr(hash + 1));
      std::string key;
      std::size_t n = 0;
      if (comment >> key >> n && key == "dim" && declared_dim == 0)
        declared_dim = n;
      body = body.substr(0, hash);
    }
    std::istringstream ss(body);
    std::string tok;
    if (!(ss >> tok)) continue;  // blank or comment-only line

    double label = parse_double(tok, name, lineno, "label");
    if (label != 1.0 && label != -1.0)
      parse_fail(name, lineno, "label must be +1 or -1, got '" + tok + "'");
    RawExample ex;
    ex.y = label > 0.0 ? 1 : -1;

    std::size_t prev_index = 0;
    while (ss >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos || colon == 0 ||
          colon + 1 == tok.size())
        parse_fail(name, lineno, "expected <index>:<value>, got '" + tok + "'");
      std::size_t index = 0;
      {
        const char* first = tok.data();
        auto [ptr, ec] = std::from_chars(first, first + colon, index);
        if (ec != std::errc() || ptr != first + colon || index == 0)
          parse_fail(name, lineno,
                     "bad feature index '" + tok.substr(0, colon) + "'");
      }
      if (index <= prev_index)
        parse_fail(name, lineno, "feature indices must be strictly ascending");
      prev_index = index;
      double value =
          parse_double(tok.substr(colon + 1), name, lineno, "feature value");
      ex.entries.emplace_back(index - 1, value);  // 0-based in memory
      max_index = std::max(max_index, index);
    }
    raw.push_back(std::move(ex));
  }
  if (in.bad()) throw ParseError(name + ": read error");

  std::size_t dim = std::max(declared_dim, max_index);
  Dataset data(dim);
  for (RawExample& ex : raw)
    data.add(Example(SparseVector(dim, ex.entries), ex.y));
  return data;
}

Dataset read_svmlight(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return read_svmlight(in, path);
}

void write_svmlight(std::ostream& out, const Dataset& data) {
  out << "# dim " << data.dim() << "\n";
  for (const Example& z : data) {
    out << (z.y > 0 ? "+1" : "-1");
    for (const auto& [idx, val] : z.x.entries())
      out << " " << idx + 1 << ":" << format_double(val);
    out << "\n";
  }
  if (!out) throw std::runtime_error("write_svmlight: write error");
}

void write_svmlight(const std::string& path, const Dataset& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  write_svmlight(out, data);
}

SparseVector weights_from_json_string(const std::string& text,
                                      const std::string& name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(name + ": " + e.what());
  }
  return detail::weights_from_json(doc, name);
}

std::string weights_to_json_string(const SparseVector& w) {
  return detail::weights_to_json(w).dump(2);
}

SparseVector read_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return weights_from_json_string(buf.str(), path);
}

void write_weights(const std::string& path, const SparseVector& w) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << weights_to_json_string(w) << "\n";
  if (!out) throw std::runtime_error(path + ": write error");
}

}  // namespace vrda
