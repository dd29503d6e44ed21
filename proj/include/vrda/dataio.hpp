#ifndef VRDA_DATAIO_HPP
#define VRDA_DATAIO_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "vrda/dataset.hpp"

namespace vrda {

/// Malformed input file (svmlight or weights JSON). Message carries
/// file name and line where available.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SynthKind { separable, noisy, reranking };

std::string to_string(SynthKind kind);
SynthKind synth_kind_from_string(const std::string& name);

/// Recipe for a synthetic dataset. All randomness derives from `seed`.
struct SynthSpec {
  SynthKind kind = SynthKind::separable;
  std::size_t n_examples = 1000;
  std::size_t dim = 50;
  double margin = 0.1;    // planted margin gamma = 1/||u||
  double density = 0.1;   // fraction of coordinates in each support
  double flip_rate = 0.1; // noisy only: label flip probability
  std::size_t candidates = 8;  // reranking only: candidates per instance
  std::uint64_t seed = 0;

  void validate() const;
};

/// Generated data together with the planted comparator u. Instances are
/// unit-normalized for separable/noisy (R = 1); reranking instances are
/// differences of unit vectors (R <= 2). For every kind,
/// y_i u'x_i >= 1 holds before any label noise, and ||u|| = 1/margin.
struct SynthData {
  Dataset data;
  SparseVector u;
};

SynthData generate(const SynthSpec& spec);

/// svmlight format: one example per line, `<label> <idx>:<val>...` with
/// 1-based strictly ascending indices; `#` starts a comment. A leading
/// `# dim <n>` comment pins the feature dimension; otherwise the max
/// index seen defines it. Labels must be +1 or -1.
Dataset read_svmlight(std::istream& in, const std::string& name);
Dataset read_svmlight(const std::string& path);
void write_svmlight(std::ostream& out, const Dataset& data);
void write_svmlight(const std::string& path, const Dataset& data);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

/// Weights JSON: {"dim": n, "entries": {"<0-based idx>": value, ...}}.
/// Values round-trip exactly.
SparseVector weights_from_json_string(const std::string& text,
                                      const std::string& name);
std::string weights_to_json_string(const SparseVector& w);
SparseVector read_weights(const std::string& path);
void write_weights(const std::string& path, const SparseVector& w);

}  // namespace vrda

#endif
