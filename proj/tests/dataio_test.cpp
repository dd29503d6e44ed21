#include <doctest.h>

#include <cmath>
#include <sstream>

#include "vrda/analysis.hpp"
#include "vrda/dataio.hpp"
#include "vrda/rng.hpp"

using vrda::Dataset;
using vrda::Example;
using vrda::ParseError;
using vrda::Rng;
using vrda::SparseVector;
using vrda::SynthData;
using vrda::SynthKind;
using vrda::SynthSpec;

TEST_CASE("svmlight: basic parse, labels, 1-based indices") {
  std::istringstream in("+1 1:0.5 3:1.2\n-1 2:-1\n");
  Dataset data = vrda::read_svmlight(in, "t");
  REQUIRE(data.size() == 2);
  CHECK(data.dim() == 3);
  CHECK(data[0].y == 1);
  CHECK(data[0].x == SparseVector(3, {{0, 0.5}, {2, 1.2}}));
  CHECK(data[1].y == -1);
  CHECK(data[1].x == SparseVector(3, {{1, -1.0}}));
}

TEST_CASE("svmlight: comments, blank lines, labels without features") {
  std::istringstream in(
      "# a comment line\n"
      "\n"
      "1 1:2.0   # trailing comment\n"
      "-1\n");
  Dataset data = vrda::read_svmlight(in, "t");
  REQUIRE(data.size() == 2);
  CHECK(data[0].x.at(0) == 2.0);
  CHECK(data[1].x.nnz() == 0);
}

TEST_CASE("svmlight: dim pragma pins the feature dimension") {
  std::istringstream in("# dim 10\n+1 2:1.0\n");
  Dataset data = vrda::read_svmlight(in, "t");
  CHECK(data.dim() == 10);

  // Indices beyond the declared dimension widen it.
  std::istringstream wide("# dim 2\n+1 5:1.0\n");
  CHECK(vrda::read_svmlight(wide, "t").dim() == 5);
}

TEST_CASE("svmlight: malformed inputs raise ParseError with location") {
  auto expect_error = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(vrda::read_svmlight(in, "bad.svm"), ParseError);
  };
  expect_error("2 1:1.0\n");            // label not +1/-1
  expect_error("+1 0:1.0\n");           // 0-based index
  expect_error("+1 3:1.0 2:1.0\n");     // descending indices
  expect_error("+1 2:1.0 2:3.0\n");     // duplicate index
  expect_error("+1 2:abc\n");           // unparseable value
  expect_error("+1 2\n");               // missing colon
  expect_error("yes 1:1.0\n");          // junk label

  std::istringstream in("+1 1:1.0\n-1 x:1\n");
  try {
    vrda::read_svmlight(in, "bad.svm");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("bad.svm:2") != std::string::npos);
  }
}

TEST_CASE("svmlight: write/read round trip preserves everything") {
  Rng rng(801);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t dim = 1 + rng.bounded(30);
    Dataset data(dim);
    std::size_t n = 1 + rng.bounded(20);
    for (std::size_t i = 0; i < n; ++i) {
      SparseVector x(dim);
      for (std::size_t j = 0; j < dim; ++j)
        if (rng.uniform() < 0.3)
          x.set(j, rng.normal() * std::pow(10.0, rng.uniform(-8.0, 8.0)));
      data.add({x, rng.uniform() < 0.5 ? 1 : -1});
    }

    std::ostringstream out;
    vrda::write_svmlight(out, data);
    std::istringstream in(out.str());
    Dataset back = vrda::read_svmlight(in, "rt");

    CHECK(back.dim() == data.dim());
    REQUIRE(back.size() == data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
      CHECK(back[i].y == data[i].y);
      CHECK(back[i].x == data[i].x);  // bitwise: format_double round-trips
    }
  }
}

TEST_CASE("svmlight: written form uses the dim pragma and 1-based indices") {
  Dataset data(4);
  data.add({SparseVector(4, {{0, 0.5}, {3, -1.0}}), 1});
  std::ostringstream out;
  vrda::write_svmlight(out, data);
  CHECK(out.str() == "# dim 4\n+1 1:0.5 4:-1\n");
}

TEST_CASE("format_double round-trips exactly") {
  Rng rng(802);
  for (int trial = 0; trial < 500; ++trial) {
    double v = rng.normal() * std::pow(10.0, rng.uniform(-300.0, 300.0));
    CHECK(std::stod(vrda::format_double(v)) == v);
  }
  CHECK(vrda::format_double(0.25) == "0.25");
  CHECK(vrda::format_double(-3.0) == "-3");
}

TEST_CASE("weights JSON round trip and validation") {
  SparseVector w(5, {{0, 0.1}, {4, -2.5e-17}});
  std::string text = vrda::weights_to_json_string(w);
  CHECK(vrda::weights_from_json_string(text, "w") == w);

  SparseVector zero =
      vrda::weights_from_json_string(R"({"dim": 3, "entries": {}})", "w");
  CHECK(zero.dim() == 3);
  CHECK(zero.nnz() == 0);

  auto expect_error = [](const std::string& text) {
    CHECK_THROWS_AS(vrda::weights_from_json_string(text, "w"), ParseError);
  };
  expect_error("not json");
  expect_error(R"({"entries": {}})");                      // missing dim
  expect_error(R"({"dim": 3})");                           // missing entries
  expect_error(R"({"dim": -1, "entries": {}})");           // negative dim
  expect_error(R"({"dim": 2, "entries": {"5": 1.0}})");    // index >= dim
  expect_error(R"({"dim": 2, "entries": {"x": 1.0}})");    // junk key
  expect_error(R"({"dim": 2, "entries": {"0": "a"}})");    // junk value
}

TEST_CASE("generator: spec validation") {
  SynthSpec spec;
  spec.margin = 0.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = {};
  spec.n_examples = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = {};
  spec.dim = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = {};
  spec.density = 0.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = {};
  spec.flip_rate = 1.5;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = {};
  spec.kind = SynthKind::reranking;
  spec.candidates = 1;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("generator: separable contract") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    SynthSpec spec;
    spec.kind = SynthKind::separable;
    spec.n_examples = 300;
    spec.dim = 40;
    spec.margin = 0.12;
    spec.density = 0.2;
    spec.seed = seed;
    SynthData synth = vrda::generate(spec);

    CHECK(synth.data.size() == spec.n_examples);
    CHECK(synth.data.dim() == spec.dim);
    CHECK(synth.u.l2_norm() ==
          doctest::Approx(1.0 / spec.margin).epsilon(1e-12));

    auto sep = vrda::check_separability(synth.u, synth.data);
    CHECK(sep.separable);
    CHECK(sep.gamma == doctest::Approx(spec.margin).epsilon(1e-12));
    CHECK(vrda::data_radius(synth.data) <= 1.0 + 1e-12);
  }
}

TEST_CASE("generator: zero flip rate reduces noisy to separable") {
  SynthSpec spec;
  spec.kind = SynthKind::noisy;
  spec.flip_rate = 0.0;
  spec.n_examples = 200;
  spec.dim = 30;
  spec.margin = 0.15;
  spec.seed = 5;
  SynthData noisy = vrda::generate(spec);
  CHECK(vrda::check_separability(noisy.u, noisy.data).separable);
}

TEST_CASE("generator: noisy flips roughly flip_rate of the labels") {
  SynthSpec clean_spec;
  clean_spec.kind = SynthKind::noisy;
  clean_spec.flip_rate = 0.0;
  clean_spec.n_examples = 2000;
  clean_spec.dim = 30;
  clean_spec.margin = 0.15;
  clean_spec.seed = 6;
  SynthData clean = vrda::generate(clean_spec);

  SynthSpec flip_spec = clean_spec;
  flip_spec.flip_rate = 0.2;
  SynthData flipped = vrda::generate(flip_spec);

  // Same seed, same draws: only labels may differ.
  REQUIRE(clean.data.size() == flipped.data.size());
  std::size_t flips = 0;
  for (std::size_t i = 0; i < clean.data.size(); ++i) {
    CHECK(clean.data[i].x == flipped.data[i].x);
    if (clean.data[i].y != flipped.data[i].y) ++flips;
  }
  double rate = static_cast<double>(flips) / clean.data.size();
  CHECK(rate > 0.15);
  CHECK(rate < 0.25);
}

TEST_CASE("generator: reranking contract") {
  SynthSpec spec;
  spec.kind = SynthKind::reranking;
  spec.n_examples = 200;
  spec.dim = 40;
  spec.margin = 0.2;
  spec.density = 0.2;
  spec.candidates = 6;
  spec.seed = 9;
  SynthData synth = vrda::generate(spec);

  CHECK(synth.data.size() == spec.n_examples);
  for (const Example& z : synth.data) {
    CHECK(z.y == 1);  // best-minus-runner-up differences
    CHECK(synth.u.dot(z.x) >= 1.0 - 1e-12);
    CHECK(z.x.l2_norm() <= 2.0 + 1e-12);
  }
  CHECK(vrda::check_separability(synth.u, synth.data).separable);
}

TEST_CASE("generator: reproducible and seed-sensitive") {
  SynthSpec spec;
  spec.n_examples = 50;
  spec.dim = 20;
  spec.seed = 42;
  SynthData a = vrda::generate(spec);
  SynthData b = vrda::generate(spec);
  REQUIRE(a.data.size() == b.data.size());
  CHECK(a.u == b.u);
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    CHECK(a.data[i].x == b.data[i].x);
    CHECK(a.data[i].y == b.data[i].y);
  }

  spec.seed = 43;
  SynthData c = vrda::generate(spec);
  bool any_diff = (c.u != a.u);
  for (std::size_t i = 0; !any_diff && i < a.data.size(); ++i)
    any_diff = a.data[i].x != c.data[i].x;
  CHECK(any_diff);
}

TEST_CASE("generator: infeasible margin is rejected, not looped forever") {
  SynthSpec spec;
  spec.kind = SynthKind::separable;
  spec.n_examples = 10;
  spec.dim = 50;
  spec.margin = 50.0;  // would need |u'x| >= 1 with ||u|| = 0.02, ||x|| = 1
  spec.density = 0.1;
  spec.seed = 1;
  CHECK_THROWS_AS(vrda::generate(spec), std::domain_error);
}

TEST_CASE("synth kind names round-trip") {
  for (SynthKind kind :
       {SynthKind::separable, SynthKind::noisy, SynthKind::reranking})
    CHECK(vrda::synth_kind_from_string(vrda::to_string(kind)) == kind);
  CHECK_THROWS_AS(vrda::synth_kind_from_string("spiral"),
                  std::invalid_argument);
}

TEST_CASE("file round trips through actual paths") {
  SynthSpec spec;
  spec.n_examples = 30;
  spec.dim = 15;
  spec.seed = 3;
  SynthData synth = vrda::generate(spec);

  std::string data_path = "dataio_test_data.svm";
  std::string weights_path = "dataio_test_weights.json";
  vrda::write_svmlight(data_path, synth.data);
  vrda::write_weights(weights_path, synth.u);

  Dataset data_back = vrda::read_svmlight(data_path);
  SparseVector u_back = vrda::read_weights(weights_path);
  CHECK(u_back == synth.u);
  REQUIRE(data_back.size() == synth.data.size());
  CHECK(data_back.dim() == synth.data.dim());
  for (std::size_t i = 0; i < data_back.size(); ++i) {
    CHECK(data_back[i].x == synth.data[i].x);
    CHECK(data_back[i].y == synth.data[i].y);
  }

  CHECK_THROWS_AS(vrda::read_svmlight("no_such_file.svm"), ParseError);
  CHECK_THROWS_AS(vrda::read_weights("no_such_file.json"), ParseError);
  std::remove(data_path.c_str());
  std::remove(weights_path.c_str());
}
