#include <doctest.h>

#include <cmath>

#include "vrda/losses.hpp"
#include "vrda/rng.hpp"

using vrda::Example;
using vrda::loss_kind_from_string;
using vrda::loss_margin_derivative;
using vrda::loss_subgradient;
using vrda::loss_value;
using vrda::loss_value_at_margin;
using vrda::LossKind;
using vrda::Rng;
using vrda::SparseVector;

namespace {
constexpr LossKind kAll[] = {LossKind::hinge, LossKind::logistic,
                             LossKind::exponential};
}

TEST_CASE("hinge: values and kink subgradient choice") {
  CHECK(loss_value_at_margin(LossKind::hinge, 0.3) == doctest::Approx(0.7));
  CHECK(loss_value_at_margin(LossKind::hinge, 1.0) == 0.0);
  CHECK(loss_value_at_margin(LossKind::hinge, 2.0) == 0.0);
  CHECK(loss_value_at_margin(LossKind::hinge, -1.0) == 2.0);

  CHECK(loss_margin_derivative(LossKind::hinge, 0.3) == -1.0);
  CHECK(loss_margin_derivative(LossKind::hinge, -5.0) == -1.0);
  CHECK(loss_margin_derivative(LossKind::hinge, 1.0) == 0.0);
  CHECK(loss_margin_derivative(LossKind::hinge, 2.0) == 0.0);
}

TEST_CASE("logistic: frozen values, natural log") {
  CHECK(loss_value_at_margin(LossKind::logistic, 0.0) ==
        doctest::Approx(0.6931471805599453).epsilon(1e-12));
  CHECK(loss_value_at_margin(LossKind::logistic, -1.0) ==
        doctest::Approx(1.3132616875182228).epsilon(1e-12));
  CHECK(loss_value_at_margin(LossKind::logistic, 3.0) ==
        doctest::Approx(0.04858735157374206).epsilon(1e-12));

  CHECK(loss_margin_derivative(LossKind::logistic, 0.0) ==
        doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(loss_margin_derivative(LossKind::logistic, -1.0) ==
        doctest::Approx(-0.7310585786300049).epsilon(1e-12));
  CHECK(loss_margin_derivative(LossKind::logistic, 3.0) ==
        doctest::Approx(-0.04742587317756678).epsilon(1e-12));
}

TEST_CASE("exponential: frozen values") {
  CHECK(loss_value_at_margin(LossKind::exponential, 0.0) == 1.0);
  CHECK(loss_value_at_margin(LossKind::exponential, -2.0) ==
        doctest::Approx(7.38905609893065).epsilon(1e-12));
  CHECK(loss_value_at_margin(LossKind::exponential, 0.5) ==
        doctest::Approx(0.6065306597126334).epsilon(1e-12));

  CHECK(loss_margin_derivative(LossKind::exponential, 0.0) == -1.0);
  CHECK(loss_margin_derivative(LossKind::exponential, -2.0) ==
        doctest::Approx(-7.38905609893065).epsilon(1e-12));
}

TEST_CASE("overflow safety at extreme negative margins") {
  double lv = loss_value_at_margin(LossKind::logistic, -1000.0);
  CHECK(std::isfinite(lv));
  CHECK(lv == doctest::Approx(1000.0).epsilon(1e-12));
  CHECK(std::isfinite(loss_margin_derivative(LossKind::logistic, -1000.0)));
  CHECK(loss_margin_derivative(LossKind::logistic, -1000.0) ==
        doctest::Approx(-1.0).epsilon(1e-12));

  double ev = loss_value_at_margin(LossKind::exponential, -1000.0);
  CHECK(std::isfinite(ev));
  CHECK(ev == doctest::Approx(1.0142320547350045e+304).epsilon(1e-12));
}

TEST_CASE("vector forms wrap the margin forms") {
  SparseVector w(2, {{0, 0.5}});
  Example z(SparseVector(2, {{0, 1.0}, {1, 2.0}}), 1);
  CHECK(loss_value(LossKind::hinge, w, z) == doctest::Approx(0.5));
  SparseVector g = loss_subgradient(LossKind::hinge, w, z);
  CHECK(g == SparseVector(2, {{0, -1.0}, {1, -2.0}}));

  // Flipping the label flips the subgradient direction on a violating margin.
  Example zneg(SparseVector(2, {{0, 1.0}, {1, 2.0}}), -1);
  SparseVector gneg = loss_subgradient(LossKind::hinge, w, zneg);
  CHECK(gneg == SparseVector(2, {{0, 1.0}, {1, 2.0}}));

  // At the hinge kink and beyond, the subgradient is the zero vector.
  SparseVector wk(2, {{0, 1.0}});
  Example zk(SparseVector(2, {{0, 1.0}}), 1);
  CHECK(loss_subgradient(LossKind::hinge, wk, zk).nnz() == 0);
}

TEST_CASE("property: convexity via the subgradient inequality") {
  Rng rng(201);
  for (int trial = 0; trial < 500; ++trial) {
    double t = rng.uniform(-6.0, 6.0);
    double tp = rng.uniform(-6.0, 6.0);
    for (LossKind kind : kAll) {
      double lhs = loss_value_at_margin(kind, tp);
      double rhs = loss_value_at_margin(kind, t) +
                   loss_margin_derivative(kind, t) * (tp - t);
      CHECK(lhs >= rhs - 1e-9);
    }
  }
}

TEST_CASE("property: derivative matches central finite differences") {
  Rng rng(202);
  const double h = 1e-5;
  for (int trial = 0; trial < 300; ++trial) {
    double t = rng.uniform(-5.0, 5.0);
    for (LossKind kind : kAll) {
      if (kind == LossKind::hinge && std::fabs(t - 1.0) < 10 * h) continue;
      double num = (loss_value_at_margin(kind, t + h) -
                    loss_value_at_margin(kind, t - h)) /
                   (2 * h);
      double ana = loss_margin_derivative(kind, t);
      CHECK(std::fabs(num - ana) <= 1e-4 * std::max(1.0, std::fabs(ana)));
    }
  }
}

TEST_CASE("property: surrogates dominate the mistake indicator") {
  Rng rng(203);
  for (int trial = 0; trial < 300; ++trial) {
    double t = rng.uniform(-8.0, 0.0);
    CHECK(loss_value_at_margin(LossKind::hinge, t) >= 1.0);
    CHECK(loss_value_at_margin(LossKind::exponential, t) >= 1.0);
    CHECK(loss_value_at_margin(LossKind::logistic, t) >=
          0.6931471805599453 - 1e-12);
  }
}

TEST_CASE("loss kind names round-trip") {
  for (LossKind kind : kAll)
    CHECK(loss_kind_from_string(vrda::to_string(kind)) == kind);
  CHECK(loss_kind_from_string("hinge") == LossKind::hinge);
  CHECK(loss_kind_from_string("logistic") == LossKind::logistic);
  CHECK(loss_kind_from_string("exponential") == LossKind::exponential);
  CHECK_THROWS_AS(loss_kind_from_string("square"), std::invalid_argument);
}
