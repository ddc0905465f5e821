#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mceif/eif.hpp"
#include "mceif/functionals/ate.hpp"
#include "mceif/functionals/expected_density.hpp"
#include "mceif/functionals/min_variance.hpp"
#include "mceif/models/causal_glm.hpp"
#include "mceif/models/gaussian1d.hpp"
#include "mceif/models/mvn_cov.hpp"

using namespace mceif;

namespace {

const double kGrid[] = {-3.0, -2.0, -0.5, 0.0, 0.5, 2.0, 3.0};

// Closed-form influence function of the expected-density functional for the
// two-parameter gaussian at phi = (0, 1): (1 - x^2) / (4 sqrt(pi)).
double closed_form_if(double x) { return (1.0 - x * x) / (4.0 * std::sqrt(M_PI)); }

ParamVector random_vector(Rng& rng, Index n, double scale) {
  ParamVector v(n);
  for (Index i = 0; i < n; ++i) v[i] = scale * rng.normal();
  return v;
}

Observation point(double x) {
  Observation o(1);
  o << x;
  return o;
}

// Selects a single score coordinate; gradient is a constant basis row.
class CoordinateProjector : public FunctionalContract {
 public:
  explicit CoordinateProjector(Index p, Index j) : p_(p), j_(j) {}
  Index output_dim() const override { return 1; }
  Vector value(const ParamVector& phi) const override {
    Vector v(1);
    v << phi[j_];
    return v;
  }
  Matrix gradient(const ParamVector&, Index, Rng&) const override {
    Matrix g = Matrix::Zero(1, p_);
    g(0, j_) = 1.0;
    return g;
  }

 private:
  Index p_, j_;
};

}  // namespace

TEST_CASE("known sigma family has an exactly zero influence function") {
  Gaussian1D model = Gaussian1D::known_sigma();
  ExpectedDensity psi(model, GradientMode::kAnalytic);
  ParamVector phi(1);
  phi << 0.0;
  const EifEvaluator ev = build_eif(model, psi, phi, 1000, Rng(0));
  CHECK(ev.solved_directions().norm() == 0.0);
  for (double x : kGrid) CHECK(ev.evaluate(point(x))[0] == 0.0);
}

TEST_CASE("unknown sigma influence matches the closed form") {
  Gaussian1D model = Gaussian1D::unknown_sigma();
  ExpectedDensity psi(model, GradientMode::kAnalytic);
  ParamVector phi(2);
  phi << 0.0, 1.0;
  const EifEvaluator ev = build_eif(model, psi, phi, 10000, Rng(42));
  CHECK(ev.all_converged());

  std::vector<double> rel;
  for (double x : kGrid)
    rel.push_back(std::abs(ev.evaluate(point(x))[0] - closed_form_if(x)) /
                  std::max(1e-12, std::abs(closed_form_if(x))));
  std::sort(rel.begin(), rel.end());
  CHECK(rel[rel.size() / 2] <= 0.05);  // median relative error

  CHECK(ev.evaluate(point(0.0))[0] ==
        doctest::Approx(1.0 / (4.0 * std::sqrt(M_PI))).epsilon(0.05));
  CHECK(std::abs(ev.evaluate(point(1.0))[0]) <= 0.02);  // analytic zero at x = 1
}

TEST_CASE("batch evaluation equals pointwise evaluation") {
  Gaussian1D model = Gaussian1D::unknown_sigma();
  ExpectedDensity psi(model, GradientMode::kAnalytic);
  ParamVector phi(2);
  phi << 0.3, 1.4;
  const EifEvaluator ev = build_eif(model, psi, phi, 2000, Rng(5));
  Rng rng(6);
  const ObservationBatch xs = model.sample(phi, rng, 50);
  const Matrix batch = ev.evaluate_batch(xs);
  REQUIRE(batch.rows() == 50);
  REQUIRE(batch.cols() == 1);
  for (Index i = 0; i < xs.rows(); ++i)
    CHECK(batch(i, 0) == ev.evaluate(xs.row(i))[0]);
  CHECK(ev.as_fn()(xs.row(3))[0] == batch(3, 0));
}

TEST_CASE("row solves equal the naive per point formula") {
  MvnCov model(3);  // p = 6, L = 3
  MinVariancePortfolio psi(model);
  Rng root(9);
  const ParamVector phi = random_vector(root, model.param_dim(), 0.3);
  const Index m = 80;
  const CgConfig cfg{1e-12, 200, -1.0};
  const EifEvaluator ev = build_eif(model, psi, phi, m, root, cfg);

  // Rebuild the identical Fisher sample set and solve densely per point.
  const FisherOperator fisher = build_fisher(model, phi, m, root.split(0), FisherMode::kCached);
  const Matrix dense = fisher.materialize();
  Rng grad_rng = root.split(1);
  const Matrix grad = psi.gradient(phi, m, grad_rng);
  const Eigen::LLT<Matrix> llt(dense);

  Rng data_rng(77);
  for (int rep = 0; rep < 50; ++rep) {
    const Observation x = model.sample_one(phi, data_rng);
    const Vector direct = grad * llt.solve(model.score(phi, x));
    const Vector via_rows = ev.evaluate(x);
    CHECK((via_rows - direct).norm() / std::max(1e-12, direct.norm()) <= 1e-6);
  }
}

TEST_CASE("coordinate projector recovers the matching score coordinate") {
  Gaussian1D model = Gaussian1D::known_sigma();  // p = 1, population Fisher = 1
  CoordinateProjector psi(1, 0);
  ParamVector phi(1);
  phi << 0.0;
  const EifEvaluator ev = build_eif(model, psi, phi, 100000, Rng(11));
  for (double x : {-2.0, -0.7, 0.4, 1.5}) {
    const double score0 = model.score(phi, point(x))[0];
    CHECK(ev.evaluate(point(x))[0] == doctest::Approx(score0).epsilon(0.03));
  }
}

TEST_CASE("influence values have zero mean under the fitted model") {
  Gaussian1D model = Gaussian1D::unknown_sigma();
  ExpectedDensity psi(model, GradientMode::kAnalytic);
  ParamVector phi(2);
  phi << 0.0, 1.0;
  const EifEvaluator ev = build_eif(model, psi, phi, 10000, Rng(1));

  const Index k = 100000;
  Rng check_rng(2);
  const ObservationBatch xs = model.sample(phi, check_rng, k);
  const Matrix vals = ev.evaluate_batch(xs);
  const double mean = vals.col(0).mean();
  const double sd = std::sqrt((vals.col(0).array() - mean).square().sum() / (k - 1));
  CHECK(std::abs(mean) <= 3.0 * sd / std::sqrt(static_cast<double>(k)));

  Rng helper_rng(3);
  const Vector via_helper = mean_zero_check(ev, helper_rng, k);
  CHECK(std::abs(via_helper[0]) <= 3.0 * sd / std::sqrt(static_cast<double>(k)));
}

TEST_CASE("causal glm influence values have zero mean") {
  CausalGlm model(5);  // p = 12
  AteFunctional psi(model, GradientMode::kAnalytic);
  Rng root(14);
  Rng param_rng = root.split(0);
  const ParamVector phi = model.draw_params(param_rng);
  const EifEvaluator ev = build_eif(model, psi, phi, 20000, root.split(1));

  const Index k = 50000;
  Rng check_rng = root.split(2);
  const ObservationBatch xs = model.sample(phi, check_rng, k);
  const Matrix vals = ev.evaluate_batch(xs);
  const double mean = vals.col(0).mean();
  const double sd = std::sqrt((vals.col(0).array() - mean).square().sum() / (k - 1));
  CHECK(std::abs(mean) <= 3.0 * sd / std::sqrt(static_cast<double>(k)));
}

TEST_CASE("zero mean check on the zero evaluator is exact") {
  Gaussian1D model = Gaussian1D::known_sigma();
  ExpectedDensity psi(model, GradientMode::kAnalytic);
  ParamVector phi(1);
  phi << 0.5;
  const EifEvaluator ev = build_eif(model, psi, phi, 500, Rng(4));
  Rng rng(5);
  CHECK(mean_zero_check(ev, rng, 10000).norm() == 0.0);
  Rng rng2(5);
  CHECK_THROWS_AS(mean_zero_check(ev, rng2, 0), std::invalid_argument);
}

TEST_CASE("diagnostics expose the solve record") {
  MvnCov model(3);
  MinVariancePortfolio psi(model);
  Rng root(21);
  const ParamVector phi = random_vector(root, model.param_dim(), 0.3);
  const EifEvaluator ev = build_eif(model, psi, phi, 200, root);
  const auto d = ev.diagnostics();
  CHECK(d["M"] == 200);
  CHECK(d["L"] == 3);
  CHECK(d["p"] == 6);
  CHECK(d["cg_iters_per_row"].size() == 3);
  CHECK(d["residuals"].size() == 3);
  CHECK(d["damping"].get<double>() > 0.0);
}
