#include "mceif/models/causal_glm.hpp"

#include <cmath>

namespace mceif {

namespace {

constexpr double kLogTwoPi = 1.8378770664093453;

double sigmoid(double u) {
  if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

// log(1 + exp(u)) without overflow
double log1p_exp(double u) {
  if (u > 0.0) return u + std::log1p(std::exp(-u));
  return std::log1p(std::exp(u));
}

}  // namespace

CausalGlm::CausalGlm(Index confounders) : confounders_(confounders) {
  if (confounders < 1) throw std::invalid_argument("CausalGlm: need at least one confounder");
}

double CausalGlm::outcome_mean(const ParamVector& phi, const Vector& c, double t) const {
  return tau(phi) * t + xi(phi).dot(c) + mu0(phi);
}

double CausalGlm::propensity(const ParamVector& phi, const Vector& c) const {
  return sigmoid(pi(phi).dot(c));
}

Observation CausalGlm::sample_one(const ParamVector& phi, Rng& rng) const {
  const Index f = confounders_;
  Observation x(obs_dim());
  for (Index i = 0; i < f; ++i) x[i] = rng.normal();
  const Vector c = x.head(f);
  const double t = rng.bernoulli(propensity(phi, c)) ? 1.0 : 0.0;
  x[f] = t;
  x[f + 1] = outcome_mean(phi, c, t) + rng.normal();
  return x;
}

double CausalGlm::log_prob(const ParamVector& phi, const Observation& x) const {
  const Index f = confounders_;
  const Vector c = x.head(f);
  const double t = x[f];
  const double y = x[f + 1];

  const double lp_c = -0.5 * f * kLogTwoPi - 0.5 * c.squaredNorm();
  const double u = pi(phi).dot(c);
  const double lp_t = t * u - log1p_exp(u);
  const double r = y - outcome_mean(phi, c, t);
  const double lp_y = -0.5 * kLogTwoPi - 0.5 * r * r;
  return lp_c + lp_t + lp_y;
}

Vector CausalGlm::score(const ParamVector& phi, const Observation& x) const {
  const Index f = confounders_;
  const Vector c = x.head(f);
  const double t = x[f];
  const double y = x[f + 1];

  const double r = y - outcome_mean(phi, c, t);
  const double s = propensity(phi, c);

  Vector g(param_dim());
  g[0] = r;                                 // intercept
  g.segment(1, f) = r * c;                  // outcome weights
  g.segment(1 + f, f) = (t - s) * c;        // propensity weights (logit score)
  g[param_dim() - 1] = r * t;               // treatment weight
  return g;
}

Matrix CausalGlm::score_batch(const ParamVector& phi, const ObservationBatch& xs) const {
  const Index f = confounders_;
  const Index n = xs.rows();
  const auto c = xs.leftCols(f);
  const Vector t = xs.col(f);
  const Vector y = xs.col(f + 1);

  const Vector r = y - (c * xi(phi) + tau(phi) * t + Vector::Constant(n, mu0(phi)));
  Vector s = c * pi(phi);
  for (Index i = 0; i < n; ++i) s[i] = sigmoid(s[i]);

  Matrix j(n, param_dim());
  j.col(0) = r;
  j.middleCols(1, f) = c.array().colwise() * r.array();
  j.middleCols(1 + f, f) = c.array().colwise() * (t - s).array();
  j.col(param_dim() - 1) = r.cwiseProduct(t);
  return j;
}

ParamVector CausalGlm::draw_params(Rng& rng, double tau_value) const {
  ParamVector phi = draw_params(rng);
  phi[param_dim() - 1] = tau_value;
  return phi;
}

ParamVector CausalGlm::draw_params(Rng& rng) const {
  const Index f = confounders_;
  // xi, pi ~ N(0, (1/sqrt(F)) I)
  const double weight_sd = std::pow(static_cast<double>(f), -0.25);
  ParamVector phi(param_dim());
  phi[0] = rng.normal();
  for (Index i = 0; i < f; ++i) phi[1 + i] = weight_sd * rng.normal();
  for (Index i = 0; i < f; ++i) phi[1 + f + i] = weight_sd * rng.normal();
  phi[param_dim() - 1] = rng.normal();
  return phi;
}

EifFn analytic_ate_eif(const CausalGlm& model, const ParamVector& phi) {
  const Index f = model.confounders();
  const Vector pi = model.pi(phi);
  const double pi_norm = pi.norm();

  // Sigmoid moments over w ~ N(0,1): a0 = E[s(|pi| w)], a1 = E[s(|pi| w) w].
  // Smooth integrand; fixed trapezoid grid is accurate far beyond the
  // tolerances used anywhere downstream.
  const int nodes = 4001;
  const double lo = -10.0, hi = 10.0;
  const double dw = (hi - lo) / (nodes - 1);
  double a0 = 0.0, a1 = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double w = lo + i * dw;
    const double dens = std::exp(-0.5 * w * w) / std::sqrt(2.0 * M_PI);
    const double s = sigmoid(pi_norm * w);
    const double trap = (i == 0 || i == nodes - 1) ? 0.5 : 1.0;
    a0 += trap * s * dens * dw;
    a1 += trap * s * w * dens * dw;
  }

  const double denom = a0 - a0 * a0 - a1 * a1;
  if (denom <= 0.0) throw std::runtime_error("analytic_ate_eif: degenerate Fisher block");
  const double z_tau = 1.0 / denom;
  const Vector pi_hat = pi_norm > 0.0 ? Vector(pi / pi_norm) : Vector(Vector::Zero(f));

  ParamVector phi_copy = phi;
  CausalGlm model_copy = model;
  return [model_copy, phi_copy, z_tau, a0, a1, pi_hat, f](const Observation& x) {
    const Vector c = x.head(f);
    const double t = x[f];
    const double y = x[f + 1];
    const double r = y - model_copy.outcome_mean(phi_copy, c, t);
    Vector out(1);
    out[0] = r * z_tau * (t - a0 - a1 * pi_hat.dot(c));
    return out;
  };
}

}  // namespace mceif
