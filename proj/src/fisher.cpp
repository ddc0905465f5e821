#include "mceif/fisher.hpp"

#include <cmath>

namespace mceif {

namespace {
constexpr Index kStreamChunk = 1024;
}

FisherOperator::FisherOperator(const ModelContract& model, ParamVector phi,
                               Index sample_count, std::uint64_t seed, FisherMode mode,
                               double damping)
    : model_(&model),
      phi_(std::move(phi)),
      sample_count_(sample_count),
      seed_(seed),
      mode_(mode),
      damping_(damping) {
  if (sample_count_ < 1) throw std::invalid_argument("FisherOperator: M must be >= 1");
  double trace = 0.0;
  if (mode_ == FisherMode::kCached) {
    Rng rng(seed_);
    const ObservationBatch xs = model_->sample(phi_, rng, sample_count_);
    scores_ = model_->score_batch(phi_, xs);
    trace = scores_.squaredNorm() / static_cast<double>(sample_count_);
  } else {
    Rng rng(seed_);
    for (Index done = 0; done < sample_count_; done += kStreamChunk) {
      const Index n = std::min(kStreamChunk, sample_count_ - done);
      const ObservationBatch xs = model_->sample(phi_, rng, n);
      trace += model_->score_batch(phi_, xs).squaredNorm();
    }
    trace /= static_cast<double>(sample_count_);
  }
  if (damping_ < 0.0) damping_ = 1e-6 * trace / static_cast<double>(dim());
}

Vector FisherOperator::apply(const Vector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("FisherOperator::apply: dimension mismatch");
  Vector out;
  if (mode_ == FisherMode::kCached) {
    out = scores_.transpose() * (scores_ * v);
  } else {
    out = Vector::Zero(dim());
    Rng rng(seed_);
    for (Index done = 0; done < sample_count_; done += kStreamChunk) {
      const Index n = std::min(kStreamChunk, sample_count_ - done);
      const ObservationBatch xs = model_->sample(phi_, rng, n);
      const Matrix j = model_->score_batch(phi_, xs);
      out.noalias() += j.transpose() * (j * v);
    }
  }
  out /= static_cast<double>(sample_count_);
  out += damping_ * v;
  return out;
}

Matrix FisherOperator::materialize() const {
  Matrix dense(dim(), dim());
  for (Index j = 0; j < dim(); ++j) dense.col(j) = apply(Vector::Unit(dim(), j));
  return dense;
}

FisherOperator build_fisher(const ModelContract& model, const ParamVector& phi,
                            Index sample_count, const Rng& rng, FisherMode mode,
                            double damping) {
  return FisherOperator(model, phi, sample_count, rng.seed(), mode, damping);
}

CgResult cg_solve(const FisherOperator& op, const Vector& rhs, const CgConfig& cfg) {
  const Index p = op.dim();
  if (rhs.size() != p) throw std::invalid_argument("cg_solve: rhs dimension mismatch");

  CgResult res;
  res.solution = Vector::Zero(p);
  const double rhs_norm = rhs.norm();
  if (rhs_norm == 0.0) return res;

  const double tol = cfg.rel_tolerance * rhs_norm;
  const Index max_iters = cfg.resolved_max_iters(p);

  Vector r = rhs;  // residual for x0 = 0
  Vector d = r;
  double rr = r.squaredNorm();

  while (res.iters < max_iters && std::sqrt(rr) > tol) {
    const Vector ad = op.apply(d);
    const double dad = d.dot(ad);
    if (!std::isfinite(dad)) throw std::runtime_error("cg_solve: NaN/Inf in iteration");
    const double alpha = rr / dad;
    res.solution += alpha * d;
    r -= alpha * ad;
    const double rr_next = r.squaredNorm();
    if (!std::isfinite(rr_next)) throw std::runtime_error("cg_solve: NaN/Inf in iteration");
    d = r + (rr_next / rr) * d;
    rr = rr_next;
    ++res.iters;
  }

  res.residual = std::sqrt(rr) / rhs_norm;
  res.converged = res.residual <= cfg.rel_tolerance;
  return res;
}

}  // namespace mceif
