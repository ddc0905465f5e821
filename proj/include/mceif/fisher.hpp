#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "mceif/model.hpp"
#include "mceif/types.hpp"

namespace mceif {

enum class FisherMode { kCached, kStreaming };

struct CgConfig {
  double rel_tolerance = 1e-6;  // on ||residual|| / ||rhs||
  Index max_iters = 0;          // 0 -> min(p, 1000)
  double damping = -1.0;        // < 0 -> 1e-6 * trace(I_hat) / p

  Index resolved_max_iters(Index p) const {
    return max_iters > 0 ? max_iters : std::min<Index>(p, 1000);
  }
};

/// Matrix-free empirical Fisher operator (1/M) J^T J + damping * Id built
/// from M model samples at phi. Cached mode stores the M x p score matrix;
/// streaming mode stores only the seed and regenerates scores chunk by chunk
/// on every apply, trading time for O(M + p) memory. Both modes run the same
/// sample stream, so they agree to rounding.
class FisherOperator {
 public:
  FisherOperator(const ModelContract& model, ParamVector phi, Index sample_count,
                 std::uint64_t seed, FisherMode mode, double damping);

  Index dim() const { return phi_.size(); }
  Index sample_count() const { return sample_count_; }
  double damping() const { return damping_; }
  FisherMode mode() const { return mode_; }

  /// Symmetric PSD product (1/M) J^T (J v) + damping * v.
  Vector apply(const Vector& v) const;

  /// Dense p x p materialization via basis probes. Test oracle only; O(p)
  /// applies.
  Matrix materialize() const;

 private:
  const ModelContract* model_;
  ParamVector phi_;
  Index sample_count_;
  std::uint64_t seed_;
  FisherMode mode_;
  double damping_;
  Matrix scores_;  // cached mode only (M x p)
};

/// Damping < 0 picks the default 1e-6 * trace(I_hat) / p.
FisherOperator build_fisher(const ModelContract& model, const ParamVector& phi,
                            Index sample_count, const Rng& rng,
                            FisherMode mode = FisherMode::kCached,
                            double damping = -1.0);

struct CgResult {
  Vector solution;
  Index iters = 0;
  double residual = 0.0;  // ||A x - rhs|| / ||rhs||, 0 when rhs is zero
  bool converged = true;
};

/// Plain conjugate gradients from a zero initial guess, no preconditioner.
/// Non-convergence is reported in the result; a NaN appearing mid-iteration
/// throws std::runtime_error.
CgResult cg_solve(const FisherOperator& op, const Vector& rhs, const CgConfig& cfg);

}  // namespace mceif
