#pragma once

#include "mceif/rng.hpp"
#include "mceif/types.hpp"

namespace mceif {

/// Random correlation matrix via the LKJ onion construction; eta = 1 is
/// uniform over correlation matrices, larger eta concentrates around the
/// identity. Used to generate ground-truth covariances for the portfolio
/// experiment.
Matrix lkj_sample_truth(Index dim, Rng& rng, double eta = 1.0);

}  // namespace mceif
