#pragma once

#include <Eigen/Dense>

namespace mceif {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Flat parameter vector phi indexing a parametric family. The coordinate
// layout is fixed per model and documented next to each model class.
using ParamVector = Vector;

// A single data point x of length obs_dim.
using Observation = Vector;

// N observations stacked row-wise (N x obs_dim).
using ObservationBatch = Matrix;

}  // namespace mceif
