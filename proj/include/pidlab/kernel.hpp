#pragma once

#include <vector>

#include "pidlab/matrix.hpp"

namespace pidlab {

/// Query/key rows sharing N and D_qk; scale is the softmax temperature 1/sqrt(D_qk).
struct QueryKeyPair {
    Matrix queries;
    Matrix keys;
    double scale = 1.0;

    /// Builds the pair with scale = 1/sqrt(D_qk); validates shapes and finiteness.
    static QueryKeyPair from_qk(Matrix queries, Matrix keys);
};

/// Row-stochastic attention matrix with strictly positive entries.
/// Construction validates positivity and |row sum - 1| < 1e-12.
class StochasticKernel {
public:
    explicit StochasticKernel(Matrix weights);

    std::size_t n_tokens() const { return weights_.rows(); }
    const Matrix& weights() const { return weights_; }
    double operator()(std::size_t i, std::size_t j) const { return weights_(i, j); }

private:
    Matrix weights_;
};

/// Row-softmax of the scaled score matrix Q K^T * scale, with per-row max
/// subtraction for overflow safety.
StochasticKernel build_softmax_kernel(const QueryKeyPair& qk);

/// One attention application: output row i = sum_j K(i,j) v(j).
TokenMatrix softmax_attention_step(const StochasticKernel& kernel, const TokenMatrix& v);

/// Left Perron vector pi of K: pi > 0, sum pi = 1, pi^T K = pi^T within 1e-10.
/// Power iteration on K^T; tolerance 1e-12 on the successive-iterate change,
/// cap 100000 iterations.
std::vector<double> left_perron_vector(const StochasticKernel& kernel);

}  // namespace pidlab
