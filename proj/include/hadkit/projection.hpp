#ifndef HADKIT_PROJECTION_HPP
#define HADKIT_PROJECTION_HPP

#include <Eigen/Dense>
#include <cstdint>

#include "hadkit/cube.hpp"

namespace had {

// Sparse random projection weights, b x d. Entries are drawn independently:
// +/- sqrt(s)/sqrt(d) with probability 1/(2s) each, 0 otherwise, with
// sparsity s = sqrt(b). Fixed at detector initialisation; deterministic per
// seed.
struct SrpMatrix {
    Eigen::MatrixXd weights;  // b x d, explicit zeros
    std::uint64_t seed = 0;
    double sparsity = 0.0;  // s = sqrt(b)
    bool identity = false;  // no-SRP bypass: weights are the b x b identity

    std::int64_t nonzero_count() const { return (weights.array() != 0.0).count(); }
    int input_dims() const { return static_cast<int>(weights.rows()); }
    int output_dims() const { return static_cast<int>(weights.cols()); }
};

SrpMatrix generate_srp(std::uint32_t bands, std::uint32_t dims, std::uint64_t seed);

// Identity selector used by the no-SRP ablation (d = b).
SrpMatrix identity_projection(std::uint32_t bands);

// Z = X * W, p x d in double precision. Throws ConfigError on a band-count
// mismatch.
Eigen::MatrixXd project_line(const SpectralLine& line, const SrpMatrix& w);
Eigen::MatrixXd project_line(const Eigen::MatrixXd& pixels, const SrpMatrix& w);

}  // namespace had

#endif
