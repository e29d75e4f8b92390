#ifndef HADKIT_ERX_HPP
#define HADKIT_ERX_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "hadkit/detector.hpp"
#include "hadkit/projection.hpp"

namespace had {

struct ErxConfig {
    int dims = 5;                  // projected dimensions d
    double alpha = 0.1;            // EMA momentum, (0, 1]
    std::uint32_t buffer_len = 99; // lines flagged as warmup
    double epsilon = 1e-5;         // Cholesky regularisation
    std::uint64_t seed = 0;
    bool no_srp = false;           // identity projection, d = b
    bool use_incremental = false;  // equal-weight (Welford) stats instead of EMAs

    void validate() const;  // throws ConfigError
};

// Background model: running mean and covariance in the projected space.
struct ErxState {
    SrpMatrix weights;
    Eigen::VectorXd mu;
    Eigen::MatrixXd cov;
    std::int64_t lines_seen = 0;
    std::int64_t welford_n = 0;  // pixels folded in (incremental mode only)
    bool initialized = false;
};

namespace erx {

// Column mean and unbiased (1/(p-1)) covariance of a projected line.
// Throws DataError for p < 2.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> line_stats(const Eigen::MatrixXd& projected);

// mu <- (1-alpha) mu + alpha mu_hat, same for cov.
void ema_update(ErxState& state, const Eigen::VectorXd& mu_hat, const Eigen::MatrixXd& cov_hat,
                double alpha);

// y_i = 1 iff norm_scores[i] >= tau.
std::vector<std::uint8_t> apply_threshold(const std::vector<double>& norm_scores, double tau);

}  // namespace erx

// The streaming detector: project the line, score every pixel against the
// pre-update background via Cholesky of (cov + eps*I) and forward
// substitution, then fold the line's own statistics into the background
// (EMA, or batched Welford in incremental mode). The first line initialises
// the background with its own statistics.
class ErxDetector : public LineDetector {
  public:
    ErxDetector(const ErxConfig& cfg, std::uint32_t bands);

    void process(const SpectralLine& line, std::vector<ScoredLine>& out) override;
    std::string_view name() const override { return "erx"; }
    bool emits_normalized_scores() const override { return true; }

    const ErxConfig& config() const { return cfg_; }
    const ErxState& state() const { return state_; }

  private:
    ErxConfig cfg_;
    std::uint32_t bands_;
    ErxState state_;
};

}  // namespace had

#endif
