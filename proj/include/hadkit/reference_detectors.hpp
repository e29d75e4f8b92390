#ifndef HADKIT_REFERENCE_DETECTORS_HPP
#define HADKIT_REFERENCE_DETECTORS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <deque>
#include <vector>

#include "hadkit/detector.hpp"
#include "hadkit/linalg.hpp"
#include "hadkit/rng.hpp"

namespace had {

struct RxBaselineConfig {
    std::uint32_t buffer_len = 99;
    double epsilon = 1e-5;  // fallback regularisation for singular covariance
};

// Rolling-buffer RX: keeps the most recent buffer_len lines, computes the
// global mean/covariance (1/n) over the whole buffer and scores the centre
// line. Emits the centre line once the buffer is full; head and tail lines
// that never reach the centre are emitted unscored. Lines with index below
// buffer_len are additionally warmup-flagged so metric exclusion is uniform
// across detectors.
class RxBaselineDetector : public LineDetector {
  public:
    explicit RxBaselineDetector(const RxBaselineConfig& cfg);

    void process(const SpectralLine& line, std::vector<ScoredLine>& out) override;
    void finish(std::vector<ScoredLine>& out) override;
    std::string_view name() const override { return "rx-baseline"; }

  private:
    void score_centre(std::vector<ScoredLine>& out);

    RxBaselineConfig cfg_;
    std::uint32_t centre_;  // buffer_len / 2
    std::deque<std::vector<float>> buffer_;
    std::deque<std::int64_t> buffer_index_;
    // Rolling raw moments over the buffer (sum of pixels, sum of outer
    // products) so eviction is O(p b^2) instead of a full recompute.
    Eigen::VectorXd sum_;
    Eigen::MatrixXd outer_sum_;
    std::int64_t pixel_count_ = 0;
    std::uint32_t pixels_ = 0, bands_ = 0;
    std::int64_t fed_ = 0;
    std::int64_t last_scored_ = -1;
};

struct RtCkRxdConfig {
    std::uint32_t buffer_len = 99;
    double epsilon = 1e-5;  // regularisation if the seed covariance is singular
};

// Pixel-wise Woodbury RX: seeds mean/covariance from a buffer of lines, then
// for every new pixel scores against the current estimates before updating
// the mean incrementally and the inverse covariance with a scaled rank-1
// Woodbury step. Unstable updates are skipped (score kept) and counted.
class RtCkRxdDetector : public LineDetector {
  public:
    explicit RtCkRxdDetector(const RtCkRxdConfig& cfg);

    void process(const SpectralLine& line, std::vector<ScoredLine>& out) override;
    std::string_view name() const override { return "rt-ck-rxd"; }

    std::int64_t skipped_updates() const { return skipped_; }

  private:
    void seed_from_buffer();

    RtCkRxdConfig cfg_;
    std::vector<std::vector<float>> seed_lines_;
    Eigen::VectorXd mu_;
    Eigen::MatrixXd cov_inv_;
    std::int64_t n_ = 0;  // pixels folded into the estimates
    std::uint32_t pixels_ = 0, bands_ = 0;
    std::int64_t fed_ = 0;
    std::int64_t skipped_ = 0;
    bool seeded_ = false;
};

struct RxBilConfig {
    double eta = 0.5;  // fraction of pixels randomly discarded per line
    std::uint64_t seed = 0;
    std::uint32_t buffer_len = 99;  // warmup flag horizon
    std::uint32_t chunk = 32;       // max rows per block-Woodbury application
};

// Line-wise Woodbury on the correlation matrix (no demeaning). The inverse
// of the un-normalised correlation sum is maintained; scoring rescales by
// the running pixel count. A random (1 - eta) fraction of each line's pixels
// is retained for the update.
class RxBilDetector : public LineDetector {
  public:
    explicit RxBilDetector(const RxBilConfig& cfg);

    void process(const SpectralLine& line, std::vector<ScoredLine>& out) override;
    std::string_view name() const override { return "rx-bil"; }

    std::int64_t skipped_pixels() const { return skipped_; }

    // Retained-pixel choice for line t: a pure function of (seed, t, p) so
    // runs are reproducible and oracles can mirror the subsets.
    static std::vector<std::uint32_t> retained_pixels(std::uint64_t seed, std::int64_t t,
                                                      std::uint32_t p, double eta);

  private:
    void update_with(const Eigen::MatrixXd& rows);

    RxBilConfig cfg_;
    Eigen::MatrixXd corr_inv_;  // inverse of the accumulated sum of x x^T
    std::int64_t n_ = 0;        // pixels accumulated into the sum
    std::uint32_t pixels_ = 0, bands_ = 0;
    std::int64_t fed_ = 0;
    std::int64_t skipped_ = 0;
    bool initialized_ = false;
};

struct LblAdConfig {
    int components = 3;  // subspace dimension k
    bool adaptive_exclude = false;
    double exclude_zscore = 3.0;  // previous-line norm score above this is excluded
    std::uint32_t buffer_len = 99;
};

// Subspace detector: equal-weight running covariance (batched Welford),
// top-k eigenpairs refreshed per line by warm-started power iteration with
// deflation, pixels scored in the eigenbasis with per-eigenvalue floors.
// Covariance update happens before scoring. With adaptive_exclude, pixels
// whose previous-line normalised score exceeded the threshold are left out
// of the statistics.
class LblAdDetector : public LineDetector {
  public:
    explicit LblAdDetector(const LblAdConfig& cfg);

    void process(const SpectralLine& line, std::vector<ScoredLine>& out) override;
    std::string_view name() const override { return "lbl-ad"; }

    std::int64_t nonconverged_lines() const { return nonconverged_; }

  private:
    LblAdConfig cfg_;
    Eigen::VectorXd mean_;
    Eigen::MatrixXd cov_;
    std::int64_t welford_n_ = 0;
    linalg::EigResult eigs_;
    bool have_eigs_ = false;
    std::vector<std::uint8_t> prev_excluded_;
    std::uint32_t pixels_ = 0, bands_ = 0;
    std::int64_t fed_ = 0;
    std::int64_t nonconverged_ = 0;
};

}  // namespace had

#endif
