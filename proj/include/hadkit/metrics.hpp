#ifndef HADKIT_METRICS_HPP
#define HADKIT_METRICS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hadkit/cube.hpp"

namespace had {

// Exact threshold-swept ROC. Thresholds are the unique score values min-max
// normalised to [0,1], in descending order, bracketed by sentinel rows that
// pin the (0,0) and (1,1) endpoints. Ties are grouped into one step.
struct RocSummary {
    std::vector<double> thresholds;
    std::vector<double> tpr;
    std::vector<double> fpr;
    double auc = 0.0;
    double auc_td = 0.0;
    double auc_bs = 0.0;
};

// TPR/FPR at every unique score plus sentinels; AUC by trapezoid over FPR.
// Requires at least one positive and one negative label, else
// MetricUndefinedError.
RocSummary roc_curve(std::span<const double> scores, std::span<const std::uint8_t> labels);

// Modified areas: AUC_TD = (AUC + AUC_TPR,tau)/2 and
// AUC_BS = (AUC - AUC_FPR,tau + 1)/2, where the threshold-domain areas are
// the exact integrals of TPR(tau)/FPR(tau) over tau in [0,1] after min-max
// normalising the scores. Constant scores make the normalisation undefined
// (MetricUndefinedError).
std::pair<double, double> auc_td_bs(std::span<const double> scores,
                                    std::span<const std::uint8_t> labels);

// Full summary: roc_curve plus the modified areas.
RocSummary evaluate_scores(std::span<const double> scores, std::span<const std::uint8_t> labels);

// One row of the results table.
struct RunRecord {
    std::string detector;
    std::string dataset;
    std::string direction;
    std::string seed;  // numeric per-run; "mean"/"sd" on aggregate rows
    double auc = 0.0;
    double auc_td = 0.0;
    double auc_bs = 0.0;
    double lps = 0.0;
    std::uint32_t warmup_lines = 0;
};

// Pools all non-warmup pixels of a completed run against the stream-aligned
// mask (caller applies mask_for_stream for flipped replays). use_norm picks
// the per-line normalised scores as the decision statistic.
RocSummary evaluate_run(const std::vector<ScoredLine>& lines, const GroundTruthMask& stream_mask,
                        bool use_norm);

// mean and (n-1)-normalised SD per metric column over per-run records.
std::pair<RunRecord, RunRecord> aggregate_records(const std::vector<RunRecord>& records);

}  // namespace had

#endif
