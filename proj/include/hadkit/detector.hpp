#ifndef HADKIT_DETECTOR_HPP
#define HADKIT_DETECTOR_HPP

#include <string_view>
#include <vector>

#include "hadkit/cube.hpp"

namespace had {

// Streaming anomaly detector. One instance per stream; process() is called
// once per emitted line in order, finish() once at end of stream. A call may
// emit zero or more scored lines (pipelined detectors lag), but across the
// whole stream exactly one ScoredLine is emitted per input line.
class LineDetector {
  public:
    virtual ~LineDetector() = default;

    virtual void process(const SpectralLine& line, std::vector<ScoredLine>& out) = 0;

    virtual void finish(std::vector<ScoredLine>& out) { (void)out; }

    virtual std::string_view name() const = 0;

    // True when norm (not raw) is this detector's decision statistic.
    virtual bool emits_normalized_scores() const { return false; }
};

// Per-line z-score of the raw distances: (delta - mean) / std with the
// population std (divide by p). All-equal distances (std < 1e-12) normalise
// to zeros: a constant line carries no intra-line anomaly signal.
std::vector<double> normalize_scores(const std::vector<double>& raw);

}  // namespace had

#endif
