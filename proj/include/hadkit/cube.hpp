#ifndef HADKIT_CUBE_HPP
#define HADKIT_CUBE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hadkit/errors.hpp"

namespace had {

using MatrixXfRM = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapConstLine = Eigen::Map<const MatrixXfRM>;

// A full line-scan capture: lines x pixels x bands of radiance, stored
// line-major so each line is one contiguous p*b slab (band varies fastest).
struct DataCube {
    std::uint32_t lines = 0;
    std::uint32_t pixels = 0;  // pixels per line (p)
    std::uint32_t bands = 0;   // spectral bands (b)
    std::string name;
    std::vector<float> data;

    std::size_t line_stride() const { return std::size_t(pixels) * bands; }

    const float* line_ptr(std::uint32_t line) const { return data.data() + line * line_stride(); }
    float* line_ptr(std::uint32_t line) { return data.data() + line * line_stride(); }

    float& at(std::uint32_t line, std::uint32_t pixel, std::uint32_t band) {
        return data[(std::size_t(line) * pixels + pixel) * bands + band];
    }
    float at(std::uint32_t line, std::uint32_t pixel, std::uint32_t band) const {
        return data[(std::size_t(line) * pixels + pixel) * bands + band];
    }

    static DataCube zeros(std::uint32_t lines, std::uint32_t pixels, std::uint32_t bands,
                          std::string name = "");

    // Checks dims >= 1, payload length, and that every value is finite.
    void validate() const;
};

// One camera line: a p x b view into a cube (or standalone buffer).
// `index` is the emission index assigned by the stream, not necessarily the
// cube's native line number.
struct SpectralLine {
    std::int64_t index = 0;
    std::uint32_t pixels = 0;
    std::uint32_t bands = 0;
    const float* data = nullptr;

    MapConstLine matrix() const { return MapConstLine(data, pixels, bands); }
};

// lines x pixels binary ground truth; 1 = anomaly.
struct GroundTruthMask {
    std::uint32_t lines = 0;
    std::uint32_t pixels = 0;
    std::vector<std::uint8_t> data;

    std::uint8_t at(std::uint32_t line, std::uint32_t pixel) const {
        return data[std::size_t(line) * pixels + pixel];
    }
    std::uint8_t& at(std::uint32_t line, std::uint32_t pixel) {
        return data[std::size_t(line) * pixels + pixel];
    }

    void validate() const;
};

// Per-line detector output. `raw` holds Mahalanobis distances, `norm` the
// per-line normalised scores. `decisions` is only present after a threshold
// was applied. Warmup lines are emitted but excluded from metrics.
struct ScoredLine {
    std::int64_t index = 0;
    std::vector<double> raw;
    std::vector<double> norm;
    std::optional<std::vector<std::uint8_t>> decisions;
    bool warmup = false;
};

enum class ScanDirection { forward, flipped };

inline const char* to_string(ScanDirection d) {
    return d == ScanDirection::forward ? "forward" : "flipped";
}

struct StreamConfig {
    ScanDirection direction = ScanDirection::forward;
    std::uint32_t buffer_len = 99;
};

// Replays a cube one line at a time. Forward emits native order; flipped
// emits reversed native order. Emitted indices are re-based to 0..lines-1 in
// emission order either way, so detectors are direction-agnostic.
class LineStream {
  public:
    LineStream(const DataCube& cube, const StreamConfig& cfg);

    std::optional<SpectralLine> next();

    std::uint32_t total() const { return cube_->lines; }
    std::uint32_t emitted() const { return emitted_; }

  private:
    const DataCube* cube_;
    StreamConfig cfg_;
    std::uint32_t emitted_ = 0;
};

LineStream stream_cube(const DataCube& cube, const StreamConfig& cfg);

// Re-orders mask lines to match the emission order of stream_cube, so labels
// stay aligned under flipped replay.
GroundTruthMask mask_for_stream(const GroundTruthMask& mask, const StreamConfig& cfg);

}  // namespace had

#endif
