#ifndef HADKIT_DATAGEN_HPP
#define HADKIT_DATAGEN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hadkit/cube.hpp"

namespace had {

// Recipe for the synthetic anomaly cube: an along-track sequence of class
// regions with linear blends between them, plus square anomaly targets laid
// out on a grid. Target size halves per along-track column (floor 1 px);
// each cross-track row mixes the anomaly signature with the local background
// at one of the mixing fractions.
struct SyntheticSpec {
    std::uint32_t lines = 2400;
    std::uint32_t pixels = 600;
    std::uint32_t bands = 90;
    // Band profiles per background class; empty selects three built-in
    // smooth profiles (vegetation/sand/water stand-ins) sampled at `bands`.
    std::vector<std::vector<float>> class_signatures;
    std::uint32_t transition_width = 120;
    std::uint32_t target_columns = 10;
    std::uint32_t target_base_size = 48;
    std::vector<double> mixing_fractions = {0.1, 0.2, 0.3, 0.5};
    std::vector<float> anomaly_signature;  // empty selects a built-in profile
    double noise_sigma = 0.03;             // relative (multiplicative) Gaussian
    std::uint64_t seed = 0;
    std::string name = "synthetic";

    void validate() const;  // throws ConfigError
};

// Built-in band profiles, exposed for tests and documentation.
std::vector<std::vector<float>> default_class_signatures(std::uint32_t bands);
std::vector<float> default_anomaly_signature(std::uint32_t bands);

// Counts mask pixels implied by the grid arithmetic alone.
std::uint64_t expected_target_pixels(const SyntheticSpec& spec);

std::pair<DataCube, GroundTruthMask> gen_synthetic(const SyntheticSpec& spec);

// i.i.d. uniform [0,1) cube, deterministic per seed.
DataCube gen_random_cube(std::uint32_t pixels, std::uint32_t lines, std::uint32_t bands,
                         std::uint64_t seed);

}  // namespace had

#endif
