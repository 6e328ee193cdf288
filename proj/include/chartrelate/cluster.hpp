#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "chartrelate/config.hpp"
#include "chartrelate/raster.hpp"

namespace chartrelate {

struct ColorCluster {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
    std::size_t member_count = 0;
};

struct KMeansResult {
    std::vector<ColorCluster> clusters;  // descending member_count
    double sse = 0.0;
};

struct KSelectionResult {
    int chosen_k = 1;
    int kneedle_k = 1;
    bool bumped = false;
    std::vector<double> normalized_errors;  // k_range_max entries, [0] == 1
};

struct ClusterOptions {
    int restarts = 3;
    int max_iterations = 100;
    double convergence_shift = 0.5;
};

// Lloyd's algorithm with seeded k-means++ initialization over the RGB
// multiset. Input order does not matter; identical (pixels, k, seed)
// give identical output. Returns at most k clusters: empty ones are
// dropped, and when the input has <= k distinct colors the exact optimum
// (one cluster per color, sse 0) is returned.
KMeansResult kmeans(const std::vector<Rgb8>& pixels, int k, std::uint64_t seed,
                    const ClusterOptions& opts = {});

// sse(k)/sse(1) for k = 1..k_range_max on a seeded uniform subsample of
// the image. Non-increasing by construction; a solid-color image yields
// the degenerate curve [1, 0, 0, ...].
std::vector<double> error_curve(const RasterImage& img, std::uint64_t seed,
                                const PipelineConfig& cfg = {});

// Knee of a non-increasing curve: the 1-based index maximizing
// (1 - y/y0) - x with x spread evenly over [0,1]. Ties break low.
int kneedle(const std::vector<double>& curve);

// Knee detection plus the flat-knee correction: when the normalized error
// at the knee is still >= kneedle_threshold the knee is one short, so k
// is bumped by one.
KSelectionResult select_k(const RasterImage& img, std::uint64_t seed,
                          const PipelineConfig& cfg = {});

// Seeded uniform pixel subsample of min(cap, all) pixels.
std::vector<Rgb8> subsample_pixels(const RasterImage& img, int cap,
                                   std::uint64_t seed);

}  // namespace chartrelate
