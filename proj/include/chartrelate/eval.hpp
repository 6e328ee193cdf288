#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chartrelate/chartgen.hpp"
#include "chartrelate/config.hpp"
#include "chartrelate/relate.hpp"

namespace chartrelate {

enum class SeriesMatching { by_text, by_color };

struct ChartScore {
    std::string image;
    bool axis_correct = false;
    double series_score = 0.0;        // by-text, clamped at 0
    double series_noocr_score = 0.0;  // by-color, clamped at 0
};

struct MetricsReport {
    std::size_t charts = 0;
    std::size_t series_total = 0;
    double a_axis = 0.0;
    double a_series = 0.0;
    double a_total = 0.0;
    double series_noocr = 0.0;
    std::vector<ChartScore> per_chart;
};

struct AblationReport {
    std::size_t charts = 0;
    std::optional<double> k_accuracy_with_preprocess;
    std::optional<double> k_accuracy_without;
    std::optional<std::size_t> segmentation_errors_with;
    std::optional<std::size_t> segmentation_errors_without;
    std::size_t series_total = 0;
    // Unclamped (series - errors)/series, secondary to the error counts.
    std::optional<double> accuracy_ratio_with;
    std::optional<double> accuracy_ratio_without;
};

using EvalPair = std::pair<ExtractionResult, ChartGroundTruth>;

// Unit-cost Levenshtein distance.
std::size_t edit_distance(const std::string& a, const std::string& b);

// Fraction of charts whose x and y axis labels are both present and within
// edit distance 5 of truth.
double axis_accuracy(const std::vector<EvalPair>& pairs,
                     std::size_t edit_threshold = 5);

// Per chart with n truth series each truth earns 1/n when a prediction
// matches it (text within edit distance 2, or hue within +-10) and carries
// the truth relation; unmatched predictions deduct 1/n; chart scores clamp
// at 0. Corpus score is the mean of chart scores.
double series_accuracy(const std::vector<EvalPair>& pairs,
                       SeriesMatching matching);

double total_accuracy(double a_axis, double a_series);

MetricsReport evaluate_pairs(const std::vector<EvalPair>& pairs);

// Per-chart color identification errors (missed truth colors + spurious
// reported colors, hue-matched at +-10) for one segmentation run.
std::size_t color_identification_errors(
    const std::vector<Rgb8>& reported, const std::vector<Rgb8>& truth,
    double hue_tolerance = 10.0);

// k-selection accuracy with and without the saturation threshold, scored
// against truth series count + 1.
std::pair<double, double> ablate_k_selection(const CorpusManifest& manifest,
                                             const std::string& base_dir,
                                             const PipelineConfig& cfg);

// Segmentation with ground-truth k, with and without preprocessing;
// reports total color identification errors in both conditions.
AblationReport ablate_segmentation(const CorpusManifest& manifest,
                                   const std::string& base_dir,
                                   const PipelineConfig& cfg,
                                   std::size_t limit = 0);

std::string metrics_to_json(const MetricsReport& report,
                            const PipelineConfig& cfg);
std::string metrics_to_table(const MetricsReport& report);
std::string ablation_to_json(const AblationReport& report,
                             const PipelineConfig& cfg);
std::string ablation_to_table(const AblationReport& report);

}  // namespace chartrelate
