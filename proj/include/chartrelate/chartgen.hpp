#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chartrelate/config.hpp"
#include "chartrelate/raster.hpp"
#include "chartrelate/relate.hpp"
#include "chartrelate/rng.hpp"
#include "chartrelate/segment.hpp"

namespace chartrelate {

enum class LineStyle { solid, dotted, dashed, dash_dot };

struct GenParams {
    int n_points = 100;
    double noise_sigma = 0.05;
};

struct GroundTruthSeries {
    std::string name;
    Rgb8 color;
    std::string color_name;  // red | green | blue
    SeriesData data;
    double rho = 0.0;
    RelationLabel relation = RelationLabel::neutral;
};

struct ChartGroundTruth {
    ChartType chart_type = ChartType::scatter;
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<GroundTruthSeries> series;
    FacetBoxes facets;
    std::uint64_t seed = 0;
};

// Chart description before rendering: everything random has been decided.
struct ChartSpec {
    ChartType chart_type = ChartType::scatter;
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<GroundTruthSeries> series;
    std::vector<LineStyle> line_styles;  // per series, line charts only
};

struct StyleParams {
    int width = 480;
    int height = 360;
    int legend_corner = 0;   // 0 NE, 1 NW, 2 SE, 3 SW
    int mark_radius = 3;     // scatter
    int line_width = 3;
    double noise_sigma = 0.0;  // additive pixel noise
};

struct CorpusEntry {
    std::string image_path;  // relative to the corpus directory
    std::string truth_path;
};

struct CorpusManifest {
    std::uint64_t seed = 0;
    GenConfig config;
    std::vector<CorpusEntry> entries;
};

// Series data synthesis. Scatter draws a target correlation in [-1,1] and
// constructs points around it; line draws a slope in [-1,1] with normal
// perturbation; bar does the same with doubled perturbation and shifts y
// positive.
SeriesData gen_series_data(ChartType kind, Rng& rng, const GenParams& params);

std::pair<double, RelationLabel> label_relation(const SeriesData& s,
                                                double threshold = 0.4);

// Rasterizes the spec: white background, grayscale axes/ticks/text blocks,
// fully saturated series marks, legend with one color swatch per series.
// Ground truth gets exact facet boxes and swatch centers.
std::pair<RasterImage, ChartGroundTruth> render_chart(const ChartSpec& spec,
                                                      const StyleParams& style,
                                                      Rng& rng);

// Random chart spec + style drawn the way generate_corpus draws them.
std::pair<ChartSpec, StyleParams> random_chart_spec(const GenConfig& cfg,
                                                    Rng& rng);

// count charts into out_dir: chart_NNNNN.png + chart_NNNNN.truth.json and
// a manifest.json. Byte-identical for identical (config, seed); chart i
// depends only on (seed, i), so --jobs does not change the output.
CorpusManifest generate_corpus(const GenConfig& cfg, int count,
                               std::uint64_t seed, const std::string& out_dir,
                               int jobs = 1);

}  // namespace chartrelate
