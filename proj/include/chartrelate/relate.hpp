#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chartrelate/cluster.hpp"
#include "chartrelate/config.hpp"
#include "chartrelate/raster.hpp"
#include "chartrelate/segment.hpp"

namespace chartrelate {

struct DataPoint {
    double x = 0.0;
    double y = 0.0;
};

struct SeriesData {
    std::vector<DataPoint> points;
};

enum class RelationLabel { positive, negative, neutral };

const char* relation_name(RelationLabel label);
RelationLabel relation_from_name(const std::string& name);

// Spearman rank correlation with average-fractional ranks for ties.
// Throws Errc::degenerate_series for constant x or constant y.
double spearman(const SeriesData& s);

// rho > threshold -> positive, rho < -threshold -> negative, else neutral
// (boundary inclusive-neutral). Throws Errc::out_of_range outside [-1,1].
RelationLabel classify_correlation(double rho, double threshold = 0.4);

// Mask coordinates as data points with y growing upward.
SeriesData mask_to_points(const SeriesMask& mask);

// True when the mask is column-filled from a shared baseline, i.e. drawn
// as bars. Such masks encode their value at the column top, so relation
// estimation reduces them to the per-column top pixel first.
bool looks_column_filled(const SeriesData& points);
SeriesData column_top_profile(const SeriesData& points);

class TextRecognizer {
public:
    virtual ~TextRecognizer() = default;
    virtual std::string read(const RasterImage& img, const Box& box) const = 0;
};

// Open relation registry; the default registry ships the thresholded
// correlation relation only.
class RelationFunction {
public:
    virtual ~RelationFunction() = default;
    virtual std::string name() const = 0;
    virtual std::string evaluate(const SeriesData& s) const = 0;
};

std::vector<std::shared_ptr<const RelationFunction>> default_relations(
    double correlation_threshold = 0.4);

struct ExtractedSeries {
    std::optional<std::string> legend_text;
    Rgb8 color;
    RelationLabel relation = RelationLabel::neutral;
    double rho = 0.0;
    std::size_t pixel_count = 0;
};

struct ExtractionResult {
    std::optional<std::string> title;
    std::optional<std::string> x_axis;
    std::optional<std::string> y_axis;
    std::vector<ExtractedSeries> series;
    KSelectionResult k_selection;
};

// The whole pipeline on one image: facet detection, plot-area crop,
// saturation threshold, k selection, segmentation, per-series relation
// estimation, legend and text joins. Facet or recognizer absence degrades
// the corresponding fields to absent.
ExtractionResult extract_relations(const RasterImage& img,
                                   const FacetProvider* facets,
                                   const TextRecognizer* ocr,
                                   const PipelineConfig& cfg = {});

std::string extraction_to_json(const ExtractionResult& result,
                               const PipelineConfig& cfg);
ExtractionResult extraction_from_json(const std::string& json_text);

}  // namespace chartrelate
