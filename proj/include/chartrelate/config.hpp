#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chartrelate {

enum class ChartType { scatter, line, bar };

const char* chart_type_name(ChartType t);
ChartType chart_type_from_name(const std::string& name);

struct GenConfig {
    int width = 480;
    int height = 360;
    int points = 100;          // scatter/line points per series
    int bar_points = 12;       // bars per series
    double noise_sigma = 0.05; // data noise, absolute on the unit x-range
    double pixel_noise_sigma = 0.0;
    int min_series = 1;
    int max_series = 3;
    std::vector<ChartType> chart_types = {ChartType::scatter, ChartType::line,
                                          ChartType::bar};
    bool random_line_styles = false;
};

// Every constant consumed by the pipeline, overridable via config file,
// CLI flags, or the C API. Defaults follow the documented method where it
// states a constant and are otherwise this project's calibration.
struct PipelineConfig {
    int saturation_threshold = 30;  // 0..255
    int min_mask_pixels = 25;
    int k_range_max = 8;
    double kneedle_threshold = 0.985;
    double correlation_threshold = 0.4;
    double hue_half_width = 10.0;  // halved degrees
    double sat_half_width = 25.0;
    double val_half_width = 40.0;
    int subsample_cap = 20000;
    int kmeans_restarts = 3;
    std::uint64_t seed = 0;
    int jobs = 1;
    GenConfig gen;

    void validate() const;  // throws Errc::invalid_params
};

// Flat key=value config file ('#' comments, blank lines ignored).
PipelineConfig load_config_file(const std::string& path,
                                PipelineConfig base = {});
void apply_config_entry(PipelineConfig& cfg, const std::string& key,
                        const std::string& value);

// Flat key=value echo of the effective config, embedded in every report.
std::string config_to_json(const PipelineConfig& cfg);

}  // namespace chartrelate
