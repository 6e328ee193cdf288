#include "chartrelate/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chartrelate/errors.hpp"

namespace chartrelate {

using ordered_json = nlohmann::ordered_json;

const char* chart_type_name(ChartType t) {
    switch (t) {
        case ChartType::scatter: return "scatter";
        case ChartType::line: return "line";
        case ChartType::bar: return "bar";
    }
    return "scatter";
}

ChartType chart_type_from_name(const std::string& name) {
    if (name == "scatter") return ChartType::scatter;
    if (name == "line") return ChartType::line;
    if (name == "bar") return ChartType::bar;
    raise(Errc::invalid_params, "unknown chart type: " + name);
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        raise(Errc::invalid_params, "bad integer for " + key + ": " + value);
    }
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        raise(Errc::invalid_params, "bad number for " + key + ": " + value);
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        raise(Errc::invalid_params, "bad seed for " + key + ": " + value);
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    raise(Errc::invalid_params, "bad boolean for " + key + ": " + value);
}

std::vector<ChartType> parse_chart_types(const std::string& value) {
    std::vector<ChartType> types;
    std::stringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        types.push_back(chart_type_from_name(item));
    }
    if (types.empty()) raise(Errc::invalid_params, "empty chart type list");
    return types;
}

std::string chart_types_to_string(const std::vector<ChartType>& types) {
    std::string out;
    for (const ChartType t : types) {
        if (!out.empty()) out += ",";
        out += chart_type_name(t);
    }
    return out;
}

}  // namespace

void apply_config_entry(PipelineConfig& cfg, const std::string& key,
                        const std::string& value) {
    if (key == "saturation_threshold")
        cfg.saturation_threshold = parse_int(key, value);
    else if (key == "min_mask_pixels")
        cfg.min_mask_pixels = parse_int(key, value);
    else if (key == "k_range_max")
        cfg.k_range_max = parse_int(key, value);
    else if (key == "kneedle_threshold")
        cfg.kneedle_threshold = parse_double(key, value);
    else if (key == "correlation_threshold")
        cfg.correlation_threshold = parse_double(key, value);
    else if (key == "hue_half_width")
        cfg.hue_half_width = parse_double(key, value);
    else if (key == "sat_half_width")
        cfg.sat_half_width = parse_double(key, value);
    else if (key == "val_half_width")
        cfg.val_half_width = parse_double(key, value);
    else if (key == "subsample_cap")
        cfg.subsample_cap = parse_int(key, value);
    else if (key == "kmeans_restarts")
        cfg.kmeans_restarts = parse_int(key, value);
    else if (key == "seed")
        cfg.seed = parse_u64(key, value);
    else if (key == "jobs")
        cfg.jobs = parse_int(key, value);
    else if (key == "gen_width")
        cfg.gen.width = parse_int(key, value);
    else if (key == "gen_height")
        cfg.gen.height = parse_int(key, value);
    else if (key == "gen_points")
        cfg.gen.points = parse_int(key, value);
    else if (key == "gen_bar_points")
        cfg.gen.bar_points = parse_int(key, value);
    else if (key == "gen_noise_sigma")
        cfg.gen.noise_sigma = parse_double(key, value);
    else if (key == "gen_pixel_noise_sigma")
        cfg.gen.pixel_noise_sigma = parse_double(key, value);
    else if (key == "gen_min_series")
        cfg.gen.min_series = parse_int(key, value);
    else if (key == "gen_max_series")
        cfg.gen.max_series = parse_int(key, value);
    else if (key == "gen_chart_types")
        cfg.gen.chart_types = parse_chart_types(value);
    else if (key == "gen_random_line_styles")
        cfg.gen.random_line_styles = parse_bool(key, value);
    else
        raise(Errc::invalid_params, "unknown config key: " + key);
}

PipelineConfig load_config_file(const std::string& path, PipelineConfig base) {
    std::ifstream in(path);
    if (!in) raise(Errc::not_found, "cannot open config file: " + path);

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            raise(Errc::invalid_params, path + ":" + std::to_string(line_no) +
                                            ": expected key = value");
        apply_config_entry(base, trim(line.substr(0, eq)),
                           trim(line.substr(eq + 1)));
    }
    return base;
}

void PipelineConfig::validate() const {
    auto check = [](bool ok, const std::string& what) {
        if (!ok) raise(Errc::invalid_params, "config: " + what);
    };
    check(saturation_threshold >= 0 && saturation_threshold <= 255,
          "saturation_threshold must be in [0,255]");
    check(min_mask_pixels >= 1, "min_mask_pixels must be >= 1");
    check(k_range_max >= 3 && k_range_max <= 8, "k_range_max must be in [3,8]");
    check(kneedle_threshold > 0.0 && kneedle_threshold <= 1.0,
          "kneedle_threshold must be in (0,1]");
    check(correlation_threshold >= 0.0 && correlation_threshold < 1.0,
          "correlation_threshold must be in [0,1)");
    check(hue_half_width > 0.0 && hue_half_width < 90.0,
          "hue_half_width must be in (0,90)");
    check(sat_half_width > 0.0 && sat_half_width <= 255.0,
          "sat_half_width must be in (0,255]");
    check(val_half_width > 0.0 && val_half_width <= 255.0,
          "val_half_width must be in (0,255]");
    check(subsample_cap >= 64, "subsample_cap must be >= 64");
    check(kmeans_restarts >= 1, "kmeans_restarts must be >= 1");
    check(jobs >= 1, "jobs must be >= 1");
    check(gen.width >= 256 && gen.height >= 256,
          "generated images must be at least 256x256");
    check(gen.points >= 10, "gen_points must be >= 10");
    check(gen.bar_points >= 10, "gen_bar_points must be >= 10");
    check(gen.noise_sigma > 0.0, "gen_noise_sigma must be > 0");
    check(gen.pixel_noise_sigma >= 0.0, "gen_pixel_noise_sigma must be >= 0");
    check(gen.min_series >= 1 && gen.max_series <= 3 &&
              gen.min_series <= gen.max_series,
          "series count range must lie within [1,3]");
    check(!gen.chart_types.empty(), "gen_chart_types must be non-empty");
}

std::string config_to_json(const PipelineConfig& cfg) {
    ordered_json j;
    j["saturation_threshold"] = cfg.saturation_threshold;
    j["min_mask_pixels"] = cfg.min_mask_pixels;
    j["k_range_max"] = cfg.k_range_max;
    j["kneedle_threshold"] = cfg.kneedle_threshold;
    j["correlation_threshold"] = cfg.correlation_threshold;
    j["hue_half_width"] = cfg.hue_half_width;
    j["sat_half_width"] = cfg.sat_half_width;
    j["val_half_width"] = cfg.val_half_width;
    j["subsample_cap"] = cfg.subsample_cap;
    j["kmeans_restarts"] = cfg.kmeans_restarts;
    j["seed"] = cfg.seed;
    j["jobs"] = cfg.jobs;
    j["gen_width"] = cfg.gen.width;
    j["gen_height"] = cfg.gen.height;
    j["gen_points"] = cfg.gen.points;
    j["gen_bar_points"] = cfg.gen.bar_points;
    j["gen_noise_sigma"] = cfg.gen.noise_sigma;
    j["gen_pixel_noise_sigma"] = cfg.gen.pixel_noise_sigma;
    j["gen_min_series"] = cfg.gen.min_series;
    j["gen_max_series"] = cfg.gen.max_series;
    j["gen_chart_types"] = chart_types_to_string(cfg.gen.chart_types);
    j["gen_random_line_styles"] = cfg.gen.random_line_styles;
    return j.dump();
}

}  // namespace chartrelate
