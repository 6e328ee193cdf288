#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chartrelate/cluster.hpp"
#include "chartrelate/config.hpp"
#include "chartrelate/raster.hpp"

namespace chartrelate {

struct HsvBox {
    Hsv lower;
    Hsv upper;

    bool contains(const Hsv& c) const {
        return c.h >= lower.h && c.h <= upper.h && c.s >= lower.s &&
               c.s <= upper.s && c.v >= lower.v && c.v <= upper.v;
    }
};

// One box normally; two hue-disjoint boxes with shared s/v bounds when the
// hue interval wraps past the 0/180 seam (red).
struct HsvRangeSet {
    std::vector<HsvBox> ranges;

    bool contains(const Hsv& c) const {
        for (const auto& box : ranges)
            if (box.contains(c)) return true;
        return false;
    }
};

struct PixelCoord {
    int x = 0;
    int y = 0;

    bool operator==(const PixelCoord&) const = default;
};

struct SeriesMask {
    int width = 0;
    int height = 0;
    std::vector<PixelCoord> pixels;
    Rgb8 representative_color;  // channelwise median of members
};

struct LegendEntry {
    std::string text;
    Box text_box;
    std::optional<PixelCoord> swatch_center;  // ground truth only
};

struct FacetBoxes {
    std::optional<Box> plot_area;
    std::optional<Box> legend;
    std::optional<Box> title;
    std::optional<Box> x_label;
    std::optional<Box> y_label;
    std::vector<LegendEntry> legend_entries;
};

class FacetProvider {
public:
    virtual ~FacetProvider() = default;
    virtual FacetBoxes detect(const RasterImage& img) const = 0;
};

struct SegmentConfig {
    int min_mask_pixels = 25;
    double hue_half_width = 10.0;
    double sat_half_width = 25.0;
    double val_half_width = 40.0;

    static SegmentConfig from(const PipelineConfig& cfg) {
        return {cfg.min_mask_pixels, cfg.hue_half_width, cfg.sat_half_width,
                cfg.val_half_width};
    }
};

// Drops the cluster with the most members (the background); ties go to
// the centroid nearest white. Remaining clusters come back ordered by
// descending member count.
std::pair<std::vector<ColorCluster>, ColorCluster> eliminate_background(
    const std::vector<ColorCluster>& clusters);

HsvRangeSet hsv_range(Rgb8 color, const SegmentConfig& cfg = {});

// Pixels whose HSV lies in any box of the set. Throws Errc::empty_mask
// when fewer than min_mask_pixels survive.
SeriesMask extract_mask(const RasterImage& img, const HsvRangeSet& range,
                        int min_mask_pixels = 25);

// Full segmentation: cluster a subsample, drop the background, build one
// HSV range per series centroid and extract its mask. Masks below the
// size floor are dropped; ordering is by descending pixel count.
std::vector<SeriesMask> segment_series(const RasterImage& img, int k,
                                       std::uint64_t seed,
                                       const PipelineConfig& cfg = {});

struct LegendAssignment {
    std::map<std::string, std::size_t> by_text;      // entry text -> mask index
    std::vector<std::string> unassigned;             // entry texts left over
    std::vector<std::optional<std::size_t>> entry_to_mask;  // by entry index
};

// Matches each legend entry to the mask whose median in-legend pixel is
// nearest the entry's text centroid; collisions resolve globally
// nearest-first. Partial variant never throws on leftovers.
LegendAssignment assign_legend_partial(const FacetBoxes& facets,
                                       const std::vector<SeriesMask>& masks,
                                       const RasterImage& img);

std::map<std::string, std::size_t> assign_legend(
    const FacetBoxes& facets, const std::vector<SeriesMask>& masks,
    const RasterImage& img);

}  // namespace chartrelate
