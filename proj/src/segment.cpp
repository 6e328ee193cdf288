#include "chartrelate/segment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chartrelate/errors.hpp"
#include "chartrelate/rng.hpp"

namespace chartrelate {

std::pair<std::vector<ColorCluster>, ColorCluster> eliminate_background(
    const std::vector<ColorCluster>& clusters) {
    if (clusters.empty()) raise(Errc::no_clusters, "no clusters to split");

    auto white_dist = [](const ColorCluster& c) {
        const double dr = c.r - 255.0, dg = c.g - 255.0, db = c.b - 255.0;
        return dr * dr + dg * dg + db * db;
    };

    std::size_t bg = 0;
    for (std::size_t i = 1; i < clusters.size(); ++i) {
        if (clusters[i].member_count > clusters[bg].member_count)
            bg = i;
        else if (clusters[i].member_count == clusters[bg].member_count &&
                 white_dist(clusters[i]) < white_dist(clusters[bg]))
            bg = i;
    }

    std::vector<ColorCluster> series;
    series.reserve(clusters.size() - 1);
    for (std::size_t i = 0; i < clusters.size(); ++i)
        if (i != bg) series.push_back(clusters[i]);
    std::sort(series.begin(), series.end(),
              [](const ColorCluster& a, const ColorCluster& b) {
                  if (a.member_count != b.member_count)
                      return a.member_count > b.member_count;
                  return std::tie(a.r, a.g, a.b) < std::tie(b.r, b.g, b.b);
              });
    return {std::move(series), clusters[bg]};
}

HsvRangeSet hsv_range(Rgb8 color, const SegmentConfig& cfg) {
    const Hsv c = rgb_to_hsv(color);
    const double s_lo = std::max(0.0, c.s - cfg.sat_half_width);
    const double s_hi = std::min(255.0, c.s + cfg.sat_half_width);
    const double v_lo = std::max(0.0, c.v - cfg.val_half_width);
    const double v_hi = std::min(255.0, c.v + cfg.val_half_width);

    const double h_lo = c.h - cfg.hue_half_width;
    const double h_hi = c.h + cfg.hue_half_width;

    HsvRangeSet set;
    if (h_lo < 0.0) {
        set.ranges.push_back({{0.0, s_lo, v_lo}, {h_hi, s_hi, v_hi}});
        set.ranges.push_back({{h_lo + 180.0, s_lo, v_lo}, {180.0, s_hi, v_hi}});
    } else if (h_hi > 180.0) {
        set.ranges.push_back({{h_lo, s_lo, v_lo}, {180.0, s_hi, v_hi}});
        set.ranges.push_back({{0.0, s_lo, v_lo}, {h_hi - 180.0, s_hi, v_hi}});
    } else {
        set.ranges.push_back({{h_lo, s_lo, v_lo}, {h_hi, s_hi, v_hi}});
    }
    return set;
}

namespace {

std::uint8_t channel_median(std::vector<std::uint8_t>& values) {
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    return values[mid];
}

Rgb8 round_centroid(const ColorCluster& c) {
    auto to_byte = [](double v) {
        return static_cast<std::uint8_t>(
            std::clamp(std::lround(v), 0L, 255L));
    };
    return {to_byte(c.r), to_byte(c.g), to_byte(c.b)};
}

}  // namespace

SeriesMask extract_mask(const RasterImage& img, const HsvRangeSet& range,
                        int min_mask_pixels) {
    SeriesMask mask;
    mask.width = img.width;
    mask.height = img.height;
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            if (range.contains(rgb_to_hsv(img.at(x, y))))
                mask.pixels.push_back({x, y});
        }
    }
    if (mask.pixels.size() < static_cast<std::size_t>(min_mask_pixels))
        raise(Errc::empty_mask, "mask below size floor (" +
                                    std::to_string(mask.pixels.size()) +
                                    " pixels)");

    std::vector<std::uint8_t> rs, gs, bs;
    rs.reserve(mask.pixels.size());
    gs.reserve(mask.pixels.size());
    bs.reserve(mask.pixels.size());
    for (const auto& p : mask.pixels) {
        const Rgb8 c = img.at(p.x, p.y);
        rs.push_back(c.r);
        gs.push_back(c.g);
        bs.push_back(c.b);
    }
    mask.representative_color = {channel_median(rs), channel_median(gs),
                                 channel_median(bs)};
    return mask;
}

std::vector<SeriesMask> segment_series(const RasterImage& img, int k,
                                       std::uint64_t seed,
                                       const PipelineConfig& cfg) {
    const std::vector<Rgb8> sample = subsample_pixels(
        img, cfg.subsample_cap, Rng::child(seed, 0x5a3C).next_u64());

    ClusterOptions opts;
    opts.restarts = cfg.kmeans_restarts;
    const KMeansResult fit =
        kmeans(sample, k, Rng::child(seed, 0x55eC).next_u64(), opts);

    auto [series_clusters, background] = eliminate_background(fit.clusters);
    if (series_clusters.empty()) return {};

    const SegmentConfig seg_cfg = SegmentConfig::from(cfg);
    std::vector<SeriesMask> masks;
    for (const ColorCluster& cluster : series_clusters) {
        try {
            masks.push_back(extract_mask(img,
                                         hsv_range(round_centroid(cluster), seg_cfg),
                                         cfg.min_mask_pixels));
        } catch (const Error& e) {
            if (e.code() != Errc::empty_mask) throw;
            // Spurious cluster; drop it.
        }
    }
    if (masks.empty())
        raise(Errc::segmentation_empty, "all candidate masks were empty");

    std::sort(masks.begin(), masks.end(),
              [](const SeriesMask& a, const SeriesMask& b) {
                  return a.pixels.size() > b.pixels.size();
              });
    return masks;
}

LegendAssignment assign_legend_partial(const FacetBoxes& facets,
                                       const std::vector<SeriesMask>& masks,
                                       const RasterImage& img) {
    (void)img;
    if (!facets.legend || facets.legend_entries.empty())
        raise(Errc::no_legend, "no legend box or entries");
    const Box legend = *facets.legend;

    // Median location of each mask's pixels inside the legend box.
    struct MaskAnchor {
        std::size_t mask_index;
        double x, y;
    };
    std::vector<MaskAnchor> anchors;
    for (std::size_t m = 0; m < masks.size(); ++m) {
        std::vector<int> xs, ys;
        for (const auto& p : masks[m].pixels) {
            if (legend.contains(p.x, p.y)) {
                xs.push_back(p.x);
                ys.push_back(p.y);
            }
        }
        if (xs.empty()) continue;
        const std::size_t mid = xs.size() / 2;
        std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
        std::nth_element(ys.begin(), ys.begin() + mid, ys.end());
        anchors.push_back({m, static_cast<double>(xs[mid]),
                           static_cast<double>(ys[mid])});
    }

    struct Candidate {
        double dist;
        std::size_t entry;
        std::size_t anchor;
    };
    std::vector<Candidate> candidates;
    for (std::size_t e = 0; e < facets.legend_entries.size(); ++e) {
        const Box& text = facets.legend_entries[e].text_box;
        for (std::size_t a = 0; a < anchors.size(); ++a) {
            const double dx = anchors[a].x - text.cx();
            const double dy = anchors[a].y - text.cy();
            candidates.push_back({std::sqrt(dx * dx + dy * dy), e, a});
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                  if (a.dist != b.dist) return a.dist < b.dist;
                  if (a.entry != b.entry) return a.entry < b.entry;
                  return a.anchor < b.anchor;
              });

    LegendAssignment out;
    out.entry_to_mask.assign(facets.legend_entries.size(), std::nullopt);
    std::vector<bool> entry_used(facets.legend_entries.size(), false);
    std::vector<bool> anchor_used(anchors.size(), false);
    for (const Candidate& c : candidates) {
        if (entry_used[c.entry] || anchor_used[c.anchor]) continue;
        entry_used[c.entry] = true;
        anchor_used[c.anchor] = true;
        out.entry_to_mask[c.entry] = anchors[c.anchor].mask_index;
        out.by_text[facets.legend_entries[c.entry].text] =
            anchors[c.anchor].mask_index;
    }
    for (std::size_t e = 0; e < facets.legend_entries.size(); ++e)
        if (!entry_used[e]) out.unassigned.push_back(facets.legend_entries[e].text);
    return out;
}

std::map<std::string, std::size_t> assign_legend(
    const FacetBoxes& facets, const std::vector<SeriesMask>& masks,
    const RasterImage& img) {
    LegendAssignment assignment = assign_legend_partial(facets, masks, img);
    if (!assignment.unassigned.empty())
        raise(Errc::unassignable_entry,
              "no mask pixels in the legend box for entry '" +
                  assignment.unassigned.front() + "'");
    return assignment.by_text;
}

}  // namespace chartrelate
