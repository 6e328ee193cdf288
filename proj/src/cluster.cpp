#include "chartrelate/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "chartrelate/errors.hpp"
#include "chartrelate/rng.hpp"

namespace chartrelate {

namespace {

struct WeightedColor {
    double r, g, b;
    double w;
};

double sq_dist(const WeightedColor& p, double cr, double cg, double cb) {
    const double dr = p.r - cr, dg = p.g - cg, db = p.b - cb;
    return dr * dr + dg * dg + db * db;
}

struct Center {
    double r = 0, g = 0, b = 0;
};

// Lexicographic sort + run-length collapse. Clustering the weighted
// distinct set is exactly equivalent to clustering the multiset and makes
// the result independent of input pixel order.
std::vector<WeightedColor> dedup(std::vector<Rgb8> pixels) {
    std::sort(pixels.begin(), pixels.end(), [](Rgb8 a, Rgb8 b) {
        return std::tie(a.r, a.g, a.b) < std::tie(b.r, b.g, b.b);
    });
    std::vector<WeightedColor> out;
    for (std::size_t i = 0; i < pixels.size();) {
        std::size_t j = i;
        while (j < pixels.size() && pixels[j] == pixels[i]) ++j;
        out.push_back({static_cast<double>(pixels[i].r),
                       static_cast<double>(pixels[i].g),
                       static_cast<double>(pixels[i].b),
                       static_cast<double>(j - i)});
        i = j;
    }
    return out;
}

std::vector<Center> kmeanspp_init(const std::vector<WeightedColor>& points,
                                  int k, Rng& rng) {
    std::vector<Center> centers;
    centers.reserve(k);

    double total_w = 0;
    for (const auto& p : points) total_w += p.w;

    // First center: weight-proportional draw.
    {
        double target = rng.uniform() * total_w;
        std::size_t pick = 0;
        double acc = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            acc += points[i].w;
            if (target < acc) {
                pick = i;
                break;
            }
        }
        centers.push_back({points[pick].r, points[pick].g, points[pick].b});
    }

    std::vector<double> d2(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        d2[i] = sq_dist(points[i], centers[0].r, centers[0].g, centers[0].b);

    while (static_cast<int>(centers.size()) < k) {
        double total = 0;
        for (std::size_t i = 0; i < points.size(); ++i) total += d2[i] * points[i].w;
        std::size_t pick = 0;
        if (total > 0) {
            double target = rng.uniform() * total;
            double acc = 0;
            for (std::size_t i = 0; i < points.size(); ++i) {
                acc += d2[i] * points[i].w;
                if (target < acc) {
                    pick = i;
                    break;
                }
            }
        } else {
            pick = centers.size() % points.size();
        }
        const Center c{points[pick].r, points[pick].g, points[pick].b};
        centers.push_back(c);
        for (std::size_t i = 0; i < points.size(); ++i)
            d2[i] = std::min(d2[i], sq_dist(points[i], c.r, c.g, c.b));
    }
    return centers;
}

struct LloydResult {
    std::vector<Center> centers;
    std::vector<int> assignment;
    double sse = 0;
};

LloydResult lloyd(const std::vector<WeightedColor>& points,
                  std::vector<Center> centers, const ClusterOptions& opts) {
    const int k = static_cast<int>(centers.size());
    std::vector<int> assignment(points.size(), 0);

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            int best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (int c = 0; c < k; ++c) {
                const double d =
                    sq_dist(points[i], centers[c].r, centers[c].g, centers[c].b);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            assignment[i] = best;
        }

        std::vector<double> sum_r(k, 0), sum_g(k, 0), sum_b(k, 0), sum_w(k, 0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const int c = assignment[i];
            sum_r[c] += points[i].r * points[i].w;
            sum_g[c] += points[i].g * points[i].w;
            sum_b[c] += points[i].b * points[i].w;
            sum_w[c] += points[i].w;
        }

        // Re-seat empty clusters on the point with the largest weighted
        // residual so k centers stay in play.
        for (int c = 0; c < k; ++c) {
            if (sum_w[c] > 0) continue;
            std::size_t far_i = 0;
            double far_d = -1;
            for (std::size_t i = 0; i < points.size(); ++i) {
                const int a = assignment[i];
                const double d =
                    points[i].w *
                    sq_dist(points[i], centers[a].r, centers[a].g, centers[a].b);
                if (d > far_d) {
                    far_d = d;
                    far_i = i;
                }
            }
            centers[c] = {points[far_i].r, points[far_i].g, points[far_i].b};
            sum_w[c] = -1;  // mark as re-seated; skip the mean update below
        }

        double shift = 0;
        for (int c = 0; c < k; ++c) {
            if (sum_w[c] <= 0) continue;
            const Center next{sum_r[c] / sum_w[c], sum_g[c] / sum_w[c],
                              sum_b[c] / sum_w[c]};
            shift = std::max(shift, std::sqrt(sq_dist(
                                        {next.r, next.g, next.b, 0}, centers[c].r,
                                        centers[c].g, centers[c].b)));
            centers[c] = next;
        }
        if (shift < opts.convergence_shift && iter > 0) break;
    }

    // Final assignment and sse against the converged centers.
    LloydResult out;
    out.centers = centers;
    out.assignment.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        int best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
            const double d =
                sq_dist(points[i], centers[c].r, centers[c].g, centers[c].b);
            if (d < best_d) {
                best_d = d;
                best = c;
            }
        }
        out.assignment[i] = best;
        out.sse += best_d * points[i].w;
    }
    return out;
}

KMeansResult finish(const std::vector<WeightedColor>& points,
                    const LloydResult& fit, int k) {
    std::vector<double> sum_r(k, 0), sum_g(k, 0), sum_b(k, 0), sum_w(k, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const int c = fit.assignment[i];
        sum_r[c] += points[i].r * points[i].w;
        sum_g[c] += points[i].g * points[i].w;
        sum_b[c] += points[i].b * points[i].w;
        sum_w[c] += points[i].w;
    }
    KMeansResult out;
    out.sse = fit.sse;
    for (int c = 0; c < k; ++c) {
        if (sum_w[c] <= 0) continue;  // empty clusters are dropped
        out.clusters.push_back({sum_r[c] / sum_w[c], sum_g[c] / sum_w[c],
                                sum_b[c] / sum_w[c],
                                static_cast<std::size_t>(sum_w[c] + 0.5)});
    }
    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const ColorCluster& a, const ColorCluster& b) {
                  if (a.member_count != b.member_count)
                      return a.member_count > b.member_count;
                  return std::tie(a.r, a.g, a.b) < std::tie(b.r, b.g, b.b);
              });
    return out;
}

KMeansResult exact_small(const std::vector<WeightedColor>& points) {
    KMeansResult out;
    out.sse = 0;
    for (const auto& p : points)
        out.clusters.push_back({p.r, p.g, p.b, static_cast<std::size_t>(p.w + 0.5)});
    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const ColorCluster& a, const ColorCluster& b) {
                  if (a.member_count != b.member_count)
                      return a.member_count > b.member_count;
                  return std::tie(a.r, a.g, a.b) < std::tie(b.r, b.g, b.b);
              });
    return out;
}

KMeansResult kmeans_weighted(const std::vector<WeightedColor>& points, int k,
                             std::uint64_t seed, const ClusterOptions& opts,
                             const std::vector<Center>* warm_start) {
    if (static_cast<int>(points.size()) <= k) return exact_small(points);

    Rng rng(seed);
    LloydResult best;
    best.sse = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < opts.restarts; ++restart) {
        LloydResult fit = lloyd(points, kmeanspp_init(points, k, rng), opts);
        if (fit.sse < best.sse) best = fit;
    }
    if (warm_start && static_cast<int>(warm_start->size()) == k) {
        LloydResult fit = lloyd(points, *warm_start, opts);
        if (fit.sse < best.sse) best = fit;
    }
    return finish(points, best, k);
}

double sse_k1(const std::vector<WeightedColor>& points) {
    double sum_r = 0, sum_g = 0, sum_b = 0, sum_w = 0;
    for (const auto& p : points) {
        sum_r += p.r * p.w;
        sum_g += p.g * p.w;
        sum_b += p.b * p.w;
        sum_w += p.w;
    }
    if (sum_w <= 0) return 0;
    const double cr = sum_r / sum_w, cg = sum_g / sum_w, cb = sum_b / sum_w;
    double sse = 0;
    for (const auto& p : points) sse += p.w * sq_dist(p, cr, cg, cb);
    return sse;
}

struct CurveWithSse {
    std::vector<double> normalized;
    double sse1 = 0;
};

CurveWithSse error_curve_weighted(const std::vector<WeightedColor>& points,
                                  std::uint64_t seed,
                                  const PipelineConfig& cfg) {
    const int k_max = cfg.k_range_max;
    CurveWithSse out;
    out.normalized.assign(k_max, 0.0);
    out.sse1 = sse_k1(points);
    out.normalized[0] = 1.0;
    if (out.sse1 <= 0.0) return out;  // solid color: degenerate [1, 0, 0, ...]

    ClusterOptions opts;
    opts.restarts = cfg.kmeans_restarts;

    // Warm start from the previous k's best centers plus the point with
    // the largest weighted residual: sse(k) <= sse(k-1) is then guaranteed
    // because Lloyd never increases its initial sse.
    std::vector<Center> prev_centers;
    double prev_sse = out.sse1;
    {
        double sum_r = 0, sum_g = 0, sum_b = 0, sum_w = 0;
        for (const auto& p : points) {
            sum_r += p.r * p.w;
            sum_g += p.g * p.w;
            sum_b += p.b * p.w;
            sum_w += p.w;
        }
        prev_centers = {{sum_r / sum_w, sum_g / sum_w, sum_b / sum_w}};
    }

    for (int k = 2; k <= k_max; ++k) {
        std::vector<Center> warm = prev_centers;
        while (static_cast<int>(warm.size()) < k) {
            std::size_t far_i = 0;
            double far_d = -1;
            for (std::size_t i = 0; i < points.size(); ++i) {
                double d = std::numeric_limits<double>::infinity();
                for (const auto& c : warm)
                    d = std::min(d, sq_dist(points[i], c.r, c.g, c.b));
                d *= points[i].w;
                if (d > far_d) {
                    far_d = d;
                    far_i = i;
                }
            }
            warm.push_back({points[far_i].r, points[far_i].g, points[far_i].b});
        }

        const KMeansResult res =
            kmeans_weighted(points, k, Rng::child(seed, 1000 + k).next_u64(),
                            opts, &warm);
        double sse = std::min(res.sse, prev_sse);
        out.normalized[k - 1] = sse / out.sse1;

        prev_centers.clear();
        for (const auto& c : res.clusters) prev_centers.push_back({c.r, c.g, c.b});
        prev_sse = sse;
        if (sse <= 0.0) {
            // Optimum reached; later k stay at zero.
            for (int rest = k + 1; rest <= k_max; ++rest)
                out.normalized[rest - 1] = 0.0;
            break;
        }
    }
    return out;
}

std::vector<WeightedColor> sample_image(const RasterImage& img,
                                        std::uint64_t seed,
                                        const PipelineConfig& cfg) {
    return dedup(subsample_pixels(img, cfg.subsample_cap,
                                  Rng::child(seed, 0x5a3C).next_u64()));
}

}  // namespace

std::vector<Rgb8> subsample_pixels(const RasterImage& img, int cap,
                                   std::uint64_t seed) {
    const std::size_t total = img.pixels.size();
    if (total <= static_cast<std::size_t>(cap)) return img.pixels;

    std::vector<std::uint32_t> idx(total);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    std::vector<Rgb8> out;
    out.reserve(cap);
    // Partial Fisher-Yates: the first `cap` draws of a full shuffle.
    for (int i = 0; i < cap; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(rng.uniform_int(total - i));
        std::swap(idx[i], idx[j]);
        out.push_back(img.pixels[idx[i]]);
    }
    return out;
}

KMeansResult kmeans(const std::vector<Rgb8>& pixels, int k, std::uint64_t seed,
                    const ClusterOptions& opts) {
    if (k < 1) raise(Errc::invalid_params, "k must be >= 1");
    if (pixels.size() < static_cast<std::size_t>(k))
        raise(Errc::too_few_pixels, "fewer pixels than clusters");
    return kmeans_weighted(dedup(pixels), k, seed, opts, nullptr);
}

std::vector<double> error_curve(const RasterImage& img, std::uint64_t seed,
                                const PipelineConfig& cfg) {
    if (img.pixels.size() < static_cast<std::size_t>(cfg.k_range_max))
        raise(Errc::too_few_pixels, "image smaller than the k search range");
    return error_curve_weighted(sample_image(img, seed, cfg), seed, cfg)
        .normalized;
}

int kneedle(const std::vector<double>& curve) {
    if (curve.size() < 3)
        raise(Errc::curve_too_short, "kneedle needs at least 3 points");
    const std::size_t n = curve.size();
    const double y0 = curve.front();

    int best_k = 1;
    double best_d = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(n - 1);
        const double y = y0 > 0 ? curve[i] / y0 : 0.0;
        const double d = (1.0 - y) - x;
        if (d > best_d + 1e-12) {
            best_d = d;
            best_k = static_cast<int>(i) + 1;
        }
    }
    return best_k;
}

KSelectionResult select_k(const RasterImage& img, std::uint64_t seed,
                          const PipelineConfig& cfg) {
    if (img.pixels.size() < static_cast<std::size_t>(cfg.k_range_max))
        raise(Errc::too_few_pixels, "image smaller than the k search range");

    const CurveWithSse curve =
        error_curve_weighted(sample_image(img, seed, cfg), seed, cfg);

    KSelectionResult out;
    out.normalized_errors = curve.normalized;
    if (curve.sse1 <= 0.0) {
        out.chosen_k = 1;
        out.kneedle_k = 1;
        out.bumped = false;
        return out;
    }

    out.kneedle_k = kneedle(curve.normalized);
    if (curve.normalized[out.kneedle_k - 1] >= cfg.kneedle_threshold) {
        out.chosen_k = std::min(out.kneedle_k + 1, cfg.k_range_max);
        out.bumped = true;
    } else {
        out.chosen_k = out.kneedle_k;
        out.bumped = false;
    }
    return out;
}

}  // namespace chartrelate
