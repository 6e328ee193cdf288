#include "chartrelate/raster.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>

#include "chartrelate/errors.hpp"

namespace chartrelate {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::io_error: return "io_error";
        case Errc::not_found: return "not_found";
        case Errc::decode_error: return "decode_error";
        case Errc::invalid_params: return "invalid_params";
        case Errc::degenerate_series: return "degenerate_series";
        case Errc::too_few_pixels: return "too_few_pixels";
        case Errc::curve_too_short: return "curve_too_short";
        case Errc::no_clusters: return "no_clusters";
        case Errc::empty_mask: return "empty_mask";
        case Errc::segmentation_empty: return "segmentation_empty";
        case Errc::no_legend: return "no_legend";
        case Errc::unassignable_entry: return "unassignable_entry";
        case Errc::layout_error: return "layout_error";
        case Errc::empty_corpus: return "empty_corpus";
        case Errc::out_of_range: return "out_of_range";
    }
    return "unknown";
}

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

RasterImage load_image(const std::string& path) {
    if (!std::filesystem::exists(path))
        raise(Errc::not_found, "no such file: " + path);

    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file) raise(Errc::io_error, "cannot open " + path);

    unsigned char header[8] = {};
    if (std::fread(header, 1, 8, file.get()) != 8 ||
        png_sig_cmp(header, 0, 8) != 0)
        raise(Errc::decode_error, "not a PNG file: " + path);

    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) raise(Errc::decode_error, "png reader init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        raise(Errc::decode_error, "png reader init failed");
    }

    std::vector<png_byte> data;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        raise(Errc::decode_error, "corrupt PNG: " + path);
    }

    png_init_io(png, file.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    png_uint_32 width = png_get_image_width(png, info);
    png_uint_32 height = png_get_image_height(png, info);
    png_byte color_type = png_get_color_type(png, info);
    png_byte bit_depth = png_get_bit_depth(png, info);

    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type == PNG_COLOR_TYPE_GRAY ||
        color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    png_read_update_info(png, info);

    const std::size_t channels = png_get_channels(png, info);
    const std::size_t rowbytes = png_get_rowbytes(png, info);
    data.resize(rowbytes * height);
    rows.resize(height);
    for (png_uint_32 y = 0; y < height; ++y) rows[y] = data.data() + y * rowbytes;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    if (channels != 3 && channels != 4)
        raise(Errc::decode_error, "unsupported channel layout");

    RasterImage img(static_cast<int>(width), static_cast<int>(height));
    for (png_uint_32 y = 0; y < height; ++y) {
        const png_byte* src = data.data() + y * rowbytes;
        for (png_uint_32 x = 0; x < width; ++x) {
            const png_byte* px = src + x * channels;
            Rgb8 out{px[0], px[1], px[2]};
            if (channels == 4) {
                // Composite over white.
                const unsigned a = px[3];
                auto blend = [a](unsigned c) {
                    return static_cast<std::uint8_t>((a * c + (255 - a) * 255 + 127) /
                                                     255);
                };
                out = {blend(px[0]), blend(px[1]), blend(px[2])};
            }
            img.at(static_cast<int>(x), static_cast<int>(y)) = out;
        }
    }
    return img;
}

void save_image(const RasterImage& img, const std::string& path) {
    if (img.width < 1 || img.height < 1 ||
        img.pixels.size() != static_cast<std::size_t>(img.width) * img.height)
        raise(Errc::invalid_params, "malformed image");

    FilePtr file(std::fopen(path.c_str(), "wb"));
    if (!file) raise(Errc::io_error, "cannot write " + path);

    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) raise(Errc::io_error, "png writer init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        raise(Errc::io_error, "png writer init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        raise(Errc::io_error, "png write failed: " + path);
    }

    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_byte> row(static_cast<std::size_t>(img.width) * 3);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const Rgb8& px = img.at(x, y);
            row[static_cast<std::size_t>(x) * 3 + 0] = px.r;
            row[static_cast<std::size_t>(x) * 3 + 1] = px.g;
            row[static_cast<std::size_t>(x) * 3 + 2] = px.b;
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

RasterImage crop_image(const RasterImage& img, const Box& box) {
    int x0 = std::clamp(box.x, 0, img.width);
    int y0 = std::clamp(box.y, 0, img.height);
    int x1 = std::clamp(box.x + box.w, 0, img.width);
    int y1 = std::clamp(box.y + box.h, 0, img.height);
    if (x1 <= x0 || y1 <= y0) raise(Errc::invalid_params, "empty crop box");

    RasterImage out(x1 - x0, y1 - y0);
    for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x) out.at(x - x0, y - y0) = img.at(x, y);
    return out;
}

Hsv rgb_to_hsv(Rgb8 c) {
    const double r = c.r, g = c.g, b = c.b;
    const double maxc = std::max({r, g, b});
    const double minc = std::min({r, g, b});
    const double delta = maxc - minc;

    Hsv out;
    out.v = maxc;
    out.s = maxc == 0.0 ? 0.0 : 255.0 * delta / maxc;
    if (delta > 0.0) {
        double hue;  // degrees in [0, 360)
        if (maxc == r)
            hue = 60.0 * std::fmod((g - b) / delta + 6.0, 6.0);
        else if (maxc == g)
            hue = 60.0 * ((b - r) / delta + 2.0);
        else
            hue = 60.0 * ((r - g) / delta + 4.0);
        out.h = hue / 2.0;
    }
    return out;
}

Rgb8 hsv_to_rgb(const Hsv& c) {
    const double hd = std::fmod(c.h * 2.0, 360.0);
    const double sd = c.s / 255.0;
    const double vd = c.v / 255.0;

    auto to_byte = [](double x) {
        return static_cast<std::uint8_t>(
            std::clamp(std::lround(x * 255.0), 0L, 255L));
    };

    if (sd <= 0.0) {
        const std::uint8_t gray = to_byte(vd);
        return {gray, gray, gray};
    }

    const double chroma = vd * sd;
    const double x = chroma * (1.0 - std::fabs(std::fmod(hd / 60.0, 2.0) - 1.0));
    const double m = vd - chroma;

    double r = 0, g = 0, b = 0;
    if (hd < 60) {
        r = chroma; g = x;
    } else if (hd < 120) {
        r = x; g = chroma;
    } else if (hd < 180) {
        g = chroma; b = x;
    } else if (hd < 240) {
        g = x; b = chroma;
    } else if (hd < 300) {
        r = x; b = chroma;
    } else {
        r = chroma; b = x;
    }
    return {to_byte(r + m), to_byte(g + m), to_byte(b + m)};
}

double hue_distance(double h1, double h2) {
    double d = std::fabs(h1 - h2);
    d = std::fmod(d, 180.0);
    return std::min(d, 180.0 - d);
}

}  // namespace chartrelate
