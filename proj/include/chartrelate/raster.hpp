#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chartrelate {

struct Rgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb8&) const = default;
};

// Hue is measured in halved degrees ([0,180], red at 0), saturation and
// value on the 0-255 scale. Components stay real-valued so that the
// RGB->HSV->RGB round trip is exact up to final byte rounding.
struct Hsv {
    double h = 0.0;  // [0, 180]
    double s = 0.0;  // [0, 255]
    double v = 0.0;  // [0, 255]
};

struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<Rgb8> pixels;  // row-major

    RasterImage() = default;
    RasterImage(int w, int h, Rgb8 fill = {255, 255, 255})
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    Rgb8& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    const Rgb8& at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }

    bool operator==(const RasterImage&) const = default;
};

// Axis-aligned pixel box, inclusive origin, exclusive extent.
struct Box {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    bool contains(int px, int py) const {
        return px >= x && px < x + w && py >= y && py < y + h;
    }
    double cx() const { return x + w / 2.0; }
    double cy() const { return y + h / 2.0; }

    bool operator==(const Box&) const = default;
};

// PNG in, PNG out. Alpha composites over white; grayscale and palette
// images expand to RGB.
RasterImage load_image(const std::string& path);
void save_image(const RasterImage& img, const std::string& path);

RasterImage crop_image(const RasterImage& img, const Box& box);

Hsv rgb_to_hsv(Rgb8 c);
Rgb8 hsv_to_rgb(const Hsv& c);

// Circular distance on the halved-degree hue scale.
double hue_distance(double h1, double h2);

}  // namespace chartrelate
