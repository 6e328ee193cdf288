#pragma once

#include "chartrelate/raster.hpp"

namespace chartrelate {

struct PreprocessConfig {
    int saturation_threshold = 30;  // 0..255
};

// Saturation binarization: pixels whose saturation exceeds the threshold
// are pushed to full saturation and value (hue kept); everything else,
// including grayscale backgrounds, axes and text, becomes white.
RasterImage saturation_threshold(const RasterImage& img,
                                 const PreprocessConfig& cfg = {});

}  // namespace chartrelate
