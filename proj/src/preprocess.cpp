#include "chartrelate/preprocess.hpp"

namespace chartrelate {

RasterImage saturation_threshold(const RasterImage& img,
                                 const PreprocessConfig& cfg) {
    RasterImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const Hsv hsv = rgb_to_hsv(img.pixels[i]);
        if (hsv.s > static_cast<double>(cfg.saturation_threshold))
            out.pixels[i] = hsv_to_rgb({hsv.h, 255.0, 255.0});
        else
            out.pixels[i] = {255, 255, 255};
    }
    return out;
}

}  // namespace chartrelate
