#pragma once

#include <stdexcept>
#include <string>

namespace chartrelate {

enum class Errc {
    io_error,
    not_found,
    decode_error,
    invalid_params,
    degenerate_series,
    too_few_pixels,
    curve_too_short,
    no_clusters,
    empty_mask,
    segmentation_empty,
    no_legend,
    unassignable_entry,
    layout_error,
    empty_corpus,
    out_of_range,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace chartrelate
