#pragma once

#include <memory>
#include <string>

#include "chartrelate/chartgen.hpp"
#include "chartrelate/relate.hpp"
#include "chartrelate/segment.hpp"

namespace chartrelate {

std::string ground_truth_to_json(const ChartGroundTruth& truth);
ChartGroundTruth ground_truth_from_json(const std::string& json_text);
ChartGroundTruth load_ground_truth(const std::string& path);

std::string manifest_to_json(const CorpusManifest& manifest);
CorpusManifest manifest_from_json(const std::string& json_text);
CorpusManifest load_manifest(const std::string& path);

// Facet provider backed by recorded ground truth boxes.
class GroundTruthFacetProvider : public FacetProvider {
public:
    explicit GroundTruthFacetProvider(ChartGroundTruth truth)
        : truth_(std::move(truth)) {}

    FacetBoxes detect(const RasterImage&) const override { return truth_.facets; }

private:
    ChartGroundTruth truth_;
};

// Text recognizer stub that answers from ground truth by matching the
// queried box against the recorded facet boxes.
class GroundTruthTextRecognizer : public TextRecognizer {
public:
    explicit GroundTruthTextRecognizer(ChartGroundTruth truth)
        : truth_(std::move(truth)) {}

    std::string read(const RasterImage& img, const Box& box) const override;

private:
    ChartGroundTruth truth_;
};

}  // namespace chartrelate
