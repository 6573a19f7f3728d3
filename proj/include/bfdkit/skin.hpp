// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bfdkit/bfd.hpp"
#include "bfdkit/geometry.hpp"

namespace bfdkit {

/// RGB raster, 8 bits per channel, row-major, no padding.
struct ImagePatch {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb; // 3 * width * height bytes

    ImagePatch() = default;
    ImagePatch(int width_, int height_);

    [[nodiscard]] const std::uint8_t* pixel(int x, int y) const {
        return rgb.data() + 3 * (std::size_t(y) * width + x);
    }
    [[nodiscard]] std::uint8_t* pixel(int x, int y) {
        return rgb.data() + 3 * (std::size_t(y) * width + x);
    }
    void fill(std::uint8_t r, std::uint8_t g, std::uint8_t b);
};

/// Histogram over normalized chroma (r, g) = (R, G) / (R+G+B). Brightness
/// cancels out of the ratios, which is what makes the distribution usable
/// across lighting conditions. Square grid, bins_per_axis^2 weights,
/// weight[r_bin * bins_per_axis + g_bin].
struct ChromaHistogram {
    int bins_per_axis = 32;
    std::vector<double> weights;

    ChromaHistogram() : weights(32 * 32, 0.0) {}
    explicit ChromaHistogram(int bins);

    [[nodiscard]] double sum() const noexcept;
    [[nodiscard]] bool normalized(double tolerance = 1e-9) const noexcept;
    [[nodiscard]] double& at(int r_bin, int g_bin) { return weights[std::size_t(r_bin) * bins_per_axis + g_bin]; }
    [[nodiscard]] double at(int r_bin, int g_bin) const { return weights[std::size_t(r_bin) * bins_per_axis + g_bin]; }
};

/// Reference skin-chroma distribution plus the accept/reject distance cutoff.
struct SkinModel {
    ChromaHistogram reference;
    double distance_threshold = 0.6;
    std::size_t trained_on = 0;
};

/// Normalized chroma histogram of a patch. Every pixel with R+G+B > 0 adds
/// weight 1 to bin (floor(r*bins) clamped to bins-1, same for g); pure black
/// pixels carry no chroma and are skipped. Throws std::invalid_argument when
/// no pixel contributes (an unusable crop).
[[nodiscard]] ChromaHistogram chroma_histogram(const ImagePatch& patch, int bins_per_axis = 32);

/// Hellinger distance between two normalized histograms of equal grid size:
/// sqrt(1 - sum_i sqrt(a_i * b_i)). A metric on distributions, 0 iff equal,
/// 1 iff the supports are disjoint. Throws std::invalid_argument on
/// unnormalized input or mismatched grids.
[[nodiscard]] double hellinger_distance(const ChromaHistogram& a, const ChromaHistogram& b);

/// Pools the unnormalized pixel counts of all usable crops and normalizes
/// the result. Throws std::invalid_argument when no crop is usable.
[[nodiscard]] SkinModel train_skin_model(std::span<const ImagePatch> crops,
                                         double distance_threshold = 0.6, int bins_per_axis = 32);

/// Cuts d.box out of the image (clipped to the pixel grid).
/// Returns nullopt when the box covers no pixel.
[[nodiscard]] std::optional<ImagePatch> crop(const ImagePatch& image, const BoundingBox& box);

/// Keeps the detection iff the chroma distribution of its crop is within
/// model.distance_threshold of the reference (a distance exactly at the
/// threshold is kept). Detections with unusable crops (no chroma, e.g. all
/// black or off-image) are rejected. A kept detection is returned unchanged.
[[nodiscard]] std::optional<FaceDetection> skin_gate(const FaceDetection& d,
                                                     const ImagePatch& image,
                                                     const SkinModel& model);

} // namespace bfdkit
