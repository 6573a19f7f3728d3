// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#include "bfdkit/skin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bfdkit {

ImagePatch::ImagePatch(int width_, int height_) : width(width_), height(height_) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("ImagePatch: dimensions must be >= 1");
    rgb.assign(std::size_t(3) * width * height, 0);
}

void ImagePatch::fill(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    for (std::size_t i = 0; i + 2 < rgb.size(); i += 3) {
        rgb[i] = r;
        rgb[i + 1] = g;
        rgb[i + 2] = b;
    }
}

ChromaHistogram::ChromaHistogram(int bins) : bins_per_axis(bins) {
    if (bins < 1)
        throw std::invalid_argument("ChromaHistogram: bins_per_axis must be >= 1");
    weights.assign(std::size_t(bins) * bins, 0.0);
}

double ChromaHistogram::sum() const noexcept {
    double s = 0.0;
    for (double w : weights)
        s += w;
    return s;
}

bool ChromaHistogram::normalized(double tolerance) const noexcept {
    for (double w : weights)
        if (!(w >= 0.0))
            return false;
    return std::abs(sum() - 1.0) <= tolerance;
}

namespace {

// Unnormalized chroma counts; returns the number of contributing pixels.
std::size_t accumulate_chroma(const ImagePatch& patch, ChromaHistogram& hist) {
    const int bins = hist.bins_per_axis;
    std::size_t used = 0;
    const std::size_t n = std::size_t(patch.width) * patch.height;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* p = patch.rgb.data() + 3 * i;
        const int total = int(p[0]) + int(p[1]) + int(p[2]);
        if (total == 0)
            continue;
        const double r = double(p[0]) / total;
        const double g = double(p[1]) / total;
        const int rb = std::min(int(r * bins), bins - 1);
        const int gb = std::min(int(g * bins), bins - 1);
        hist.at(rb, gb) += 1.0;
        ++used;
    }
    return used;
}

void normalize(ChromaHistogram& hist) {
    const double total = hist.sum();
    for (double& w : hist.weights)
        w /= total;
}

} // namespace

ChromaHistogram chroma_histogram(const ImagePatch& patch, int bins_per_axis) {
    if (patch.width < 1 || patch.height < 1 ||
        patch.rgb.size() != std::size_t(3) * patch.width * patch.height)
        throw std::invalid_argument("chroma_histogram: malformed patch");
    ChromaHistogram hist(bins_per_axis);
    if (accumulate_chroma(patch, hist) == 0)
        throw std::invalid_argument("chroma_histogram: patch has no chroma (all pixels black)");
    normalize(hist);
    return hist;
}

double hellinger_distance(const ChromaHistogram& a, const ChromaHistogram& b) {
    if (a.bins_per_axis != b.bins_per_axis)
        throw std::invalid_argument("hellinger_distance: histogram grids differ");
    if (!a.normalized() || !b.normalized())
        throw std::invalid_argument("hellinger_distance: inputs must be normalized");
    double bc = 0.0, sa = 0.0, sb = 0.0;
    for (std::size_t i = 0; i < a.weights.size(); ++i) {
        bc += std::sqrt(a.weights[i] * b.weights[i]);
        sa += a.weights[i];
        sb += b.weights[i];
    }
    // Dividing by the actual sums keeps d(a, a) at exactly 0 even though the
    // stored weights only sum to 1 within the normalization tolerance.
    const double coeff = bc / std::sqrt(sa * sb);
    return std::sqrt(std::max(0.0, 1.0 - coeff));
}

SkinModel train_skin_model(std::span<const ImagePatch> crops, double distance_threshold,
                           int bins_per_axis) {
    if (!(distance_threshold > 0.0 && distance_threshold <= 1.0))
        throw std::invalid_argument("train_skin_model: distance_threshold must be in (0,1]");
    ChromaHistogram pooled(bins_per_axis);
    std::size_t usable = 0;
    for (const ImagePatch& crop : crops) {
        if (crop.width < 1 || crop.height < 1 ||
            crop.rgb.size() != std::size_t(3) * crop.width * crop.height)
            throw std::invalid_argument("train_skin_model: malformed crop");
        if (accumulate_chroma(crop, pooled) > 0)
            ++usable;
    }
    if (usable == 0)
        throw std::invalid_argument("train_skin_model: no usable crop");
    normalize(pooled);
    return SkinModel{std::move(pooled), distance_threshold, usable};
}

std::optional<ImagePatch> crop(const ImagePatch& image, const BoundingBox& box) {
    const int x0 = std::max(0, int(std::floor(box.x)));
    const int y0 = std::max(0, int(std::floor(box.y)));
    const int x1 = std::min(image.width, int(std::ceil(box.right())));
    const int y1 = std::min(image.height, int(std::ceil(box.bottom())));
    if (x1 <= x0 || y1 <= y0)
        return std::nullopt;
    ImagePatch out(x1 - x0, y1 - y0);
    for (int y = y0; y < y1; ++y) {
        const std::uint8_t* src = image.pixel(x0, y);
        std::uint8_t* dst = out.pixel(0, y - y0);
        std::copy(src, src + std::size_t(3) * (x1 - x0), dst);
    }
    return out;
}

std::optional<FaceDetection> skin_gate(const FaceDetection& d, const ImagePatch& image,
                                       const SkinModel& model) {
    auto patch = crop(image, d.box);
    if (!patch)
        return std::nullopt;
    ChromaHistogram hist(model.reference.bins_per_axis);
    if (accumulate_chroma(*patch, hist) == 0)
        return std::nullopt; // chroma-free crop, nothing to compare
    normalize(hist);
    if (hellinger_distance(hist, model.reference) <= model.distance_threshold)
        return d;
    return std::nullopt;
}

} // namespace bfdkit
