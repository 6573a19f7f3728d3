// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <stdexcept>

namespace bfdkit {

/// A point in image coordinates. Origin is the top-left corner of the
/// image, x grows right, y grows down. Values are expected to be finite.
struct Point2D {
    double x = 0.0;
    double y = 0.0;

    [[nodiscard]] bool finite() const noexcept {
        return std::isfinite(x) && std::isfinite(y);
    }
};

[[nodiscard]] inline double distance(const Point2D& a, const Point2D& b) noexcept {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Axis-aligned box, (x, y) = top-left corner, w/h strictly positive.
/// Geometry is continuous (real-valued); annotation files carry integer
/// pixels but scoring never quantizes.
struct BoundingBox {
    double x;
    double y;
    double w;
    double h;

    BoundingBox(double x_, double y_, double w_, double h_) : x(x_), y(y_), w(w_), h(h_) {
        if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(w) && std::isfinite(h)))
            throw std::invalid_argument("BoundingBox: fields must be finite");
        if (!(w > 0.0 && h > 0.0))
            throw std::invalid_argument("BoundingBox: width and height must be positive");
    }

    [[nodiscard]] double area() const noexcept { return w * h; }
    [[nodiscard]] double right() const noexcept { return x + w; }
    [[nodiscard]] double bottom() const noexcept { return y + h; }
    /// Longest side; the size gate and square-box code measure this.
    [[nodiscard]] double side() const noexcept { return w > h ? w : h; }
    [[nodiscard]] Point2D center() const noexcept { return {x + w / 2.0, y + h / 2.0}; }

    friend bool operator==(const BoundingBox& a, const BoundingBox& b) noexcept {
        return a.x == b.x && a.y == b.y && a.w == b.w && a.h == b.h;
    }
};

/// Pixel dimensions of an image. Both sides at least 1.
struct ImageSize {
    int width;
    int height;

    ImageSize(int width_, int height_) : width(width_), height(height_) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("ImageSize: dimensions must be >= 1");
    }
};

/// Intersection-over-union of two boxes, in [0, 1]. Symmetric, 0 for
/// disjoint boxes, 1 for identical boxes.
[[nodiscard]] double iou(const BoundingBox& a, const BoundingBox& b) noexcept;

/// Clips a box to the image rectangle [0,width]x[0,height]. A box already
/// inside comes back unchanged. Throws std::invalid_argument when the box
/// does not intersect the image at all (an invalid detection).
[[nodiscard]] BoundingBox clamp_box(const BoundingBox& b, const ImageSize& s);

} // namespace bfdkit
