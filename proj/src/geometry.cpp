// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#include "bfdkit/geometry.hpp"

#include <algorithm>

namespace bfdkit {

double iou(const BoundingBox& a, const BoundingBox& b) noexcept {
    const double ix = std::max(a.x, b.x);
    const double iy = std::max(a.y, b.y);
    const double ix2 = std::min(a.right(), b.right());
    const double iy2 = std::min(a.bottom(), b.bottom());
    const double iw = ix2 - ix;
    const double ih = iy2 - iy;
    if (iw <= 0.0 || ih <= 0.0)
        return 0.0;
    const double inter = iw * ih;
    // Areas from the same edge differences as the intersection, so that
    // identical boxes cancel to exactly 1 despite rounding in x + w.
    const double area_a = (a.right() - a.x) * (a.bottom() - a.y);
    const double area_b = (b.right() - b.x) * (b.bottom() - b.y);
    return inter / (area_a + area_b - inter);
}

BoundingBox clamp_box(const BoundingBox& b, const ImageSize& s) {
    const double x0 = std::max(b.x, 0.0);
    const double y0 = std::max(b.y, 0.0);
    const double x1 = std::min(b.right(), static_cast<double>(s.width));
    const double y1 = std::min(b.bottom(), static_cast<double>(s.height));
    if (!(x1 - x0 > 0.0 && y1 - y0 > 0.0))
        throw std::invalid_argument("clamp_box: box lies entirely outside the image");
    return {x0, y0, x1 - x0, y1 - y0};
}

} // namespace bfdkit
