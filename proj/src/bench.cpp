// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "bfdkit/eval.hpp"

namespace bfdkit {

BenchReport bench_timing(std::span<const std::vector<PersonPose>> poses_by_image,
                         const BfdConfig& cfg, std::size_t repetitions) {
    if (poses_by_image.empty())
        throw std::invalid_argument("bench_timing: empty dataset");
    if (repetitions < 3)
        throw std::invalid_argument("bench_timing: need at least 3 repetitions");
    cfg.validate();

    using clock = std::chrono::steady_clock;
    const std::size_t images = poses_by_image.size();

    BenchReport report;
    report.images = images;
    report.repetitions = repetitions;
    report.per_rep_mean_seconds.reserve(repetitions);

    std::vector<double> per_image(images * repetitions);
    std::size_t sink = 0; // keeps the optimizer from discarding the work
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
        double rep_total = 0.0;
        for (std::size_t i = 0; i < images; ++i) {
            const auto t0 = clock::now();
            const auto dets = detect_faces(poses_by_image[i], cfg);
            const auto t1 = clock::now();
            sink += dets.size();
            const double s = std::chrono::duration<double>(t1 - t0).count();
            per_image[rep * images + i] = s;
            rep_total += s;
        }
        report.per_rep_mean_seconds.push_back(rep_total / double(images));
    }
    if (sink == std::size_t(-1))
        report.images = 0; // unreachable

    double total = 0.0;
    for (double s : per_image)
        total += s;
    report.mean_seconds = total / double(per_image.size());

    std::vector<double> sorted = per_image;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    report.median_seconds =
        sorted.size() % 2 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;

    double ss = 0.0;
    for (double s : per_image) {
        const double d = s - report.mean_seconds;
        ss += d * d;
    }
    report.stddev_seconds =
        per_image.size() > 1 ? std::sqrt(ss / double(per_image.size() - 1)) : 0.0;
    return report;
}

} // namespace bfdkit
