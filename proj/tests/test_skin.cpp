// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bfdkit/rng.hpp"
#include "bfdkit/skin.hpp"

using namespace bfdkit;

namespace {

ImagePatch uniform_patch(int w, int h, int r, int g, int b) {
    ImagePatch p(w, h);
    p.fill(std::uint8_t(r), std::uint8_t(g), std::uint8_t(b));
    return p;
}

ChromaHistogram random_histogram(Rng& rng, int nonzero_bins = 40) {
    ChromaHistogram h;
    for (int i = 0; i < nonzero_bins; ++i)
        h.weights[rng.below(h.weights.size())] += rng.uniform(0.05, 1.0);
    const double s = h.sum();
    for (double& w : h.weights)
        w /= s;
    return h;
}

ChromaHistogram single_bin(int r, int g) {
    ChromaHistogram h;
    h.at(r, g) = 1.0;
    return h;
}

} // namespace

TEST_CASE("chroma_histogram bin placement") {
    SUBCASE("pure red lands in the clamped corner bin (31, 0)") {
        const auto h = chroma_histogram(uniform_patch(4, 4, 255, 0, 0));
        CHECK(h.at(31, 0) == 1.0);
        CHECK(h.sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("gray has r = g = 1/3, bin (10, 10)") {
        const auto h = chroma_histogram(uniform_patch(3, 5, 128, 128, 128));
        CHECK(h.at(10, 10) == 1.0);
    }
    SUBCASE("an all-black patch is unusable") {
        CHECK_THROWS_AS((void)chroma_histogram(uniform_patch(1, 1, 0, 0, 0)),
                        std::invalid_argument);
    }
    SUBCASE("black pixels are skipped, the rest normalizes") {
        ImagePatch p(2, 1);
        auto* px = p.pixel(1, 0);
        px[0] = 255; // one black pixel, one red pixel
        const auto h = chroma_histogram(p);
        CHECK(h.at(31, 0) == 1.0);
    }
    SUBCASE("uniform brightness scaling keeps exact-ratio colors in their bins") {
        // ratios chosen away from bin boundaries; halving is exact in 8 bits
        const int colors[][3] = {{200, 100, 50}, {180, 60, 120}, {250, 150, 100}};
        for (const auto& c : colors) {
            const auto full = chroma_histogram(uniform_patch(2, 2, c[0], c[1], c[2]));
            const auto half =
                chroma_histogram(uniform_patch(2, 2, c[0] / 2, c[1] / 2, c[2] / 2));
            for (std::size_t i = 0; i < full.weights.size(); ++i)
                CHECK(full.weights[i] == half.weights[i]);
        }
    }
}

TEST_CASE("hellinger_distance examples") {
    SUBCASE("identical histograms: exactly zero") {
        const auto a = single_bin(5, 7);
        CHECK(hellinger_distance(a, a) == 0.0);
        Rng rng(3);
        const auto b = random_histogram(rng);
        CHECK(hellinger_distance(b, b) == 0.0);
    }
    SUBCASE("disjoint single bins: exactly one") {
        CHECK(hellinger_distance(single_bin(0, 0), single_bin(31, 31)) == 1.0);
    }
    SUBCASE("one bin vs a 50/50 split over it and another") {
        ChromaHistogram split;
        split.at(5, 7) = 0.5;
        split.at(9, 9) = 0.5;
        const double expected = std::sqrt(1.0 - std::sqrt(0.5)); // ~0.5412
        CHECK(hellinger_distance(single_bin(5, 7), split) ==
              doctest::Approx(expected).epsilon(1e-12));
        CHECK(expected == doctest::Approx(0.5412).epsilon(1e-4));
    }
    SUBCASE("unnormalized input is rejected") {
        ChromaHistogram bad;
        bad.at(0, 0) = 0.7;
        CHECK_THROWS_AS((void)hellinger_distance(bad, single_bin(0, 0)),
                        std::invalid_argument);
    }
    SUBCASE("mismatched grids are rejected") {
        ChromaHistogram small(8);
        small.at(0, 0) = 1.0;
        CHECK_THROWS_AS((void)hellinger_distance(small, single_bin(0, 0)),
                        std::invalid_argument);
    }
}

TEST_CASE("hellinger_distance is a metric") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const auto a = random_histogram(rng);
        const auto b = random_histogram(rng);
        const auto c = random_histogram(rng);
        const double ab = hellinger_distance(a, b);
        const double ba = hellinger_distance(b, a);
        const double ac = hellinger_distance(a, c);
        const double cb = hellinger_distance(c, b);
        CHECK(ab == ba);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(ab <= ac + cb + 1e-12); // triangle inequality
        CHECK(hellinger_distance(a, a) <= 1e-12);
    }
}

TEST_CASE("train_skin_model pooling") {
    SUBCASE("a single crop gives its own normalized histogram") {
        const auto crop = uniform_patch(4, 4, 200, 120, 80);
        const auto model = train_skin_model(std::vector{crop}, 0.6);
        CHECK(model.trained_on == 1);
        CHECK(hellinger_distance(model.reference, chroma_histogram(crop)) == 0.0);
    }
    SUBCASE("duplicated crops change nothing") {
        const auto crop = uniform_patch(4, 4, 200, 120, 80);
        const auto one = train_skin_model(std::vector{crop}, 0.6);
        const auto two = train_skin_model(std::vector{crop, crop}, 0.6);
        CHECK(two.trained_on == 2);
        CHECK(hellinger_distance(one.reference, two.reference) == 0.0);
    }
    SUBCASE("two disjoint equal-sized crops split the mass in half") {
        const auto red = uniform_patch(4, 4, 255, 0, 0);
        const auto blue = uniform_patch(4, 4, 0, 0, 255);
        const auto model = train_skin_model(std::vector{red, blue}, 0.6);
        CHECK(model.reference.at(31, 0) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(model.reference.at(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("pooling is permutation invariant") {
        Rng rng(17);
        std::vector<ImagePatch> crops;
        for (int i = 0; i < 6; ++i)
            crops.push_back(uniform_patch(2 + int(rng.below(4)), 2 + int(rng.below(4)),
                                          int(rng.below(256)) | 1, int(rng.below(256)),
                                          int(rng.below(256))));
        auto shuffled = crops;
        std::reverse(shuffled.begin(), shuffled.end());
        const auto a = train_skin_model(crops, 0.6);
        const auto b = train_skin_model(shuffled, 0.6);
        for (std::size_t i = 0; i < a.reference.weights.size(); ++i)
            CHECK(a.reference.weights[i] == doctest::Approx(b.reference.weights[i]).epsilon(1e-12));
    }
    SUBCASE("no usable crop is an error") {
        CHECK_THROWS_AS((void)train_skin_model(std::vector<ImagePatch>{}, 0.6),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)train_skin_model(std::vector{uniform_patch(2, 2, 0, 0, 0)}, 0.6),
                        std::invalid_argument);
    }
    SUBCASE("black crops are skipped but counted out") {
        const auto model = train_skin_model(
            std::vector{uniform_patch(2, 2, 0, 0, 0), uniform_patch(2, 2, 255, 0, 0)}, 0.6);
        CHECK(model.trained_on == 1);
    }
}

TEST_CASE("skin_gate") {
    const auto skin = uniform_patch(6, 6, 200, 120, 80);
    const auto model = train_skin_model(std::vector{skin}, 0.6);

    SUBCASE("matching distribution is kept unchanged") {
        ImagePatch image = uniform_patch(100, 100, 200, 120, 80);
        const FaceDetection d{BoundingBox(10, 10, 30, 30), 0.8, HeadPose::Frontal, "p"};
        const auto kept = skin_gate(d, image, model);
        REQUIRE(kept.has_value());
        CHECK(kept->box == d.box);
        CHECK(kept->score == d.score);
    }
    SUBCASE("disjoint chroma is rejected") {
        ImagePatch image = uniform_patch(100, 100, 0, 0, 255);
        const FaceDetection d{BoundingBox(10, 10, 30, 30), 0.8, HeadPose::Frontal, "p"};
        CHECK_FALSE(skin_gate(d, image, model).has_value());
    }
    SUBCASE("all-black crop is rejected") {
        ImagePatch image = uniform_patch(100, 100, 0, 0, 0);
        const FaceDetection d{BoundingBox(10, 10, 30, 30), 0.8, HeadPose::Frontal, "p"};
        CHECK_FALSE(skin_gate(d, image, model).has_value());
    }
    SUBCASE("distance exactly at the threshold is kept") {
        // two colors in different bins; crop half in-distribution gives
        // distance sqrt(1 - sqrt(0.5)); set the threshold exactly there
        ImagePatch image(2, 1);
        auto* a = image.pixel(0, 0);
        a[0] = 255; // red: bin (31, 0)
        auto* b = image.pixel(1, 0);
        b[2] = 255; // blue: bin (0, 0)
        SkinModel exact;
        exact.reference = chroma_histogram(uniform_patch(2, 2, 255, 0, 0));
        exact.trained_on = 1;
        const FaceDetection d{BoundingBox(0, 0, 2, 1), 0.8, HeadPose::Frontal, "p"};
        exact.distance_threshold = std::sqrt(1.0 - std::sqrt(0.5));
        CHECK(skin_gate(d, image, exact).has_value());
        exact.distance_threshold = std::nextafter(exact.distance_threshold, 0.0);
        CHECK_FALSE(skin_gate(d, image, exact).has_value());
    }
}

TEST_CASE("crop clips to the pixel grid") {
    ImagePatch image = uniform_patch(10, 10, 1, 2, 3);
    SUBCASE("interior box") {
        const auto c = crop(image, BoundingBox(2.2, 3.8, 2.0, 2.0));
        REQUIRE(c.has_value());
        CHECK(c->width == 3);  // [2, 5)
        CHECK(c->height == 3); // [3, 6)
    }
    SUBCASE("overhanging box is clipped") {
        const auto c = crop(image, BoundingBox(-5, -5, 7, 7));
        REQUIRE(c.has_value());
        CHECK(c->width == 2);
        CHECK(c->height == 2);
    }
    SUBCASE("fully outside gives nothing") {
        CHECK_FALSE(crop(image, BoundingBox(20, 20, 5, 5)).has_value());
    }
}
