// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bfdkit/eval.hpp"
#include "bfdkit/geometry.hpp"
#include "bfdkit/pose.hpp"

namespace bfdkit {

/// Probability of each head-pose archetype when a person is generated.
struct HeadPoseMix {
    double frontal = 0.55;
    double left_profile = 0.15;
    double right_profile = 0.15;
    double back_of_head = 0.10;
    double indeterminate = 0.05; // nose visible, both eyes hidden

    [[nodiscard]] double sum() const noexcept {
        return frontal + left_profile + right_profile + back_of_head + indeterminate;
    }
};

/// Parameters of one synthetic surveillance frame. Person heights are drawn
/// relative to the image height (long-lens framing, whole bodies visible),
/// sized so that default-config face boxes land inside the size gate at the
/// default 5184x3456 resolution.
struct SceneSpec {
    ImageSize image_size{5184, 3456};
    std::size_t person_count = 8;
    HeadPoseMix head_pose_mix{};
    double occlusion_rate = 0.0; // probability each face joint is dropped
    double jitter_sigma = 2.0;   // pixel noise added to every joint
    std::uint64_t seed = 0;

    void validate() const;
};

struct Scene {
    std::vector<PersonPose> poses;
    std::vector<GroundTruthFace> ground_truth;
};

/// One image worth of people: poses from a template skeleton (head about
/// 1/7.5 of body height) scaled to a random on-screen height and jittered;
/// ground-truth face boxes from the unjittered template head geometry, so a
/// detector's boxes never coincide with the annotation exactly. BackOfHead
/// persons carry no ground truth. Fully deterministic given spec.seed.
/// Throws std::runtime_error when non-overlapping placement keeps failing.
[[nodiscard]] Scene generate_scene(const SceneSpec& spec, const std::string& image_id = "scene");

struct SyntheticDataset {
    std::vector<std::string> image_ids;
    std::vector<Scene> scenes; // parallel to image_ids
};

/// image_count scenes with ids img_0000, img_0001, ... Image i uses the
/// derived seed Rng::derive(spec.seed, i).
[[nodiscard]] SyntheticDataset generate_dataset(const SceneSpec& spec, std::size_t image_count);

// Template constants, exposed for tests that reason about the geometry.
// Coordinates are fractions of the person height; x is offset from the body
// axis, y grows downward from the top of the head.
inline constexpr double kTemplateFaceBoxSide = 0.175;   // ground-truth crop side
inline constexpr double kTemplateFaceCenterY = 0.064;   // crop center below head top
inline constexpr double kTemplateMinHeightFrac = 0.20;  // of image height
inline constexpr double kTemplateMaxHeightFrac = 0.46;

} // namespace bfdkit
