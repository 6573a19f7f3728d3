// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#include "bfdkit/synth.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "bfdkit/rng.hpp"

namespace bfdkit {

namespace {

// Standing figure, coordinates as fractions of the person height: x offset
// from the body axis, y down from the top of the head. Head takes 1/7.5 of
// the height; ears sit inside the head silhouette so the widest face-joint
// spread (ear to ear) is 0.070 of the height.
constexpr Point2D kTemplate[kJointCount] = {
    {0.000, 0.0720},   // nose
    {0.000, 0.1467},   // neck
    {-0.085, 0.1667},  // right shoulder
    {-0.100, 0.3000},  // right elbow
    {-0.105, 0.4300},  // right wrist
    {0.085, 0.1667},   // left shoulder
    {0.100, 0.3000},   // left elbow
    {0.105, 0.4300},   // left wrist
    {-0.045, 0.5000},  // right hip
    {-0.050, 0.7200},  // right knee
    {-0.050, 0.9500},  // right ankle
    {0.045, 0.5000},   // left hip
    {0.050, 0.7200},   // left knee
    {0.050, 0.9500},   // left ankle
    {-0.022, 0.0600},  // right eye
    {0.022, 0.0600},   // left eye
    {-0.035, 0.0640},  // right ear
    {0.035, 0.0640},   // left ear
};

// Body rectangle used for non-overlapping placement, with a little headroom
// above the skull so the ground-truth crop stays inside the image.
constexpr double kBodyHalfWidth = 0.12;
constexpr double kBodyHeadroom = 0.03;
constexpr double kBodyRectHeight = 1.03;
constexpr int kPlacementAttempts = 100;

// Crowded scenes draw smaller people, the way a wider shot would frame them.
// Heights shrink by the factor that keeps the expected body-rectangle cover
// near kTargetFill, but never below kMinHeightScale, so absurd person counts
// still exhaust placement and error out. 0.028311 is the expected rectangle
// area at scale 1 in units of image_height^2 (0.2472 * E[h^2] for h uniform
// in [0.20, 0.46]).
constexpr double kTargetFill = 0.25;
constexpr double kMinHeightScale = 0.35;
constexpr double kNominalRectArea = 0.028311;

double height_scale(std::size_t person_count, double img_w, double img_h) {
    if (person_count == 0)
        return 1.0;
    const double expected_fill = double(person_count) * kNominalRectArea * img_h / img_w;
    if (expected_fill <= kTargetFill)
        return 1.0;
    return std::max(kMinHeightScale, std::sqrt(kTargetFill / expected_fill));
}

enum class Archetype { Frontal, LeftProfile, RightProfile, BackOfHead, Indeterminate };

bool face_joint_in_archetype(Archetype a, std::size_t joint) {
    switch (a) {
    case Archetype::Frontal:
        return true;
    case Archetype::LeftProfile:
        return joint == kNose || joint == kLeftEye || joint == kLeftEar;
    case Archetype::RightProfile:
        return joint == kNose || joint == kRightEye || joint == kRightEar;
    case Archetype::BackOfHead:
        return joint == kLeftEar || joint == kRightEar;
    case Archetype::Indeterminate:
        return joint == kNose;
    }
    return false;
}

bool is_face_joint(std::size_t joint) {
    for (std::size_t f : kFaceJointIndices)
        if (f == joint)
            return true;
    return false;
}

struct Rect {
    double x, y, w, h;
    [[nodiscard]] bool overlaps(const Rect& o) const noexcept {
        return x < o.x + o.w && o.x < x + w && y < o.y + o.h && o.y < y + h;
    }
};

} // namespace

void SceneSpec::validate() const {
    const HeadPoseMix& m = head_pose_mix;
    if (m.frontal < 0 || m.left_profile < 0 || m.right_profile < 0 || m.back_of_head < 0 ||
        m.indeterminate < 0 || std::abs(m.sum() - 1.0) > 1e-9)
        throw std::invalid_argument("SceneSpec: head_pose_mix must be probabilities summing to 1");
    if (!(occlusion_rate >= 0.0 && occlusion_rate <= 1.0))
        throw std::invalid_argument("SceneSpec: occlusion_rate must be in [0,1]");
    if (!(jitter_sigma >= 0.0) || !std::isfinite(jitter_sigma))
        throw std::invalid_argument("SceneSpec: jitter_sigma must be >= 0");
}

// Draw order per person, fixed for reproducibility: archetype, height, then
// (x, y) per placement attempt, then joints in index order: one occlusion
// draw for each face joint the archetype makes visible, and for each joint
// that stays present its confidence and jitter (x then y).
Scene generate_scene(const SceneSpec& spec, const std::string& image_id) {
    spec.validate();
    Rng rng(spec.seed);
    Scene scene;
    scene.poses.reserve(spec.person_count);

    const double img_w = spec.image_size.width;
    const double img_h = spec.image_size.height;
    const double scale = height_scale(spec.person_count, img_w, img_h);
    std::vector<Rect> placed;
    placed.reserve(spec.person_count);
    std::size_t gt_index = 0;

    for (std::size_t i = 0; i < spec.person_count; ++i) {
        const double u = rng.unit();
        const HeadPoseMix& m = spec.head_pose_mix;
        Archetype archetype = Archetype::Indeterminate;
        if (u < m.frontal)
            archetype = Archetype::Frontal;
        else if (u < m.frontal + m.left_profile)
            archetype = Archetype::LeftProfile;
        else if (u < m.frontal + m.left_profile + m.right_profile)
            archetype = Archetype::RightProfile;
        else if (u < m.frontal + m.left_profile + m.right_profile + m.back_of_head)
            archetype = Archetype::BackOfHead;

        const double height =
            rng.uniform(kTemplateMinHeightFrac, kTemplateMaxHeightFrac) * scale * img_h;
        const double rect_w = 2.0 * kBodyHalfWidth * height;
        const double rect_h = kBodyRectHeight * height;

        bool ok = false;
        Rect rect{};
        if (rect_w <= img_w && rect_h <= img_h) {
            for (int attempt = 0; attempt < kPlacementAttempts && !ok; ++attempt) {
                rect.x = rng.uniform(0.0, img_w - rect_w);
                rect.y = rng.uniform(0.0, img_h - rect_h);
                rect.w = rect_w;
                rect.h = rect_h;
                ok = true;
                for (const Rect& other : placed)
                    if (rect.overlaps(other)) {
                        ok = false;
                        break;
                    }
            }
        }
        if (!ok)
            throw std::runtime_error("generate_scene: could not place person " +
                                     std::to_string(i) + " of " +
                                     std::to_string(spec.person_count) +
                                     " without overlap; reduce person_count or heights");
        placed.push_back(rect);

        const double axis_x = rect.x + rect_w / 2.0;
        const double top_y = rect.y + kBodyHeadroom * height;

        PersonPose pose;
        pose.person_id = "p" + std::to_string(i);
        for (std::size_t k = 0; k < kJointCount; ++k) {
            bool present = true;
            if (is_face_joint(k)) {
                present = face_joint_in_archetype(archetype, k);
                if (present && rng.unit() < spec.occlusion_rate)
                    present = false;
            }
            if (!present)
                continue;
            const double conf = rng.uniform(0.55, 0.98);
            const double dx = spec.jitter_sigma * rng.gauss();
            const double dy = spec.jitter_sigma * rng.gauss();
            pose.joints[k] = Joint::at(axis_x + kTemplate[k].x * height + dx,
                                       top_y + kTemplate[k].y * height + dy, conf);
        }
        scene.poses.push_back(std::move(pose));

        if (archetype != Archetype::BackOfHead) {
            const double side = kTemplateFaceBoxSide * height;
            const double cx = axis_x;
            const double cy = top_y + kTemplateFaceCenterY * height;
            scene.ground_truth.push_back(
                {BoundingBox(cx - side / 2.0, cy - side / 2.0, side, side), image_id,
                 "f" + std::to_string(gt_index++)});
        }
    }
    return scene;
}

SyntheticDataset generate_dataset(const SceneSpec& spec, std::size_t image_count) {
    SyntheticDataset out;
    out.image_ids.reserve(image_count);
    out.scenes.reserve(image_count);
    for (std::size_t i = 0; i < image_count; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "img_%04zu", i);
        SceneSpec per_image = spec;
        per_image.seed = Rng::derive(spec.seed, i);
        out.image_ids.emplace_back(buf);
        out.scenes.push_back(generate_scene(per_image, out.image_ids.back()));
    }
    return out;
}

} // namespace bfdkit
