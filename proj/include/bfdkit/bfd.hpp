// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bfdkit/geometry.hpp"
#include "bfdkit/pose.hpp"

namespace bfdkit {

/// The five head keypoints, after confidence filtering. Absent members are
/// either undetected upstream or filtered out below the threshold.
struct FaceJointSet {
    Joint nose;
    Joint left_eye;
    Joint right_eye;
    Joint left_ear;
    Joint right_ear;

    [[nodiscard]] int present_count() const noexcept {
        return int(nose.present) + int(left_eye.present) + int(right_eye.present) +
               int(left_ear.present) + int(right_ear.present);
    }
};

enum class HeadPose {
    Frontal,
    LeftProfile,
    RightProfile,
    BackOfHead,
    Indeterminate,
};

[[nodiscard]] const char* to_string(HeadPose pose) noexcept;

/// A scored face box produced by the pipeline (or ingested from a detector
/// output file for re-gating).
struct FaceDetection {
    BoundingBox box;
    double score;     // in [0, 1]
    HeadPose pose;
    std::string source_person;
};

/// Tunables of the keypoints-to-face-box pipeline.
///
/// box_min/box_max bound the longest box side in pixels. The face box is a
/// square of side box_scale_alpha times the widest spread of the surviving
/// face joints, centered on their confidence-weighted centroid.
/// frontal_asymmetry_max is the cutoff on the normalized eye-to-ear distance
/// difference above which a two-eyed face counts as a profile.
struct BfdConfig {
    double joint_confidence_threshold = 0.3;
    double box_min = 90.0;
    double box_max = 500.0;
    double box_scale_alpha = 2.5;
    double frontal_asymmetry_max = 0.4;

    void validate() const;
};

/// Extracts the five face joints and drops the ones whose confidence falls
/// below cfg.joint_confidence_threshold. Joints exactly at the threshold
/// survive.
[[nodiscard]] FaceJointSet filter_face_joints(const PersonPose& pose, const BfdConfig& cfg);

/// Head pose from the filtered face joints:
///  - both eyes visible: Frontal, unless both eye-to-ear distances exist and
///    their normalized difference exceeds cfg.frontal_asymmetry_max, in which
///    case the side with the larger distance names the profile;
///  - exactly one eye visible: profile on that eye's side;
///  - no eye but a nose: Indeterminate;
///  - neither eyes nor nose: BackOfHead.
[[nodiscard]] HeadPose classify_head_pose(const FaceJointSet& fjs, const BfdConfig& cfg);

/// Builds the square face box for a frontal/profile classification. Returns
/// nullopt for BackOfHead and Indeterminate, for fewer than two surviving
/// face joints (at least one of which must be a nose or an eye), and for
/// degenerate zero-spread joint sets. The detection score is the mean
/// confidence of the surviving face joints.
[[nodiscard]] std::optional<FaceDetection> build_face_box(const FaceJointSet& fjs, HeadPose pose,
                                                          const BfdConfig& cfg,
                                                          const std::string& person_id = {});

/// Size gate: keeps the detection iff cfg.box_min <= max(w, h) <= cfg.box_max.
[[nodiscard]] std::optional<FaceDetection> size_gate(const FaceDetection& d, const BfdConfig& cfg);

/// Full pipeline over a list of people. At most one detection per person,
/// output order follows input order.
[[nodiscard]] std::vector<FaceDetection> detect_faces(std::span<const PersonPose> poses,
                                                      const BfdConfig& cfg = {});

} // namespace bfdkit
