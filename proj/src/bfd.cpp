// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#include "bfdkit/bfd.hpp"

#include <algorithm>
#include <cmath>

namespace bfdkit {

const char* to_string(HeadPose pose) noexcept {
    switch (pose) {
    case HeadPose::Frontal: return "frontal";
    case HeadPose::LeftProfile: return "left-profile";
    case HeadPose::RightProfile: return "right-profile";
    case HeadPose::BackOfHead: return "back-of-head";
    case HeadPose::Indeterminate: return "indeterminate";
    }
    return "?";
}

void BfdConfig::validate() const {
    if (!(joint_confidence_threshold >= 0.0 && joint_confidence_threshold <= 1.0))
        throw std::invalid_argument("BfdConfig: joint_confidence_threshold must be in [0,1]");
    if (!(box_min > 0.0 && box_min < box_max))
        throw std::invalid_argument("BfdConfig: need 0 < box_min < box_max");
    if (!(box_scale_alpha > 0.0))
        throw std::invalid_argument("BfdConfig: box_scale_alpha must be positive");
    if (!(frontal_asymmetry_max > 0.0 && frontal_asymmetry_max < 1.0))
        throw std::invalid_argument("BfdConfig: frontal_asymmetry_max must be in (0,1)");
}

namespace {

Joint filtered(const Joint& j, double threshold) {
    if (!j.present || j.confidence < threshold)
        return Joint::absent();
    return j;
}

} // namespace

FaceJointSet filter_face_joints(const PersonPose& pose, const BfdConfig& cfg) {
    const double t = cfg.joint_confidence_threshold;
    return {
        filtered(pose.joint(kNose), t),     filtered(pose.joint(kLeftEye), t),
        filtered(pose.joint(kRightEye), t), filtered(pose.joint(kLeftEar), t),
        filtered(pose.joint(kRightEar), t),
    };
}

HeadPose classify_head_pose(const FaceJointSet& fjs, const BfdConfig& cfg) {
    const bool le = fjs.left_eye.present;
    const bool re = fjs.right_eye.present;

    if (le && re) {
        const bool left_pair = fjs.left_ear.present;
        const bool right_pair = fjs.right_ear.present;
        if (left_pair && right_pair) {
            const double d_left = distance(fjs.left_eye.location, fjs.left_ear.location);
            const double d_right = distance(fjs.right_eye.location, fjs.right_ear.location);
            const double d_max = std::max(d_left, d_right);
            if (d_max > 0.0) {
                const double asymmetry = std::abs(d_left - d_right) / d_max;
                if (asymmetry > cfg.frontal_asymmetry_max)
                    return d_left > d_right ? HeadPose::LeftProfile : HeadPose::RightProfile;
            }
        }
        return HeadPose::Frontal;
    }
    if (le)
        return HeadPose::LeftProfile;
    if (re)
        return HeadPose::RightProfile;
    // No eye visible: a nose alone cannot tell frontal from side.
    return fjs.nose.present ? HeadPose::Indeterminate : HeadPose::BackOfHead;
}

std::optional<FaceDetection> build_face_box(const FaceJointSet& fjs, HeadPose pose,
                                            const BfdConfig& cfg, const std::string& person_id) {
    if (pose == HeadPose::BackOfHead || pose == HeadPose::Indeterminate)
        return std::nullopt;

    const Joint* all[5] = {&fjs.nose, &fjs.left_eye, &fjs.right_eye, &fjs.left_ear,
                           &fjs.right_ear};
    const Joint* present[5];
    int n = 0;
    for (const Joint* j : all)
        if (j->present)
            present[n++] = j;

    const bool anchored = fjs.nose.present || fjs.left_eye.present || fjs.right_eye.present;
    if (n < 2 || !anchored)
        return std::nullopt;

    double spread = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            spread = std::max(spread, distance(present[i]->location, present[j]->location));
    if (!(spread > 0.0))
        return std::nullopt; // coincident joints, no usable extent

    double wsum = 0.0, cx = 0.0, cy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = present[i]->confidence;
        wsum += w;
        cx += w * present[i]->location.x;
        cy += w * present[i]->location.y;
    }
    if (!(wsum > 0.0))
        return std::nullopt; // all-zero confidences leave the centroid undefined
    cx /= wsum;
    cy /= wsum;

    const double side = cfg.box_scale_alpha * spread;
    BoundingBox box(cx - side / 2.0, cy - side / 2.0, side, side);
    return FaceDetection{box, wsum / n, pose, person_id};
}

std::optional<FaceDetection> size_gate(const FaceDetection& d, const BfdConfig& cfg) {
    const double side = d.box.side();
    if (side < cfg.box_min || side > cfg.box_max)
        return std::nullopt;
    return d;
}

std::vector<FaceDetection> detect_faces(std::span<const PersonPose> poses, const BfdConfig& cfg) {
    cfg.validate();
    std::vector<FaceDetection> out;
    out.reserve(poses.size());
    for (const PersonPose& pose : poses) {
        const FaceJointSet fjs = filter_face_joints(pose, cfg);
        const HeadPose head = classify_head_pose(fjs, cfg);
        auto det = build_face_box(fjs, head, cfg, pose.person_id);
        if (!det)
            continue;
        if (auto kept = size_gate(*det, cfg))
            out.push_back(std::move(*kept));
    }
    return out;
}

} // namespace bfdkit
