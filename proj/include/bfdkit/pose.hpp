// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "bfdkit/geometry.hpp"

namespace bfdkit {

// 18-joint body model of the usual multi-person pose estimators.
// Index order is a wire contract shared with the keypoint file format.
enum Keypoint : std::size_t {
    kNose = 0,
    kNeck = 1,
    kRightShoulder = 2,
    kRightElbow = 3,
    kRightWrist = 4,
    kLeftShoulder = 5,
    kLeftElbow = 6,
    kLeftWrist = 7,
    kRightHip = 8,
    kRightKnee = 9,
    kRightAnkle = 10,
    kLeftHip = 11,
    kLeftKnee = 12,
    kLeftAnkle = 13,
    kRightEye = 14,
    kLeftEye = 15,
    kRightEar = 16,
    kLeftEar = 17,
};

inline constexpr std::size_t kJointCount = 18;
inline constexpr std::array<std::size_t, 5> kFaceJointIndices = {kNose, kRightEye, kLeftEye,
                                                                 kRightEar, kLeftEar};

/// One detected joint. When `present` is false the location and confidence
/// are meaningless and must not be read.
struct Joint {
    Point2D location{};
    double confidence = 0.0;
    bool present = false;

    [[nodiscard]] static Joint absent() noexcept { return {}; }
    [[nodiscard]] static Joint at(double x, double y, double confidence) {
        return {{x, y}, confidence, true};
    }
};

/// One person's 18 joints, in the Keypoint index order above.
struct PersonPose {
    std::array<Joint, kJointCount> joints{};
    std::string person_id;

    [[nodiscard]] const Joint& joint(Keypoint k) const noexcept { return joints[k]; }
    [[nodiscard]] Joint& joint(Keypoint k) noexcept { return joints[k]; }
};

} // namespace bfdkit
