// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "bfdkit/bfd.hpp"
#include "bfdkit/rng.hpp"

using namespace bfdkit;

namespace {

PersonPose pose_with_face(Joint nose, Joint left_eye, Joint right_eye, Joint left_ear,
                          Joint right_ear) {
    PersonPose p;
    p.person_id = "t";
    p.joints[kNose] = nose;
    p.joints[kLeftEye] = left_eye;
    p.joints[kRightEye] = right_eye;
    p.joints[kLeftEar] = left_ear;
    p.joints[kRightEar] = right_ear;
    return p;
}

// Random pose whose box side stays at or below the default box_max when all
// joints survive; shrinking joint subsets can then only fall out of the gate
// at the low end, which keeps threshold monotonicity exact.
PersonPose random_pose(Rng& rng, double present_prob = 0.8) {
    PersonPose p;
    p.person_id = "r";
    const double cx = rng.uniform(200, 800), cy = rng.uniform(200, 800);
    const double radius = rng.uniform(20, 97); // spread <= 194px, side <= 485 < 500
    for (std::size_t k : kFaceJointIndices) {
        if (rng.unit() > present_prob)
            continue;
        const double ang = rng.uniform(0, 6.283185307179586);
        const double r = radius * rng.unit();
        p.joints[k] =
            Joint::at(cx + r * std::cos(ang), cy + r * std::sin(ang), rng.uniform(0, 1));
    }
    return p;
}

PersonPose translated(PersonPose p, double dx, double dy) {
    for (Joint& j : p.joints)
        if (j.present) {
            j.location.x += dx;
            j.location.y += dy;
        }
    return p;
}

} // namespace

TEST_CASE("filter_face_joints thresholding") {
    const BfdConfig cfg;
    SUBCASE("all above threshold survive") {
        auto p = pose_with_face(Joint::at(0, 0, 0.9), Joint::at(1, 0, 0.9),
                                Joint::at(2, 0, 0.9), Joint::at(3, 0, 0.9),
                                Joint::at(4, 0, 0.9));
        CHECK(filter_face_joints(p, cfg).present_count() == 5);
    }
    SUBCASE("low-confidence nose is dropped") {
        auto p = pose_with_face(Joint::at(0, 0, 0.1), Joint::at(1, 0, 0.9),
                                Joint::at(2, 0, 0.9), Joint::at(3, 0, 0.9),
                                Joint::at(4, 0, 0.9));
        const auto fjs = filter_face_joints(p, cfg);
        CHECK_FALSE(fjs.nose.present);
        CHECK(fjs.present_count() == 4);
    }
    SUBCASE("confidence exactly at the threshold survives") {
        auto p = pose_with_face(Joint::at(0, 0, 0.3), Joint::at(1, 0, 0.3),
                                Joint::at(2, 0, 0.3), Joint::at(3, 0, 0.3),
                                Joint::at(4, 0, 0.3));
        CHECK(filter_face_joints(p, cfg).present_count() == 5);
    }
    SUBCASE("surviving joints are unchanged") {
        auto p = pose_with_face(Joint::at(7, 9, 0.5), Joint::absent(), Joint::absent(),
                                Joint::absent(), Joint::absent());
        const auto fjs = filter_face_joints(p, cfg);
        CHECK(fjs.nose.location.x == 7.0);
        CHECK(fjs.nose.location.y == 9.0);
        CHECK(fjs.nose.confidence == 0.5);
    }
}

TEST_CASE("classify_head_pose") {
    const BfdConfig cfg;
    SUBCASE("symmetric eyes and ears give frontal") {
        FaceJointSet fjs{Joint::at(0, 12, 1), Joint::at(10, 0, 1), Joint::at(-10, 0, 1),
                         Joint::at(20, 2, 1), Joint::at(-20, 2, 1)};
        CHECK(classify_head_pose(fjs, cfg) == HeadPose::Frontal);
    }
    SUBCASE("single visible eye-ear pair is that side's profile") {
        FaceJointSet fjs{Joint::at(0, 12, 1), Joint::at(10, 0, 1), Joint::absent(),
                         Joint::at(20, 2, 1), Joint::absent()};
        CHECK(classify_head_pose(fjs, cfg) == HeadPose::LeftProfile);
    }
    SUBCASE("nothing visible is the back of the head") {
        FaceJointSet fjs{};
        CHECK(classify_head_pose(fjs, cfg) == HeadPose::BackOfHead);
        fjs.left_ear = Joint::at(1, 1, 1);
        fjs.right_ear = Joint::at(-1, 1, 1);
        CHECK(classify_head_pose(fjs, cfg) == HeadPose::BackOfHead);
    }
    SUBCASE("asymmetry 2/3 beats the 0.4 cutoff: profile of the longer side") {
        // d_left = 30, d_right = 10, r = 20/30
        FaceJointSet fjs{Joint::absent(), Joint::at(0, 0, 1), Joint::at(100, 0, 1),
                         Joint::at(30, 0, 1), Joint::at(110, 0, 1)};
        CHECK(classify_head_pose(fjs, cfg) == HeadPose::LeftProfile);
        // mirrored
        FaceJointSet mirror{Joint::absent(), Joint::at(0, 0, 1), Joint::at(100, 0, 1),
                            Joint::at(10, 0, 1), Joint::at(130, 0, 1)};
        CHECK(classify_head_pose(mirror, cfg) == HeadPose::RightProfile);
    }
    SUBCASE("both eyes but one ear still counts as frontal") {
        FaceJointSet fjs{Joint::absent(), Joint::at(10, 0, 1), Joint::at(-10, 0, 1),
                         Joint::at(40, 0, 1), Joint::absent()};
        CHECK(classify_head_pose(fjs, cfg) == HeadPose::Frontal);
    }
    SUBCASE("nose alone is indeterminate") {
        FaceJointSet fjs{Joint::at(0, 0, 1), Joint::absent(), Joint::absent(), Joint::absent(),
                         Joint::absent()};
        CHECK(classify_head_pose(fjs, cfg) == HeadPose::Indeterminate);
    }
}

TEST_CASE("build_face_box geometry") {
    const BfdConfig cfg; // alpha 2.5
    SUBCASE("two eyes and a nose: hand-computed square") {
        // eye spread 20 dominates the eye-nose distance sqrt(10^2 + 12^2);
        // side 2.5 * 20 = 50 around the centroid (100, 104).
        FaceJointSet fjs{Joint::at(100, 112, 1), Joint::at(110, 100, 1),
                         Joint::at(90, 100, 1), Joint::absent(), Joint::absent()};
        const auto det = build_face_box(fjs, HeadPose::Frontal, cfg, "p");
        REQUIRE(det.has_value());
        CHECK(det->box.w == doctest::Approx(50.0).epsilon(1e-12));
        CHECK(det->box.h == doctest::Approx(50.0).epsilon(1e-12));
        CHECK(det->box.x == doctest::Approx(75.0).epsilon(1e-12));
        CHECK(det->box.y == doctest::Approx(79.0).epsilon(1e-12));
        CHECK(det->score == 1.0);
        CHECK(det->pose == HeadPose::Frontal);
        CHECK(det->source_person == "p");
    }
    SUBCASE("back of head and indeterminate yield nothing") {
        FaceJointSet fjs{Joint::at(0, 0, 1), Joint::at(1, 0, 1), Joint::at(2, 0, 1),
                         Joint::absent(), Joint::absent()};
        CHECK_FALSE(build_face_box(fjs, HeadPose::BackOfHead, cfg).has_value());
        CHECK_FALSE(build_face_box(fjs, HeadPose::Indeterminate, cfg).has_value());
    }
    SUBCASE("a lone joint is not enough evidence") {
        FaceJointSet fjs{Joint::at(0, 0, 1), Joint::absent(), Joint::absent(), Joint::absent(),
                         Joint::absent()};
        CHECK_FALSE(build_face_box(fjs, HeadPose::Frontal, cfg).has_value());
    }
    SUBCASE("score is the mean confidence") {
        FaceJointSet fjs{Joint::absent(), Joint::at(0, 0, 0.4), Joint::at(10, 0, 0.8),
                         Joint::absent(), Joint::absent()};
        const auto det = build_face_box(fjs, HeadPose::Frontal, cfg);
        REQUIRE(det.has_value());
        CHECK(det->score == doctest::Approx(0.6).epsilon(1e-12));
    }
}

TEST_CASE("size_gate default bounds are inclusive") {
    const BfdConfig cfg;
    auto det_with_side = [](double side) {
        return FaceDetection{BoundingBox(0, 0, side, side), 0.9, HeadPose::Frontal, "p"};
    };
    CHECK(size_gate(det_with_side(100), cfg).has_value());
    CHECK(size_gate(det_with_side(90), cfg).has_value());
    CHECK(size_gate(det_with_side(500), cfg).has_value());
    CHECK_FALSE(size_gate(det_with_side(89), cfg).has_value());
    CHECK_FALSE(size_gate(det_with_side(80), cfg).has_value());
    CHECK_FALSE(size_gate(det_with_side(501), cfg).has_value());
    CHECK_FALSE(size_gate(det_with_side(600), cfg).has_value());
    // the gate measures the longest side of ingested non-square boxes
    CHECK_FALSE(
        size_gate(FaceDetection{BoundingBox(0, 0, 40, 600), 0.9, HeadPose::Frontal, "p"}, cfg)
            .has_value());
}

TEST_CASE("detect_faces composition") {
    const BfdConfig cfg;
    SUBCASE("empty input, empty output") {
        CHECK(detect_faces({}, cfg).empty());
    }
    SUBCASE("one frontal person inside the gate") {
        auto p = pose_with_face(Joint::at(100, 60, 0.9), Joint::at(120, 40, 0.9),
                                Joint::at(80, 40, 0.9), Joint::at(135, 45, 0.9),
                                Joint::at(65, 45, 0.9));
        // spread 70 -> side 175, inside [90, 500]
        const auto dets = detect_faces(std::vector{p}, cfg);
        REQUIRE(dets.size() == 1);
        CHECK(dets[0].pose == HeadPose::Frontal);
        CHECK(dets[0].source_person == "t");
    }
    SUBCASE("back-of-head person contributes nothing, order follows input") {
        auto frontal = pose_with_face(Joint::at(100, 60, 0.9), Joint::at(120, 40, 0.9),
                                      Joint::at(80, 40, 0.9), Joint::at(135, 45, 0.9),
                                      Joint::at(65, 45, 0.9));
        frontal.person_id = "front";
        auto back = pose_with_face(Joint::absent(), Joint::absent(), Joint::absent(),
                                   Joint::at(10, 10, 0.9), Joint::at(30, 10, 0.9));
        back.person_id = "back";
        const auto dets = detect_faces(std::vector{back, frontal}, cfg);
        REQUIRE(dets.size() == 1);
        CHECK(dets[0].source_person == "front");
    }
}

TEST_CASE("detect_faces properties over random poses") {
    BfdConfig cfg;
    Rng rng(2024);

    SUBCASE("per-person independence and output count bound") {
        std::vector<PersonPose> a, b;
        for (int i = 0; i < 40; ++i)
            a.push_back(random_pose(rng));
        for (int i = 0; i < 40; ++i)
            b.push_back(random_pose(rng));
        std::vector<PersonPose> both = a;
        both.insert(both.end(), b.begin(), b.end());
        const auto da = detect_faces(a, cfg);
        const auto db = detect_faces(b, cfg);
        const auto dboth = detect_faces(both, cfg);
        CHECK(dboth.size() == da.size() + db.size());
        CHECK(dboth.size() <= both.size());
        for (std::size_t i = 0; i < da.size(); ++i)
            CHECK(dboth[i].box == da[i].box);
        for (std::size_t i = 0; i < db.size(); ++i)
            CHECK(dboth[da.size() + i].box == db[i].box);
    }

    SUBCASE("translation equivariance") {
        for (int i = 0; i < 200; ++i) {
            const PersonPose p = random_pose(rng);
            const double dx = rng.uniform(-500, 500), dy = rng.uniform(-500, 500);
            const auto base = detect_faces(std::vector{p}, cfg);
            const auto moved = detect_faces(std::vector{translated(p, dx, dy)}, cfg);
            REQUIRE(base.size() == moved.size());
            if (!base.empty()) {
                CHECK(moved[0].box.x == doctest::Approx(base[0].box.x + dx).epsilon(1e-9));
                CHECK(moved[0].box.y == doctest::Approx(base[0].box.y + dy).epsilon(1e-9));
                CHECK(moved[0].box.w == doctest::Approx(base[0].box.w).epsilon(1e-9));
                CHECK(moved[0].pose == base[0].pose);
                CHECK(moved[0].score == base[0].score);
            }
        }
    }

    SUBCASE("threshold monotonicity: joints and detections only disappear") {
        for (int i = 0; i < 200; ++i) {
            const PersonPose p = random_pose(rng);
            int prev_joints = 6;
            bool prev_detected = true;
            for (int t = 0; t <= 10; ++t) {
                cfg.joint_confidence_threshold = t / 10.0;
                const int joints = filter_face_joints(p, cfg).present_count();
                const bool detected = !detect_faces(std::vector{p}, cfg).empty();
                CHECK(joints <= prev_joints);
                if (detected)
                    CHECK(prev_detected);
                prev_joints = joints;
                prev_detected = detected;
            }
            cfg.joint_confidence_threshold = 0.3;
        }
    }

    SUBCASE("determinism: identical runs agree bitwise") {
        std::vector<PersonPose> people;
        for (int i = 0; i < 30; ++i)
            people.push_back(random_pose(rng));
        const auto first = detect_faces(people, cfg);
        const auto second = detect_faces(people, cfg);
        REQUIRE(first.size() == second.size());
        for (std::size_t i = 0; i < first.size(); ++i) {
            CHECK(first[i].box == second[i].box);
            CHECK(first[i].score == second[i].score);
        }
    }
}

TEST_CASE("scale about the centroid scales the box side linearly") {
    Rng rng(5);
    const BfdConfig cfg{0.3, 1e-9, 1e12, 2.5, 0.4}; // gate neutral, geometry in focus
    for (int i = 0; i < 200; ++i) {
        PersonPose p = random_pose(rng, 1.0);
        const auto base = detect_faces(std::vector{p}, cfg);
        if (base.empty())
            continue;
        double cx = 0, cy = 0;
        int n = 0;
        for (std::size_t k : kFaceJointIndices)
            if (p.joints[k].present) {
                cx += p.joints[k].location.x;
                cy += p.joints[k].location.y;
                ++n;
            }
        cx /= n;
        cy /= n;
        const double k_factor = rng.uniform(0.2, 5.0);
        PersonPose scaled = p;
        for (Joint& j : scaled.joints)
            if (j.present) {
                j.location.x = cx + (j.location.x - cx) * k_factor;
                j.location.y = cy + (j.location.y - cy) * k_factor;
            }
        const auto after = detect_faces(std::vector{scaled}, cfg);
        REQUIRE(after.size() == base.size());
        CHECK(after[0].box.w ==
              doctest::Approx(base[0].box.w * k_factor).epsilon(1e-9));
        CHECK(after[0].pose == base[0].pose);
    }
}

TEST_CASE("size gate can flip a too-large face into range as the threshold rises") {
    // Documented edge: with a spread wider than box_max / alpha, raising the
    // confidence threshold can shrink the box into the gate, so none ->
    // detection. The monotonicity guarantee assumes spreads within the gate.
    BfdConfig cfg;
    auto p = pose_with_face(Joint::at(0, 0, 0.9), Joint::at(300, 0, 0.2), Joint::at(10, 5, 0.9),
                            Joint::absent(), Joint::absent());
    cfg.joint_confidence_threshold = 0.1; // spread 300 -> side 750 > 500: deleted
    CHECK(detect_faces(std::vector{p}, cfg).empty());
    cfg.joint_confidence_threshold = 0.5; // far eye dropped, spread ~11 -> side ~28 < 90
    CHECK(detect_faces(std::vector{p}, cfg).empty());
    cfg.box_min = 20; // ...which the gate would accept with a lower floor
    CHECK(detect_faces(std::vector{p}, cfg).size() == 1);
}
