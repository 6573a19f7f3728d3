// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "bfdkit/bfd.hpp"
#include "bfdkit/eval.hpp"
#include "bfdkit/geometry.hpp"
#include "bfdkit/io_formats.hpp"
#include "bfdkit/pose.hpp"
#include "bfdkit/rng.hpp"
#include "bfdkit/skin.hpp"
#include "bfdkit/synth.hpp"

namespace py = pybind11;
using namespace bfdkit;

PYBIND11_MODULE(_bfdkit, m) {
    m.doc() = "Body-pose based face detection and detection evaluation toolkit";

    // geometry
    py::class_<Point2D>(m, "Point2D")
        .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
        .def_readwrite("x", &Point2D::x)
        .def_readwrite("y", &Point2D::y)
        .def("__repr__", [](const Point2D& p) {
            return "Point2D(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });
    m.def("distance", &distance, py::arg("a"), py::arg("b"));

    py::class_<BoundingBox>(m, "BoundingBox")
        .def(py::init<double, double, double, double>(), py::arg("x"), py::arg("y"),
             py::arg("w"), py::arg("h"))
        .def_readwrite("x", &BoundingBox::x)
        .def_readwrite("y", &BoundingBox::y)
        .def_readwrite("w", &BoundingBox::w)
        .def_readwrite("h", &BoundingBox::h)
        .def("area", &BoundingBox::area)
        .def("side", &BoundingBox::side)
        .def(py::self == py::self)
        .def("__repr__", [](const BoundingBox& b) {
            return "BoundingBox(" + std::to_string(b.x) + ", " + std::to_string(b.y) + ", " +
                   std::to_string(b.w) + ", " + std::to_string(b.h) + ")";
        });

    py::class_<ImageSize>(m, "ImageSize")
        .def(py::init<int, int>(), py::arg("width"), py::arg("height"))
        .def_readwrite("width", &ImageSize::width)
        .def_readwrite("height", &ImageSize::height);

    m.def("iou", &iou, py::arg("a"), py::arg("b"));
    m.def("clamp_box", &clamp_box, py::arg("box"), py::arg("image_size"));

    // pose
    py::class_<Joint>(m, "Joint")
        .def(py::init<>())
        .def_static("absent", &Joint::absent)
        .def_static("at", &Joint::at, py::arg("x"), py::arg("y"), py::arg("confidence"))
        .def_readwrite("location", &Joint::location)
        .def_readwrite("confidence", &Joint::confidence)
        .def_readwrite("present", &Joint::present);

    py::class_<PersonPose>(m, "PersonPose")
        .def(py::init<>())
        .def_readwrite("joints", &PersonPose::joints)
        .def_readwrite("person_id", &PersonPose::person_id);

    // bfd
    py::enum_<HeadPose>(m, "HeadPose")
        .value("Frontal", HeadPose::Frontal)
        .value("LeftProfile", HeadPose::LeftProfile)
        .value("RightProfile", HeadPose::RightProfile)
        .value("BackOfHead", HeadPose::BackOfHead)
        .value("Indeterminate", HeadPose::Indeterminate);

    py::class_<FaceJointSet>(m, "FaceJointSet")
        .def(py::init<>())
        .def_readwrite("nose", &FaceJointSet::nose)
        .def_readwrite("left_eye", &FaceJointSet::left_eye)
        .def_readwrite("right_eye", &FaceJointSet::right_eye)
        .def_readwrite("left_ear", &FaceJointSet::left_ear)
        .def_readwrite("right_ear", &FaceJointSet::right_ear)
        .def("present_count", &FaceJointSet::present_count);

    py::class_<FaceDetection>(m, "FaceDetection")
        .def(py::init<BoundingBox, double, HeadPose, std::string>(), py::arg("box"),
             py::arg("score"), py::arg("pose") = HeadPose::Indeterminate,
             py::arg("source_person") = std::string{})
        .def_readwrite("box", &FaceDetection::box)
        .def_readwrite("score", &FaceDetection::score)
        .def_readwrite("pose", &FaceDetection::pose)
        .def_readwrite("source_person", &FaceDetection::source_person);

    py::class_<BfdConfig>(m, "BfdConfig")
        .def(py::init<>())
        .def_readwrite("joint_confidence_threshold", &BfdConfig::joint_confidence_threshold)
        .def_readwrite("box_min", &BfdConfig::box_min)
        .def_readwrite("box_max", &BfdConfig::box_max)
        .def_readwrite("box_scale_alpha", &BfdConfig::box_scale_alpha)
        .def_readwrite("frontal_asymmetry_max", &BfdConfig::frontal_asymmetry_max)
        .def("validate", &BfdConfig::validate);

    m.def("filter_face_joints", &filter_face_joints, py::arg("pose"),
          py::arg("config") = BfdConfig{});
    m.def("classify_head_pose", &classify_head_pose, py::arg("face_joints"),
          py::arg("config") = BfdConfig{});
    m.def("build_face_box", &build_face_box, py::arg("face_joints"), py::arg("pose"),
          py::arg("config") = BfdConfig{}, py::arg("person_id") = std::string{});
    m.def("size_gate", &size_gate, py::arg("detection"), py::arg("config") = BfdConfig{});
    m.def(
        "detect_faces",
        [](const std::vector<PersonPose>& poses, const BfdConfig& cfg) {
            return detect_faces(poses, cfg);
        },
        py::arg("poses"), py::arg("config") = BfdConfig{});

    // skin
    py::class_<ImagePatch>(m, "ImagePatch")
        .def(py::init<int, int>(), py::arg("width"), py::arg("height"))
        .def_readwrite("width", &ImagePatch::width)
        .def_readwrite("height", &ImagePatch::height)
        .def_readwrite("rgb", &ImagePatch::rgb)
        .def("fill", &ImagePatch::fill, py::arg("r"), py::arg("g"), py::arg("b"))
        .def("set_pixel", [](ImagePatch& p, int x, int y, int r, int g, int b) {
            if (x < 0 || y < 0 || x >= p.width || y >= p.height)
                throw std::out_of_range("pixel outside patch");
            auto* px = p.pixel(x, y);
            px[0] = std::uint8_t(r);
            px[1] = std::uint8_t(g);
            px[2] = std::uint8_t(b);
        });

    py::class_<ChromaHistogram>(m, "ChromaHistogram")
        .def(py::init<int>(), py::arg("bins_per_axis") = 32)
        .def_readwrite("bins_per_axis", &ChromaHistogram::bins_per_axis)
        .def_readwrite("weights", &ChromaHistogram::weights)
        .def("sum", &ChromaHistogram::sum)
        .def("normalized", &ChromaHistogram::normalized, py::arg("tolerance") = 1e-9);

    py::class_<SkinModel>(m, "SkinModel")
        .def(py::init<>())
        .def_readwrite("reference", &SkinModel::reference)
        .def_readwrite("distance_threshold", &SkinModel::distance_threshold)
        .def_readwrite("trained_on", &SkinModel::trained_on);

    m.def("chroma_histogram", &chroma_histogram, py::arg("patch"), py::arg("bins_per_axis") = 32);
    m.def("hellinger_distance", &hellinger_distance, py::arg("a"), py::arg("b"));
    m.def(
        "train_skin_model",
        [](const std::vector<ImagePatch>& crops, double threshold, int bins) {
            return train_skin_model(crops, threshold, bins);
        },
        py::arg("crops"), py::arg("distance_threshold") = 0.6, py::arg("bins_per_axis") = 32);
    m.def("crop", &crop, py::arg("image"), py::arg("box"));
    m.def("skin_gate", &skin_gate, py::arg("detection"), py::arg("image"), py::arg("model"));

    // eval
    py::class_<GroundTruthFace>(m, "GroundTruthFace")
        .def(py::init<BoundingBox, std::string, std::string>(), py::arg("box"),
             py::arg("image_id"), py::arg("face_id"))
        .def_readwrite("box", &GroundTruthFace::box)
        .def_readwrite("image_id", &GroundTruthFace::image_id)
        .def_readwrite("face_id", &GroundTruthFace::face_id);

    py::class_<ScoredBox>(m, "ScoredBox")
        .def(py::init<BoundingBox, double>(), py::arg("box"), py::arg("score"))
        .def_readwrite("box", &ScoredBox::box)
        .def_readwrite("score", &ScoredBox::score);

    py::class_<Assignment>(m, "Assignment")
        .def_readonly("det_index", &Assignment::det_index)
        .def_readonly("face_id", &Assignment::face_id)
        .def_readonly("iou", &Assignment::iou);

    py::class_<MatchReport>(m, "MatchReport")
        .def_readonly("image_id", &MatchReport::image_id)
        .def_readonly("true_positives", &MatchReport::true_positives)
        .def_readonly("false_positives", &MatchReport::false_positives)
        .def_readonly("false_negatives", &MatchReport::false_negatives)
        .def_readonly("assignments", &MatchReport::assignments);

    m.def(
        "match_image",
        [](const std::vector<ScoredBox>& dets, const std::vector<GroundTruthFace>& gts,
           double iou_min) { return match_image(dets, gts, iou_min); },
        py::arg("detections"), py::arg("ground_truths"), py::arg("iou_min") = 0.5);
    m.def(
        "optimal_match_count",
        [](const std::vector<ScoredBox>& dets, const std::vector<GroundTruthFace>& gts,
           double iou_min) { return optimal_match_count(dets, gts, iou_min); },
        py::arg("detections"), py::arg("ground_truths"), py::arg("iou_min") = 0.5);

    py::enum_<CurveKind>(m, "CurveKind")
        .value("Froc", CurveKind::Froc)
        .value("Pr", CurveKind::Pr);
    py::enum_<CurveXAxis>(m, "CurveXAxis")
        .value("FalsePositivesPerImage", CurveXAxis::FalsePositivesPerImage)
        .value("TotalFalsePositives", CurveXAxis::TotalFalsePositives)
        .value("Recall", CurveXAxis::Recall);

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_readonly("x", &CurvePoint::x)
        .def_readonly("y", &CurvePoint::y)
        .def("__repr__", [](const CurvePoint& p) {
            return "CurvePoint(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });

    py::class_<CurveSeries>(m, "CurveSeries")
        .def_readonly("kind", &CurveSeries::kind)
        .def_readonly("x_axis", &CurveSeries::x_axis)
        .def_readonly("points", &CurveSeries::points)
        .def_readonly("auc", &CurveSeries::auc);

    m.def("froc_curve", &froc_curve, py::arg("detections_by_image"),
          py::arg("ground_truth_by_image"), py::arg("iou_min") = 0.5,
          py::arg("x_axis") = CurveXAxis::FalsePositivesPerImage,
          py::arg("fp_cap_total") = 5000.0);
    m.def("pr_curve", &pr_curve, py::arg("detections_by_image"),
          py::arg("ground_truth_by_image"), py::arg("iou_min") = 0.5);

    py::class_<MethodTotals>(m, "MethodTotals")
        .def(py::init<std::string, std::size_t, std::size_t>(), py::arg("method"),
             py::arg("detected"), py::arg("false_alarm"))
        .def_readwrite("method", &MethodTotals::method)
        .def_readwrite("detected", &MethodTotals::detected)
        .def_readwrite("false_alarm", &MethodTotals::false_alarm);

    py::class_<SummaryRow>(m, "SummaryRow")
        .def_readonly("method", &SummaryRow::method)
        .def_readonly("detected", &SummaryRow::detected)
        .def_readonly("false_alarm", &SummaryRow::false_alarm)
        .def_readonly("accuracy", &SummaryRow::accuracy);

    m.def(
        "summary_table",
        [](const std::vector<MethodTotals>& totals, std::size_t gt_total) {
            return summary_table(totals, gt_total);
        },
        py::arg("totals"), py::arg("gt_total"));
    m.def("format_accuracy", &format_accuracy, py::arg("detected"), py::arg("gt_total"));

    // synth
    py::class_<HeadPoseMix>(m, "HeadPoseMix")
        .def(py::init<>())
        .def_readwrite("frontal", &HeadPoseMix::frontal)
        .def_readwrite("left_profile", &HeadPoseMix::left_profile)
        .def_readwrite("right_profile", &HeadPoseMix::right_profile)
        .def_readwrite("back_of_head", &HeadPoseMix::back_of_head)
        .def_readwrite("indeterminate", &HeadPoseMix::indeterminate);

    py::class_<SceneSpec>(m, "SceneSpec")
        .def(py::init<>())
        .def_readwrite("image_size", &SceneSpec::image_size)
        .def_readwrite("person_count", &SceneSpec::person_count)
        .def_readwrite("head_pose_mix", &SceneSpec::head_pose_mix)
        .def_readwrite("occlusion_rate", &SceneSpec::occlusion_rate)
        .def_readwrite("jitter_sigma", &SceneSpec::jitter_sigma)
        .def_readwrite("seed", &SceneSpec::seed);

    py::class_<Scene>(m, "Scene")
        .def_readonly("poses", &Scene::poses)
        .def_readonly("ground_truth", &Scene::ground_truth);

    py::class_<SyntheticDataset>(m, "SyntheticDataset")
        .def_readonly("image_ids", &SyntheticDataset::image_ids)
        .def_readonly("scenes", &SyntheticDataset::scenes);

    m.def("generate_scene", &generate_scene, py::arg("spec"),
          py::arg("image_id") = std::string("scene"));
    m.def("generate_dataset", &generate_dataset, py::arg("spec"), py::arg("image_count"));

    // io
    m.def("parse_keypoints", &parse_keypoints, py::arg("text"), py::arg("image_id"));
    m.def(
        "write_keypoints",
        [](const std::vector<PersonPose>& people) { return write_keypoints(people); },
        py::arg("people"));
    m.def("parse_ground_truth", &parse_ground_truth, py::arg("text"));
    m.def(
        "write_ground_truth",
        [](const std::vector<GroundTruthFace>& faces) { return write_ground_truth(faces); },
        py::arg("faces"));

    py::class_<DetectionRow>(m, "DetectionRow")
        .def(py::init<std::string, BoundingBox, double>(), py::arg("image_id"), py::arg("box"),
             py::arg("score"))
        .def_readwrite("image_id", &DetectionRow::image_id)
        .def_readwrite("box", &DetectionRow::box)
        .def_readwrite("score", &DetectionRow::score);

    py::class_<DetectionFile>(m, "DetectionFile")
        .def(py::init<std::string, std::vector<DetectionRow>>(), py::arg("method"),
             py::arg("rows") = std::vector<DetectionRow>{})
        .def_readwrite("method", &DetectionFile::method)
        .def_readwrite("rows", &DetectionFile::rows);

    m.def("parse_detections", &parse_detections, py::arg("text"), py::arg("method"));
    m.def("write_detections", &write_detections, py::arg("file"));
    m.def("write_curve_csv", &write_curve_csv, py::arg("series"));
    m.def("parse_curve_csv", &parse_curve_csv, py::arg("text"), py::arg("kind"),
          py::arg("x_axis"));
    m.def("write_skin_model", &write_skin_model, py::arg("model"));
    m.def("parse_skin_model", &parse_skin_model, py::arg("text"));
    m.def("parse_ppm", [](const py::bytes& data) { return parse_ppm(std::string(data)); },
          py::arg("data"));
    m.def("write_ppm", [](const ImagePatch& img) { return py::bytes(write_ppm(img)); },
          py::arg("image"));

    py::class_<NamedCurve>(m, "NamedCurve")
        .def(py::init<std::string, CurveSeries>(), py::arg("name"), py::arg("series"))
        .def_readwrite("name", &NamedCurve::name)
        .def_readwrite("series", &NamedCurve::series);

    m.def(
        "emit_plot",
        [](const std::vector<NamedCurve>& curves) { return emit_plot(curves); },
        py::arg("curves"));
}
