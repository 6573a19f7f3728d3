// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bfdkit/eval.hpp"
#include "bfdkit/geometry.hpp"
#include "bfdkit/pose.hpp"
#include "bfdkit/skin.hpp"
#include "bfdkit/synth.hpp"

namespace bfdkit {

/// Parse failure with enough location to find the bad input: file (when
/// known), line or JSON path, and what was wrong. Parsers reject, they never
/// repair.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string location, const std::string& message)
        : std::runtime_error(location + ": " + message), location_(std::move(location)) {}

    [[nodiscard]] const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

// ---------------------------------------------------------------------------
// Keypoint documents: one JSON file per image, named <image_id>.keypoints.
//   {"version": 1.0, "people": [{"pose_keypoints_2d": [x,y,c, ...]}, ...]}
// 54 numbers per person (x, y, confidence for each of the 18 joints in the
// Keypoint index order); an all-zero (0,0,0) triple is an undetected joint.
// Any version with floor(version) == 1 is accepted, matching common pose
// estimator dumps. person_id is assigned as <image_id>#<index>.
// ---------------------------------------------------------------------------

[[nodiscard]] std::vector<PersonPose> parse_keypoints(const std::string& text,
                                                      const std::string& image_id);
[[nodiscard]] std::string write_keypoints(std::span<const PersonPose> people);

// ---------------------------------------------------------------------------
// Ground truth CSV: header image_id,face_id,x,y,w,h (UTF-8, LF).
// ---------------------------------------------------------------------------

[[nodiscard]] std::vector<GroundTruthFace> parse_ground_truth(const std::string& text);
[[nodiscard]] std::string write_ground_truth(std::span<const GroundTruthFace> faces);

// ---------------------------------------------------------------------------
// Detections CSV: header image_id,x,y,w,h,score; file named <method>.det.csv.
// ---------------------------------------------------------------------------

struct DetectionRow {
    std::string image_id;
    BoundingBox box;
    double score;

    friend bool operator==(const DetectionRow& a, const DetectionRow& b) {
        return a.image_id == b.image_id && a.box == b.box && a.score == b.score;
    }
};

struct DetectionFile {
    std::string method;
    std::vector<DetectionRow> rows;

    friend bool operator==(const DetectionFile& a, const DetectionFile& b) {
        return a.method == b.method && a.rows == b.rows;
    }
};

[[nodiscard]] DetectionFile parse_detections(const std::string& text, const std::string& method);
[[nodiscard]] std::string write_detections(const DetectionFile& file);
/// "BFD.det.csv" -> "BFD"; error when the name does not end in ".det.csv".
[[nodiscard]] std::string method_from_filename(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Curve CSV: header x,y; one row per point; footer "# auc=<value>".
// Kind and x-axis ride on the filename (<method>.<froc|pr>.curve.csv).
// ---------------------------------------------------------------------------

[[nodiscard]] std::string write_curve_csv(const CurveSeries& series);
[[nodiscard]] CurveSeries parse_curve_csv(const std::string& text, CurveKind kind,
                                          CurveXAxis x_axis);

// ---------------------------------------------------------------------------
// Skin model file (text, line-oriented):
//   bfdkit-skin-model v1
//   bins <n>
//   threshold <t>
//   trained_on <count>
//   <n lines of n space-separated weights, row r of the (r,g) grid>
// Doubles are written in shortest round-trip form; the file is byte-stable.
// ---------------------------------------------------------------------------

[[nodiscard]] std::string write_skin_model(const SkinModel& model);
[[nodiscard]] SkinModel parse_skin_model(const std::string& text);

// ---------------------------------------------------------------------------
// PPM (P6, maxval 255) raster I/O, the lossless lowest common denominator.
// ---------------------------------------------------------------------------

[[nodiscard]] ImagePatch parse_ppm(const std::string& bytes);
[[nodiscard]] std::string write_ppm(const ImagePatch& image);

// ---------------------------------------------------------------------------
// SVG curve plots: fixed layout, fixed palette, no timestamps; output is a
// pure function of the input so golden files stay byte-stable. Legend
// entries read "<name> (<auc to 2 decimals>)".
// ---------------------------------------------------------------------------

struct NamedCurve {
    std::string name;
    CurveSeries series;
};

[[nodiscard]] std::string emit_plot(std::span<const NamedCurve> curves);

// ---------------------------------------------------------------------------
// Dataset assembly (directory-level convenience used by the CLI).
// ---------------------------------------------------------------------------

struct ImageEntry {
    std::string image_id;
    ImageSize size{5184, 3456}; // long-lens surveillance default
    std::optional<std::filesystem::path> file; // raster, when available
};

struct Dataset {
    std::vector<ImageEntry> images;
    std::vector<GroundTruthFace> ground_truth;
    std::vector<std::pair<std::string, PersonPose>> poses;
};

/// All *.keypoints files of a directory (or a single file), image ids from
/// file stems, sorted by image id.
[[nodiscard]] std::vector<std::pair<std::string, std::vector<PersonPose>>>
load_keypoints(const std::filesystem::path& path);

[[nodiscard]] std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

} // namespace bfdkit
