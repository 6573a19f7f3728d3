// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bfdkit/bfd.hpp"
#include "bfdkit/geometry.hpp"

namespace bfdkit {

/// A hand-annotated face region. (image_id, face_id) is unique per dataset.
struct GroundTruthFace {
    BoundingBox box;
    std::string image_id;
    std::string face_id;
};

/// Detector output reduced to what evaluation needs. Any detector's boxes
/// can be scored, not just the keypoint pipeline's.
struct ScoredBox {
    BoundingBox box;
    double score; // in [0, 1]
};

[[nodiscard]] inline ScoredBox to_scored(const FaceDetection& d) { return {d.box, d.score}; }
[[nodiscard]] std::vector<ScoredBox> to_scored(std::span<const FaceDetection> dets);

struct Assignment {
    std::size_t det_index; // index into the detection list as passed in
    std::string face_id;
    double iou;
};

/// Per-image true/false positive assignment at one score threshold.
struct MatchReport {
    std::string image_id;
    std::size_t true_positives = 0;
    std::size_t false_positives = 0;
    std::size_t false_negatives = 0;
    std::vector<Assignment> assignments;
};

/// Greedy one-to-one matching at a 50%-overlap criterion: detections are
/// visited in descending score (ties by ascending input index) and each takes
/// the unmatched ground truth with the highest IoU >= iou_min (ties by
/// ascending face_id). Leftover detections are false positives, leftover
/// ground truths false negatives. Greedy is the protocol; it is not always
/// the maximum matching (see optimal_match_count).
/// Throws std::invalid_argument when gts mix image_ids or repeat a face_id.
[[nodiscard]] MatchReport match_image(std::span<const ScoredBox> dets,
                                      std::span<const GroundTruthFace> gts, double iou_min = 0.5);

/// Maximum-cardinality matching in the bipartite IoU >= iou_min graph, by
/// exhaustive search. Test oracle for the greedy protocol; capped at 12x12.
[[nodiscard]] std::size_t optimal_match_count(std::span<const ScoredBox> dets,
                                              std::span<const GroundTruthFace> gts,
                                              double iou_min = 0.5);

using DetectionsByImage = std::map<std::string, std::vector<ScoredBox>>;
using GroundTruthByImage = std::map<std::string, std::vector<GroundTruthFace>>;

enum class CurveKind { Froc, Pr };
enum class CurveXAxis { FalsePositivesPerImage, TotalFalsePositives, Recall };

struct CurvePoint {
    double x;
    double y;
};

/// An ordered set of operating points plus the trapezoid area under them.
struct CurveSeries {
    CurveKind kind;
    CurveXAxis x_axis;
    std::vector<CurvePoint> points;
    double auc = 0.0;
};

/// One operating point of the score sweep: totals over all images with
/// detections of score >= threshold kept.
struct SweepPoint {
    double threshold; // +infinity for the keep-nothing point
    std::size_t tp = 0;
    std::size_t fp = 0;
};

/// Threshold sweep over all distinct score values (plus +infinity).
/// Detections are canonically pre-sorted per image (score descending, then
/// box fields ascending) so the result does not depend on input order.
/// Throws std::invalid_argument when there is no ground truth at all or when
/// detections reference an image_id absent from gts.
[[nodiscard]] std::vector<SweepPoint> threshold_sweep(const DetectionsByImage& dets,
                                                      const GroundTruthByImage& gts,
                                                      double iou_min = 0.5);

/// Trapezoid-rule area under sorted-by-x points, integrated up to x_cap with
/// linear interpolation at the cap.
[[nodiscard]] double trapezoid_auc(std::span<const CurvePoint> points, double x_cap);

/// FROC curve: detection rate (TP / total GT) against false positives, per
/// image or total. The area is taken up to fp_cap_total false positives
/// (converted to per-image units when that axis is selected); the curve is
/// linearly interpolated at the cap.
[[nodiscard]] CurveSeries froc_curve(const DetectionsByImage& dets, const GroundTruthByImage& gts,
                                     double iou_min = 0.5,
                                     CurveXAxis x_axis = CurveXAxis::FalsePositivesPerImage,
                                     double fp_cap_total = 5000.0);

/// Precision-recall curve; precision is 1 by convention when nothing is
/// kept. Area by trapezoid over recall in [0, max recall].
[[nodiscard]] CurveSeries pr_curve(const DetectionsByImage& dets, const GroundTruthByImage& gts,
                                   double iou_min = 0.5);

/// One row of the results table, per method.
struct SummaryRow {
    std::string method;
    std::size_t detected = 0;    // true positives at the operating threshold
    std::size_t false_alarm = 0; // false positives at the operating threshold
    double accuracy = 0.0;       // detected / gt_total, full precision
};

struct MethodTotals {
    std::string method;
    std::size_t detected = 0;
    std::size_t false_alarm = 0;
};

/// Builds summary rows from per-method totals taken at one fixed operating
/// threshold. Throws std::invalid_argument when gt_total is zero.
[[nodiscard]] std::vector<SummaryRow> summary_table(std::span<const MethodTotals> totals,
                                                    std::size_t gt_total);

/// Display form of an accuracy ratio: truncated (not rounded) to 3 decimals,
/// computed in exact integer arithmetic. Matches how published results
/// tables in this area quote the ratio.
[[nodiscard]] std::string format_accuracy(std::size_t detected, std::size_t gt_total);

/// Fixed-width text rendering of the table, header included.
[[nodiscard]] std::string format_summary_table(std::span<const SummaryRow> rows,
                                               std::size_t gt_total);

/// Wall-clock statistics of the keypoints-to-detections stage, file I/O
/// excluded. Times are machine-dependent.
struct BenchReport {
    std::size_t images = 0;
    std::size_t repetitions = 0;
    std::vector<double> per_rep_mean_seconds; // one entry per repetition
    double mean_seconds = 0.0;                // per-image, pooled over reps
    double median_seconds = 0.0;
    double stddev_seconds = 0.0;
};

/// Times detect_faces over every image, `repetitions` passes (>= 3).
/// Throws std::invalid_argument on an empty dataset or too few repetitions.
[[nodiscard]] BenchReport bench_timing(std::span<const std::vector<PersonPose>> poses_by_image,
                                       const BfdConfig& cfg, std::size_t repetitions);

} // namespace bfdkit
