// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#include "bfdkit/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bfdkit {

std::vector<ScoredBox> to_scored(std::span<const FaceDetection> dets) {
    std::vector<ScoredBox> out;
    out.reserve(dets.size());
    for (const FaceDetection& d : dets)
        out.push_back(to_scored(d));
    return out;
}

namespace {

void validate_gts(std::span<const GroundTruthFace> gts) {
    std::set<std::string> seen;
    for (const GroundTruthFace& gt : gts) {
        if (gt.image_id != gts.front().image_id)
            throw std::invalid_argument("match_image: ground truths mix image_ids ('" +
                                        gts.front().image_id + "' vs '" + gt.image_id + "')");
        if (!seen.insert(gt.face_id).second)
            throw std::invalid_argument("match_image: duplicate face_id '" + gt.face_id +
                                        "' in image '" + gt.image_id + "'");
    }
}

void validate_scores(std::span<const ScoredBox> dets) {
    for (const ScoredBox& d : dets)
        if (!std::isfinite(d.score))
            throw std::invalid_argument("match_image: non-finite detection score");
}

// Greedy core: detections visited in the order given; fills, for each
// detection, the index of the ground truth it claims (or npos). Callers fix
// the visiting order.
constexpr std::size_t npos = std::size_t(-1);

std::vector<std::size_t> greedy_assign(std::span<const ScoredBox> dets,
                                       std::span<const GroundTruthFace> gts, double iou_min,
                                       std::span<const std::size_t> order) {
    std::vector<std::size_t> claimed(dets.size(), npos);
    std::vector<bool> taken(gts.size(), false);
    for (std::size_t di : order) {
        std::size_t best = npos;
        double best_iou = 0.0;
        for (std::size_t gi = 0; gi < gts.size(); ++gi) {
            if (taken[gi])
                continue;
            const double v = iou(dets[di].box, gts[gi].box);
            if (v < iou_min)
                continue;
            if (best == npos || v > best_iou ||
                (v == best_iou && gts[gi].face_id < gts[best].face_id)) {
                best = gi;
                best_iou = v;
            }
        }
        if (best != npos) {
            taken[best] = true;
            claimed[di] = best;
        }
    }
    return claimed;
}

std::vector<std::size_t> score_order(std::span<const ScoredBox> dets) {
    std::vector<std::size_t> order(dets.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dets[a].score > dets[b].score; });
    return order;
}

} // namespace

MatchReport match_image(std::span<const ScoredBox> dets, std::span<const GroundTruthFace> gts,
                        double iou_min) {
    validate_scores(dets);
    if (!gts.empty())
        validate_gts(gts);

    MatchReport report;
    report.image_id = gts.empty() ? std::string{} : gts.front().image_id;

    const auto order = score_order(dets);
    const auto claimed = greedy_assign(dets, gts, iou_min, order);
    for (std::size_t di : order) {
        if (claimed[di] == npos)
            continue;
        const GroundTruthFace& gt = gts[claimed[di]];
        report.assignments.push_back({di, gt.face_id, iou(dets[di].box, gt.box)});
    }
    report.true_positives = report.assignments.size();
    report.false_positives = dets.size() - report.true_positives;
    report.false_negatives = gts.size() - report.true_positives;
    return report;
}

std::size_t optimal_match_count(std::span<const ScoredBox> dets,
                                std::span<const GroundTruthFace> gts, double iou_min) {
    const std::size_t n = dets.size(), m = gts.size();
    if (n > 12 || m > 12)
        throw std::invalid_argument("optimal_match_count: exhaustive search capped at 12x12");
    if (!gts.empty())
        validate_gts(gts);

    std::vector<unsigned> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (iou(dets[i].box, gts[j].box) >= iou_min)
                adj[i] |= 1u << j;

    const std::size_t masks = std::size_t(1) << m;
    std::vector<std::int8_t> memo(std::max<std::size_t>(1, n) * masks, -1);
    auto solve = [&](auto&& self, std::size_t i, unsigned used) -> int {
        if (i == n)
            return 0;
        std::int8_t& slot = memo[i * masks + used];
        if (slot >= 0)
            return slot;
        int best = self(self, i + 1, used); // leave detection i unmatched
        for (unsigned avail = adj[i] & ~used; avail; avail &= avail - 1) {
            const unsigned bit = avail & (0u - avail);
            best = std::max(best, 1 + self(self, i + 1, used | bit));
        }
        slot = std::int8_t(best);
        return best;
    };
    return std::size_t(solve(solve, 0, 0));
}

namespace {

struct SweepInputs {
    std::size_t gt_total = 0;
    std::size_t image_count = 0;
};

SweepInputs validate_sweep(const DetectionsByImage& dets, const GroundTruthByImage& gts) {
    SweepInputs in;
    in.image_count = gts.size();
    for (const auto& [image_id, faces] : gts) {
        in.gt_total += faces.size();
        for (const GroundTruthFace& gt : faces)
            if (gt.image_id != image_id)
                throw std::invalid_argument("threshold_sweep: ground truth for '" + gt.image_id +
                                            "' filed under image '" + image_id + "'");
    }
    if (in.gt_total == 0)
        throw std::invalid_argument("threshold_sweep: no ground truth at all");

    std::string offenders;
    for (const auto& [image_id, boxes] : dets) {
        (void)boxes;
        if (!gts.contains(image_id))
            offenders += (offenders.empty() ? "" : ", ") + image_id;
    }
    if (!offenders.empty())
        throw std::invalid_argument("threshold_sweep: detections reference image_ids without "
                                    "ground truth entries: " + offenders);
    return in;
}

// Canonical per-image order: score descending, then box fields ascending.
// Makes sweeps independent of the input permutation even with tied scores.
std::vector<ScoredBox> canonical_sort(std::vector<ScoredBox> v) {
    std::sort(v.begin(), v.end(), [](const ScoredBox& a, const ScoredBox& b) {
        if (a.score != b.score)
            return a.score > b.score;
        if (a.box.x != b.box.x)
            return a.box.x < b.box.x;
        if (a.box.y != b.box.y)
            return a.box.y < b.box.y;
        if (a.box.w != b.box.w)
            return a.box.w < b.box.w;
        return a.box.h < b.box.h;
    });
    return v;
}

} // namespace

std::vector<SweepPoint> threshold_sweep(const DetectionsByImage& dets,
                                        const GroundTruthByImage& gts, double iou_min) {
    validate_sweep(dets, gts);

    // Greedy visits detections in score order, so which ground truth a
    // detection claims does not depend on the threshold: lowering it only
    // appends to the processed list. One pass per image settles every
    // detection's TP/FP fate for the whole sweep.
    std::vector<std::pair<double, bool>> fates; // (score, is_tp)
    for (const auto& [image_id, boxes] : dets) {
        validate_scores(boxes);
        const auto sorted = canonical_sort(boxes);
        auto git = gts.find(image_id);
        std::span<const GroundTruthFace> faces =
            git == gts.end() ? std::span<const GroundTruthFace>{} : std::span(git->second);
        std::vector<std::size_t> order(sorted.size());
        std::iota(order.begin(), order.end(), 0);
        const auto claimed = greedy_assign(sorted, faces, iou_min, order);
        for (std::size_t i = 0; i < sorted.size(); ++i)
            fates.emplace_back(sorted[i].score, claimed[i] != npos);
    }

    std::sort(fates.begin(), fates.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<SweepPoint> points;
    points.push_back({std::numeric_limits<double>::infinity(), 0, 0});
    std::size_t tp = 0, fp = 0;
    for (std::size_t i = 0; i < fates.size();) {
        const double score = fates[i].first;
        for (; i < fates.size() && fates[i].first == score; ++i)
            (fates[i].second ? tp : fp) += 1;
        points.push_back({score, tp, fp});
    }
    return points;
}

double trapezoid_auc(std::span<const CurvePoint> pts, double x_cap) {
    double area = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        double x0 = pts[i - 1].x, y0 = pts[i - 1].y;
        double x1 = pts[i].x, y1 = pts[i].y;
        if (x0 >= x_cap)
            break;
        if (x1 > x_cap) {
            y1 = y0 + (y1 - y0) * (x_cap - x0) / (x1 - x0);
            x1 = x_cap;
        }
        area += (x1 - x0) * (y0 + y1) / 2.0;
    }
    return area;
}

CurveSeries froc_curve(const DetectionsByImage& dets, const GroundTruthByImage& gts,
                       double iou_min, CurveXAxis x_axis, double fp_cap_total) {
    if (x_axis == CurveXAxis::Recall)
        throw std::invalid_argument("froc_curve: recall is not a FROC x axis");
    const SweepInputs in = validate_sweep(dets, gts);
    const auto sweep = threshold_sweep(dets, gts, iou_min);

    const double x_div =
        x_axis == CurveXAxis::FalsePositivesPerImage ? double(in.image_count) : 1.0;
    CurveSeries series{CurveKind::Froc, x_axis, {}, 0.0};
    series.points.reserve(sweep.size());
    for (const SweepPoint& p : sweep)
        series.points.push_back({double(p.fp) / x_div, double(p.tp) / double(in.gt_total)});
    series.auc = trapezoid_auc(series.points, fp_cap_total / x_div);
    return series;
}

CurveSeries pr_curve(const DetectionsByImage& dets, const GroundTruthByImage& gts,
                     double iou_min) {
    const SweepInputs in = validate_sweep(dets, gts);
    const auto sweep = threshold_sweep(dets, gts, iou_min);

    CurveSeries series{CurveKind::Pr, CurveXAxis::Recall, {}, 0.0};
    series.points.reserve(sweep.size());
    for (const SweepPoint& p : sweep) {
        const std::size_t kept = p.tp + p.fp;
        const double precision = kept == 0 ? 1.0 : double(p.tp) / double(kept);
        series.points.push_back({double(p.tp) / double(in.gt_total), precision});
    }
    series.auc = trapezoid_auc(series.points, std::numeric_limits<double>::infinity());
    return series;
}

std::vector<SummaryRow> summary_table(std::span<const MethodTotals> totals, std::size_t gt_total) {
    if (gt_total == 0)
        throw std::invalid_argument("summary_table: gt_total must be positive");
    std::vector<SummaryRow> rows;
    rows.reserve(totals.size());
    for (const MethodTotals& t : totals)
        rows.push_back({t.method, t.detected, t.false_alarm,
                        double(t.detected) / double(gt_total)});
    return rows;
}

std::string format_accuracy(std::size_t detected, std::size_t gt_total) {
    if (gt_total == 0)
        throw std::invalid_argument("format_accuracy: gt_total must be positive");
    // Exact truncation to 3 decimals; floating-point rounding must not leak
    // into published-style tables.
    const std::size_t millis = detected * 1000 / gt_total;
    std::ostringstream os;
    os << millis / 1000 << '.';
    const std::size_t frac = millis % 1000;
    os << char('0' + frac / 100) << char('0' + frac / 10 % 10) << char('0' + frac % 10);
    return os.str();
}

std::string format_summary_table(std::span<const SummaryRow> rows, std::size_t gt_total) {
    std::size_t method_w = 6; // "Method"
    for (const SummaryRow& r : rows)
        method_w = std::max(method_w, r.method.size());

    std::ostringstream os;
    os << std::left;
    os.width(std::streamsize(method_w));
    os << "Method";
    os << "  " << std::right;
    os.width(10);
    os << "Detected";
    os.width(13);
    os << "False Alarm";
    os.width(10);
    os << "Accuracy";
    os << '\n';
    for (const SummaryRow& r : rows) {
        os << std::left;
        os.width(std::streamsize(method_w));
        os << r.method;
        os << "  " << std::right;
        os.width(10);
        os << r.detected;
        os.width(13);
        os << r.false_alarm;
        os.width(10);
        os << format_accuracy(r.detected, gt_total);
        os << '\n';
    }
    return os.str();
}

} // namespace bfdkit
