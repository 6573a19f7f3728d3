// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0

#include "bfdkit/io_formats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bfdkit {

namespace {

using nlohmann::json;

// Shortest representation that parses back to the same double.
std::string fmt_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, p};
}

double parse_double(std::string_view s, const std::string& where) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || p != end)
        throw ParseError(where, "malformed number '" + std::string(s) + "'");
    if (!std::isfinite(v))
        throw ParseError(where, "non-finite number");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

// Lines of a LF-terminated document; a trailing newline adds no empty line.
std::vector<std::string_view> lines_of(std::string_view text) {
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty())
        lines.pop_back();
    return lines;
}

} // namespace

// --- keypoints --------------------------------------------------------------

std::vector<PersonPose> parse_keypoints(const std::string& text, const std::string& image_id) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(image_id + ".keypoints (byte " + std::to_string(e.byte) + ")", e.what());
    }
    if (!doc.is_object() || !doc.contains("version"))
        throw ParseError(image_id + ".keypoints", "missing schema version field");
    if (!doc["version"].is_number())
        throw ParseError(image_id + ".keypoints: version", "schema version must be a number");
    const double version = doc["version"].get<double>();
    if (!(version >= 1.0 && version < 2.0))
        throw ParseError(image_id + ".keypoints: version",
                         "unknown schema version " + fmt_double(version));
    if (!doc.contains("people") || !doc["people"].is_array())
        throw ParseError(image_id + ".keypoints", "missing people array");

    std::vector<PersonPose> people;
    people.reserve(doc["people"].size());
    for (std::size_t pi = 0; pi < doc["people"].size(); ++pi) {
        const std::string where = image_id + ".keypoints: people[" + std::to_string(pi) + "]";
        const json& person = doc["people"][pi];
        if (!person.is_object() || !person.contains("pose_keypoints_2d") ||
            !person["pose_keypoints_2d"].is_array())
            throw ParseError(where, "missing pose_keypoints_2d array");
        const json& flat = person["pose_keypoints_2d"];
        if (flat.size() != 3 * kJointCount)
            throw ParseError(where, "expected " + std::to_string(3 * kJointCount) +
                                        " values (x,y,confidence per joint), got " +
                                        std::to_string(flat.size()));
        PersonPose pose;
        pose.person_id = image_id + "#" + std::to_string(pi);
        for (std::size_t k = 0; k < kJointCount; ++k) {
            double v[3];
            for (int c = 0; c < 3; ++c) {
                const json& cell = flat[3 * k + c];
                if (!cell.is_number())
                    throw ParseError(where + ".pose_keypoints_2d[" + std::to_string(3 * k + c) +
                                         "]", "not a number");
                v[c] = cell.get<double>();
                if (!std::isfinite(v[c]))
                    throw ParseError(where + ".pose_keypoints_2d[" + std::to_string(3 * k + c) +
                                         "]", "non-finite value");
            }
            if (v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0)
                continue; // null-encoded: joint undetected
            if (v[2] < 0.0 || v[2] > 1.0)
                throw ParseError(where + ".pose_keypoints_2d[" + std::to_string(3 * k + 2) + "]",
                                 "confidence outside [0,1]");
            pose.joints[k] = Joint::at(v[0], v[1], v[2]);
        }
        people.push_back(std::move(pose));
    }
    return people;
}

std::string write_keypoints(std::span<const PersonPose> people) {
    json doc;
    doc["version"] = 1.0;
    json arr = json::array();
    for (const PersonPose& pose : people) {
        json flat = json::array();
        for (std::size_t k = 0; k < kJointCount; ++k) {
            const Joint& j = pose.joints[k];
            if (j.present) {
                flat.push_back(j.location.x);
                flat.push_back(j.location.y);
                flat.push_back(j.confidence);
            } else {
                flat.push_back(0.0);
                flat.push_back(0.0);
                flat.push_back(0.0);
            }
        }
        arr.push_back(json{{"pose_keypoints_2d", std::move(flat)}});
    }
    doc["people"] = std::move(arr);
    return doc.dump() + "\n";
}

// --- ground truth CSV -------------------------------------------------------

namespace {
constexpr std::string_view kGtHeader = "image_id,face_id,x,y,w,h";
constexpr std::string_view kDetHeader = "image_id,x,y,w,h,score";
} // namespace

std::vector<GroundTruthFace> parse_ground_truth(const std::string& text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines[0] != kGtHeader)
        throw ParseError("gt.csv line 1",
                         "expected header '" + std::string(kGtHeader) + "'");
    std::vector<GroundTruthFace> faces;
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::string where = "gt.csv line " + std::to_string(li + 1);
        const auto fields = split(lines[li], ',');
        if (fields.size() != 6)
            throw ParseError(where, "expected 6 fields, got " + std::to_string(fields.size()));
        if (fields[0].empty() || fields[1].empty())
            throw ParseError(where, "empty image_id or face_id");
        const double x = parse_double(fields[2], where);
        const double y = parse_double(fields[3], where);
        const double w = parse_double(fields[4], where);
        const double h = parse_double(fields[5], where);
        if (!(w > 0.0) || !(h > 0.0))
            throw ParseError(where, "box width and height must be positive");
        GroundTruthFace face{BoundingBox(x, y, w, h), std::string(fields[0]),
                             std::string(fields[1])};
        if (!seen.insert({face.image_id, face.face_id}).second)
            throw ParseError(where, "duplicate face_id '" + face.face_id + "' for image '" +
                                        face.image_id + "'");
        faces.push_back(std::move(face));
    }
    return faces;
}

std::string write_ground_truth(std::span<const GroundTruthFace> faces) {
    std::string out{kGtHeader};
    out += '\n';
    for (const GroundTruthFace& f : faces) {
        out += f.image_id;
        out += ',';
        out += f.face_id;
        out += ',';
        out += fmt_double(f.box.x);
        out += ',';
        out += fmt_double(f.box.y);
        out += ',';
        out += fmt_double(f.box.w);
        out += ',';
        out += fmt_double(f.box.h);
        out += '\n';
    }
    return out;
}

// --- detections CSV ---------------------------------------------------------

DetectionFile parse_detections(const std::string& text, const std::string& method) {
    const auto lines = lines_of(text);
    const std::string file = method + ".det.csv";
    if (lines.empty() || lines[0] != kDetHeader)
        throw ParseError(file + " line 1", "expected header '" + std::string(kDetHeader) + "'");
    DetectionFile out{method, {}};
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::string where = file + " line " + std::to_string(li + 1);
        const auto fields = split(lines[li], ',');
        if (fields.size() != 6)
            throw ParseError(where, "expected 6 fields, got " + std::to_string(fields.size()));
        if (fields[0].empty())
            throw ParseError(where, "empty image_id");
        const double x = parse_double(fields[1], where);
        const double y = parse_double(fields[2], where);
        const double w = parse_double(fields[3], where);
        const double h = parse_double(fields[4], where);
        const double score = parse_double(fields[5], where);
        if (!(w > 0.0) || !(h > 0.0))
            throw ParseError(where, "box width and height must be positive");
        if (score < 0.0 || score > 1.0)
            throw ParseError(where, "score outside [0,1]");
        out.rows.push_back({std::string(fields[0]), BoundingBox(x, y, w, h), score});
    }
    return out;
}

std::string write_detections(const DetectionFile& file) {
    std::string out{kDetHeader};
    out += '\n';
    for (const DetectionRow& r : file.rows) {
        if (r.score < 0.0 || r.score > 1.0)
            throw std::invalid_argument("write_detections: score outside [0,1]");
        out += r.image_id;
        out += ',';
        out += fmt_double(r.box.x);
        out += ',';
        out += fmt_double(r.box.y);
        out += ',';
        out += fmt_double(r.box.w);
        out += ',';
        out += fmt_double(r.box.h);
        out += ',';
        out += fmt_double(r.score);
        out += '\n';
    }
    return out;
}

std::string method_from_filename(const std::filesystem::path& path) {
    const std::string name = path.filename().string();
    constexpr std::string_view suffix = ".det.csv";
    if (name.size() <= suffix.size() || name.substr(name.size() - suffix.size()) != suffix)
        throw ParseError(name, "detection files are named <method>.det.csv");
    return name.substr(0, name.size() - suffix.size());
}

// --- curve CSV ---------------------------------------------------------------

std::string write_curve_csv(const CurveSeries& series) {
    std::string out = "x,y\n";
    for (const CurvePoint& p : series.points) {
        out += fmt_double(p.x);
        out += ',';
        out += fmt_double(p.y);
        out += '\n';
    }
    out += "# auc=";
    out += fmt_double(series.auc);
    out += '\n';
    return out;
}

CurveSeries parse_curve_csv(const std::string& text, CurveKind kind, CurveXAxis x_axis) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines[0] != "x,y")
        throw ParseError("curve.csv line 1", "expected header 'x,y'");
    CurveSeries series{kind, x_axis, {}, 0.0};
    bool saw_footer = false;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::string where = "curve.csv line " + std::to_string(li + 1);
        const std::string_view line = lines[li];
        if (line.starts_with("# auc=")) {
            if (li + 1 != lines.size())
                throw ParseError(where, "auc footer must be the last line");
            series.auc = parse_double(line.substr(6), where);
            saw_footer = true;
            break;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 2)
            throw ParseError(where, "expected 2 fields, got " + std::to_string(fields.size()));
        series.points.push_back({parse_double(fields[0], where), parse_double(fields[1], where)});
    }
    if (!saw_footer)
        throw ParseError("curve.csv", "missing '# auc=' footer");
    return series;
}

// --- skin model file ----------------------------------------------------------

std::string write_skin_model(const SkinModel& model) {
    const int bins = model.reference.bins_per_axis;
    std::string out = "bfdkit-skin-model v1\n";
    out += "bins " + std::to_string(bins) + "\n";
    out += "threshold " + fmt_double(model.distance_threshold) + "\n";
    out += "trained_on " + std::to_string(model.trained_on) + "\n";
    for (int r = 0; r < bins; ++r) {
        for (int g = 0; g < bins; ++g) {
            if (g)
                out += ' ';
            out += fmt_double(model.reference.at(r, g));
        }
        out += '\n';
    }
    return out;
}

SkinModel parse_skin_model(const std::string& text) {
    const auto lines = lines_of(text);
    auto expect_prefix = [&](std::size_t li, std::string_view prefix) -> std::string_view {
        const std::string where = "skin-model line " + std::to_string(li + 1);
        if (li >= lines.size())
            throw ParseError(where, "file truncated");
        if (!lines[li].starts_with(prefix))
            throw ParseError(where, "expected '" + std::string(prefix) + "...'");
        return lines[li].substr(prefix.size());
    };

    if (lines.empty() || lines[0] != "bfdkit-skin-model v1")
        throw ParseError("skin-model line 1", "unknown file format or version");
    const auto bins_s = expect_prefix(1, "bins ");
    const double bins_d = parse_double(bins_s, "skin-model line 2");
    const int bins = int(bins_d);
    if (bins < 1 || bins > 4096 || double(bins) != bins_d)
        throw ParseError("skin-model line 2", "bins must be a small positive integer");
    const double threshold = parse_double(expect_prefix(2, "threshold "), "skin-model line 3");
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw ParseError("skin-model line 3", "threshold must be in (0,1]");
    const double trained_d = parse_double(expect_prefix(3, "trained_on "), "skin-model line 4");
    if (trained_d < 1.0 || double(std::size_t(trained_d)) != trained_d)
        throw ParseError("skin-model line 4", "trained_on must be a positive integer");

    SkinModel model;
    model.reference = ChromaHistogram(bins);
    model.distance_threshold = threshold;
    model.trained_on = std::size_t(trained_d);
    if (lines.size() != 4 + std::size_t(bins))
        throw ParseError("skin-model", "expected " + std::to_string(bins) + " weight rows, got " +
                                           std::to_string(lines.size() - 4));
    for (int r = 0; r < bins; ++r) {
        const std::string where = "skin-model line " + std::to_string(5 + r);
        const auto cells = split(lines[4 + r], ' ');
        if (cells.size() != std::size_t(bins))
            throw ParseError(where, "expected " + std::to_string(bins) + " weights, got " +
                                        std::to_string(cells.size()));
        for (int g = 0; g < bins; ++g) {
            const double w = parse_double(cells[g], where);
            if (w < 0.0)
                throw ParseError(where, "negative weight");
            model.reference.at(r, g) = w;
        }
    }
    if (!model.reference.normalized())
        throw ParseError("skin-model", "reference histogram is not normalized");
    return model;
}

// --- PPM ----------------------------------------------------------------------

namespace {

// Next whitespace-separated token, honoring '#' comments per the PPM spec.
std::string_view ppm_token(std::string_view bytes, std::size_t& pos) {
    while (pos < bytes.size()) {
        if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
            ++pos;
        } else if (bytes[pos] == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n')
                ++pos;
        } else {
            break;
        }
    }
    const std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos])))
        ++pos;
    if (start == pos)
        throw ParseError("ppm (byte " + std::to_string(start) + ")", "truncated header");
    return bytes.substr(start, pos - start);
}

} // namespace

ImagePatch parse_ppm(const std::string& bytes) {
    std::size_t pos = 0;
    if (ppm_token(bytes, pos) != "P6")
        throw ParseError("ppm", "not a binary PPM (P6) file");
    const double w = parse_double(ppm_token(bytes, pos), "ppm width");
    const double h = parse_double(ppm_token(bytes, pos), "ppm height");
    const double maxval = parse_double(ppm_token(bytes, pos), "ppm maxval");
    if (w < 1 || h < 1 || w != std::floor(w) || h != std::floor(h) || w > 1e6 || h > 1e6)
        throw ParseError("ppm", "bad dimensions");
    if (maxval != 255)
        throw ParseError("ppm", "only maxval 255 is supported");
    // exactly one whitespace byte between header and raster
    if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos])))
        throw ParseError("ppm", "missing raster separator");
    ++pos;
    ImagePatch img{int(w), int(h)};
    if (bytes.size() - pos != img.rgb.size())
        throw ParseError("ppm", "raster size mismatch: expected " +
                                    std::to_string(img.rgb.size()) + " bytes, got " +
                                    std::to_string(bytes.size() - pos));
    std::copy(bytes.begin() + std::ptrdiff_t(pos), bytes.end(),
              reinterpret_cast<char*>(img.rgb.data()));
    return img;
}

std::string write_ppm(const ImagePatch& image) {
    if (image.width < 1 || image.height < 1 ||
        image.rgb.size() != std::size_t(3) * image.width * image.height)
        throw std::invalid_argument("write_ppm: malformed image");
    std::string out = "P6\n" + std::to_string(image.width) + " " +
                      std::to_string(image.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(image.rgb.data()), image.rgb.size());
    return out;
}

// --- SVG plot -------------------------------------------------------------------

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string fixed2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

} // namespace

std::string emit_plot(std::span<const NamedCurve> curves) {
    if (curves.empty())
        throw std::invalid_argument("emit_plot: no curves");
    const CurveKind kind = curves.front().series.kind;
    const CurveXAxis axis = curves.front().series.x_axis;
    double x_max = 0.0;
    for (const NamedCurve& c : curves) {
        if (c.series.kind != kind || c.series.x_axis != axis)
            throw std::invalid_argument("emit_plot: curves mix kinds or x axes");
        if (c.series.points.empty())
            throw std::invalid_argument("emit_plot: empty series '" + c.name + "'");
        for (const CurvePoint& p : c.series.points)
            x_max = std::max(x_max, p.x);
    }
    if (x_max <= 0.0)
        x_max = 1.0;

    const char* x_label = axis == CurveXAxis::Recall ? "Recall"
                          : axis == CurveXAxis::FalsePositivesPerImage
                              ? "False positives per image"
                              : "False positives";
    const char* y_label = kind == CurveKind::Pr ? "Precision" : "Detection rate";

    constexpr double W = 880, H = 640;
    constexpr double x0 = 70, x1 = 840, y0 = 30, y1 = 580; // plot rectangle
    auto px = [&](double x) { return x0 + (x / x_max) * (x1 - x0); };
    auto py = [&](double y) { return y1 - y * (y1 - y0); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed2(W) +
           "\" height=\"" + fixed2(H) + "\" viewBox=\"0 0 " + fixed2(W) + " " + fixed2(H) +
           "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + fixed2(W) + "\" height=\"" + fixed2(H) +
           "\" fill=\"white\"/>\n";

    // grid and ticks
    for (int i = 0; i <= 5; ++i) {
        const double fx = px(x_max * i / 5.0);
        const double fy = py(i / 5.0);
        svg += "<line x1=\"" + fixed2(fx) + "\" y1=\"" + fixed2(y0) + "\" x2=\"" + fixed2(fx) +
               "\" y2=\"" + fixed2(y1) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<line x1=\"" + fixed2(x0) + "\" y1=\"" + fixed2(fy) + "\" x2=\"" + fixed2(x1) +
               "\" y2=\"" + fixed2(fy) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fixed2(fx) + "\" y=\"" + fixed2(y1 + 20) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
               tick_label(x_max * i / 5.0) + "</text>\n";
        svg += "<text x=\"" + fixed2(x0 - 8) + "\" y=\"" + fixed2(fy + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" +
               tick_label(i / 5.0) + "</text>\n";
    }
    // axes
    svg += "<line x1=\"" + fixed2(x0) + "\" y1=\"" + fixed2(y1) + "\" x2=\"" + fixed2(x1) +
           "\" y2=\"" + fixed2(y1) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<line x1=\"" + fixed2(x0) + "\" y1=\"" + fixed2(y0) + "\" x2=\"" + fixed2(x0) +
           "\" y2=\"" + fixed2(y1) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + fixed2((x0 + x1) / 2) + "\" y=\"" + fixed2(H - 10) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" + x_label +
           "</text>\n";
    svg += "<text x=\"18\" y=\"" + fixed2((y0 + y1) / 2) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 " +
           fixed2((y0 + y1) / 2) + ")\">" + std::string(y_label) + "</text>\n";

    // one polyline per series
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const char* color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
        std::string pts;
        for (const CurvePoint& p : curves[i].series.points) {
            if (!pts.empty())
                pts += ' ';
            pts += fixed2(px(p.x)) + "," + fixed2(py(p.y));
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
    }

    // legend, method name with the area in braces
    const double lx = x1 - 250, ly = y0 + 14;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const char* color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
        const double ey = ly + double(i) * 20.0;
        svg += "<line x1=\"" + fixed2(lx) + "\" y1=\"" + fixed2(ey - 4) + "\" x2=\"" +
               fixed2(lx + 28) + "\" y2=\"" + fixed2(ey - 4) + "\" stroke=\"" +
               std::string(color) + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fixed2(lx + 36) + "\" y=\"" + fixed2(ey) +
               "\" font-family=\"sans-serif\" font-size=\"13\">" +
               xml_escape(curves[i].name) + " (" + fixed2(curves[i].series.auc) + ")</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

// --- files ----------------------------------------------------------------------

std::vector<std::pair<std::string, std::vector<PersonPose>>>
load_keypoints(const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    if (fs::is_directory(path)) {
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.is_regular_file() && entry.path().extension() == ".keypoints")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
    } else {
        files.push_back(path);
    }
    std::vector<std::pair<std::string, std::vector<PersonPose>>> out;
    out.reserve(files.size());
    for (const fs::path& f : files) {
        const std::string image_id = f.stem().string();
        out.emplace_back(image_id, parse_keypoints(read_file(f), image_id));
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof())
        throw std::runtime_error("error reading " + path.string());
    return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(contents.data(), std::streamsize(contents.size()));
    if (!out.good())
        throw std::runtime_error("error writing " + path.string());
}

} // namespace bfdkit
