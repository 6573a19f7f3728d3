// Copyright (c) 2026 bfdkit contributors
// SPDX-License-Identifier: Apache-2.0
//
// bfdkit command line: keypoints in, face detections and evaluation out.
//   detect      keypoint documents -> BFD.det.csv
//   eval        gt.csv + *.det.csv -> curves, SVG plots, summary table
//   train-skin  face crops -> skin model file
//   synth       synthetic keypoints + ground truth
//   bench       timing of the detection stage

#include <atomic>
#include <cstdio>
#include <functional>
#include <mutex>
#include <filesystem>
#include <iostream>
#include <map>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfdkit/bfd.hpp"
#include "bfdkit/eval.hpp"
#include "bfdkit/io_formats.hpp"
#include "bfdkit/skin.hpp"
#include "bfdkit/synth.hpp"

namespace fs = std::filesystem;
using namespace bfdkit;

namespace {

void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn) {
    workers = std::max<std::size_t>(1, std::min(workers, n));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

struct CommonOpts {
    std::string out_dir = ".";
    std::size_t parallel = std::max(1u, std::thread::hardware_concurrency());
};

void add_bfd_flags(CLI::App& cmd, BfdConfig& cfg) {
    cmd.add_option("--joint-conf", cfg.joint_confidence_threshold,
                   "Face joint confidence threshold")->capture_default_str();
    cmd.add_option("--box-min", cfg.box_min, "Smallest kept box side, pixels")
        ->capture_default_str();
    cmd.add_option("--box-max", cfg.box_max, "Largest kept box side, pixels")
        ->capture_default_str();
    cmd.add_option("--box-alpha", cfg.box_scale_alpha,
                   "Box side as a multiple of the face joint spread")->capture_default_str();
    cmd.add_option("--frontal-asym", cfg.frontal_asymmetry_max,
                   "Eye-ear asymmetry above which a face counts as profile")
        ->capture_default_str();
}

int cmd_detect(const std::string& keypoints_path, const std::string& images_dir,
               const std::string& skin_model_path, bool skip_missing_images,
               const BfdConfig& cfg, const CommonOpts& common) {
    cfg.validate();
    const auto by_image = load_keypoints(keypoints_path);

    const bool gate = !images_dir.empty() && !skin_model_path.empty();
    if (!gate && (!images_dir.empty() || !skin_model_path.empty()))
        std::cerr << "note: skin gate needs both --images and --skin-model; running without it\n";

    SkinModel model;
    if (gate)
        model = parse_skin_model(read_file(skin_model_path));

    std::vector<std::vector<FaceDetection>> results(by_image.size());
    parallel_for(by_image.size(), common.parallel, [&](std::size_t i) {
        const auto& [image_id, poses] = by_image[i];
        std::vector<FaceDetection> dets = detect_faces(poses, cfg);
        if (gate && !dets.empty()) {
            const fs::path image_file = fs::path(images_dir) / (image_id + ".ppm");
            if (!fs::exists(image_file)) {
                if (!skip_missing_images)
                    throw std::runtime_error("no image for '" + image_id + "' under " +
                                             images_dir + " (use --skip-missing-images to keep "
                                             "its detections ungated)");
            } else {
                const ImagePatch image = parse_ppm(read_file(image_file));
                std::vector<FaceDetection> kept;
                kept.reserve(dets.size());
                for (const FaceDetection& d : dets)
                    if (auto k = skin_gate(d, image, model))
                        kept.push_back(*k);
                dets = std::move(kept);
            }
        }
        results[i] = std::move(dets);
    });

    DetectionFile file{"BFD", {}};
    for (std::size_t i = 0; i < by_image.size(); ++i)
        for (const FaceDetection& d : results[i])
            file.rows.push_back({by_image[i].first, d.box, d.score});

    fs::create_directories(common.out_dir);
    write_file(fs::path(common.out_dir) / "BFD.det.csv", write_detections(file));
    for (std::size_t i = 0; i < by_image.size(); ++i)
        std::cout << by_image[i].first << " " << results[i].size() << "\n";
    return 0;
}

int cmd_eval(const std::string& gt_path, const std::vector<std::string>& det_paths,
             double iou_min, const std::string& x_axis, double fp_cap,
             const CommonOpts& common) {
    const auto faces = parse_ground_truth(read_file(gt_path));
    GroundTruthByImage gts;
    for (const GroundTruthFace& f : faces)
        gts[f.image_id].push_back(f);
    const std::size_t gt_total = faces.size();

    const CurveXAxis axis = x_axis == "total" ? CurveXAxis::TotalFalsePositives
                                              : CurveXAxis::FalsePositivesPerImage;

    fs::create_directories(common.out_dir);
    std::vector<NamedCurve> froc_plots, pr_plots;
    std::vector<MethodTotals> totals;
    for (const std::string& det_path : det_paths) {
        const std::string method = method_from_filename(det_path);
        const DetectionFile file = parse_detections(read_file(det_path), method);

        DetectionsByImage dets;
        std::string offenders;
        for (const DetectionRow& row : file.rows) {
            if (!gts.contains(row.image_id) &&
                offenders.find(row.image_id) == std::string::npos)
                offenders += (offenders.empty() ? "" : ", ") + row.image_id;
            dets[row.image_id].push_back({row.box, row.score});
        }
        if (!offenders.empty())
            throw std::runtime_error(method + ": detections reference image_ids missing from " +
                                     gt_path + ": " + offenders);

        const CurveSeries froc = froc_curve(dets, gts, iou_min, axis, fp_cap);
        const CurveSeries pr = pr_curve(dets, gts, iou_min);
        write_file(fs::path(common.out_dir) / (method + ".froc.curve.csv"),
                   write_curve_csv(froc));
        write_file(fs::path(common.out_dir) / (method + ".pr.curve.csv"), write_curve_csv(pr));
        froc_plots.push_back({method, froc});
        pr_plots.push_back({method, pr});

        MethodTotals t{method, 0, 0};
        for (const auto& [image_id, gt_faces] : gts) {
            auto it = dets.find(image_id);
            const MatchReport report = match_image(
                it == dets.end() ? std::span<const ScoredBox>{} : std::span(it->second),
                gt_faces, iou_min);
            t.detected += report.true_positives;
            t.false_alarm += report.false_positives;
        }
        totals.push_back(std::move(t));
    }

    write_file(fs::path(common.out_dir) / "froc.svg", emit_plot(froc_plots));
    write_file(fs::path(common.out_dir) / "pr.svg", emit_plot(pr_plots));

    const auto rows = summary_table(totals, gt_total);
    std::cout << format_summary_table(rows, gt_total);
    return 0;
}

int cmd_train_skin(const std::string& crops_dir, double threshold, int bins,
                   const std::string& out_path) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(crops_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".ppm")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw std::runtime_error("no .ppm crops under " + crops_dir);

    std::vector<ImagePatch> crops;
    crops.reserve(files.size());
    for (const fs::path& f : files)
        crops.push_back(parse_ppm(read_file(f)));

    const SkinModel model = train_skin_model(crops, threshold, bins);
    if (fs::path(out_path).has_parent_path())
        fs::create_directories(fs::path(out_path).parent_path());
    write_file(out_path, write_skin_model(model));
    std::cout << "trained on " << model.trained_on << " crops, bins "
              << model.reference.bins_per_axis << ", threshold " << model.distance_threshold
              << "\n";
    return 0;
}

int cmd_synth(const SceneSpec& spec, std::size_t num_images, const CommonOpts& common) {
    const SyntheticDataset data = generate_dataset(spec, num_images);

    const fs::path out(common.out_dir);
    fs::create_directories(out / "keypoints");
    std::vector<GroundTruthFace> all_faces;
    std::size_t people = 0;
    for (std::size_t i = 0; i < data.scenes.size(); ++i) {
        write_file(out / "keypoints" / (data.image_ids[i] + ".keypoints"),
                   write_keypoints(data.scenes[i].poses));
        people += data.scenes[i].poses.size();
        all_faces.insert(all_faces.end(), data.scenes[i].ground_truth.begin(),
                         data.scenes[i].ground_truth.end());
    }
    write_file(out / "gt.csv", write_ground_truth(all_faces));
    std::cout << "wrote " << data.scenes.size() << " images, " << people << " people, "
              << all_faces.size() << " faces to " << common.out_dir << "\n";
    return 0;
}

int cmd_bench(const std::string& keypoints_path, std::size_t reps, const BfdConfig& cfg,
              const CommonOpts& common) {
    const auto by_image = load_keypoints(keypoints_path);
    std::vector<std::vector<PersonPose>> poses;
    poses.reserve(by_image.size());
    for (const auto& [id, people] : by_image)
        poses.push_back(people);

    const BenchReport report = bench_timing(poses, cfg, reps);

    std::cout << "images: " << report.images << ", repetitions: " << report.repetitions << "\n";
    for (std::size_t r = 0; r < report.per_rep_mean_seconds.size(); ++r)
        std::cout << "rep " << r << " mean per-image: " << report.per_rep_mean_seconds[r]
                  << " s\n";
    std::cout << "per-image mean: " << report.mean_seconds
              << " s, median: " << report.median_seconds
              << " s, stddev: " << report.stddev_seconds << " s (machine-dependent)\n";

    nlohmann::json j;
    j["images"] = report.images;
    j["repetitions"] = report.repetitions;
    j["per_rep_mean_seconds"] = report.per_rep_mean_seconds;
    j["mean_seconds"] = report.mean_seconds;
    j["median_seconds"] = report.median_seconds;
    j["stddev_seconds"] = report.stddev_seconds;
    j["machine_dependent"] = true;
    fs::create_directories(common.out_dir);
    write_file(fs::path(common.out_dir) / "bench.json", j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"body-pose based face detection and evaluation toolkit"};
    app.require_subcommand(1);

    CommonOpts common;
    BfdConfig cfg;

    // detect
    std::string keypoints_path, images_dir, skin_model_path;
    bool skip_missing_images = false;
    auto* detect = app.add_subcommand("detect", "keypoints -> BFD.det.csv");
    detect->add_option("--keypoints", keypoints_path,
                       ".keypoints file or directory of them")->required();
    detect->add_option("--images", images_dir, "directory of <image_id>.ppm rasters");
    detect->add_option("--skin-model", skin_model_path, "trained skin model file");
    detect->add_flag("--skip-missing-images", skip_missing_images,
                     "keep detections ungated when their image file is absent");
    add_bfd_flags(*detect, cfg);
    detect->add_option("--out-dir", common.out_dir, "output directory")->capture_default_str();
    detect->add_option("--parallel", common.parallel, "worker threads")->capture_default_str();

    // eval
    std::string gt_path, x_axis = "per-image";
    std::vector<std::string> det_paths;
    double iou_min = 0.5, fp_cap = 5000.0;
    auto* eval = app.add_subcommand("eval", "score detection files against ground truth");
    eval->add_option("--gt", gt_path, "ground truth CSV")->required();
    eval->add_option("--det", det_paths, "<method>.det.csv (repeatable)")->required();
    eval->add_option("--iou-min", iou_min, "overlap for a true positive")->capture_default_str();
    eval->add_option("--x-axis", x_axis, "FROC x axis")
        ->check(CLI::IsMember({"per-image", "total"}))
        ->capture_default_str();
    eval->add_option("--fp-cap", fp_cap, "total false positive budget for the FROC area")
        ->capture_default_str();
    eval->add_option("--out-dir", common.out_dir, "output directory")->capture_default_str();
    eval->add_option("--parallel", common.parallel, "worker threads")->capture_default_str();

    // train-skin
    std::string crops_dir, model_out = "skin.model";
    double skin_threshold = 0.6;
    int skin_bins = 32;
    auto* train = app.add_subcommand("train-skin", "train the skin chroma model from crops");
    train->add_option("--crops", crops_dir, "directory of .ppm face crops")->required();
    train->add_option("--threshold", skin_threshold, "accept/reject distance")
        ->capture_default_str();
    train->add_option("--bins", skin_bins, "histogram bins per chroma axis")
        ->capture_default_str();
    train->add_option("--out", model_out, "model file to write")->capture_default_str();

    // synth
    SceneSpec spec;
    std::size_t num_images = 10;
    int width = 5184, height = 3456;
    std::vector<double> pose_mix;
    auto* synth = app.add_subcommand("synth", "generate a synthetic keypoint dataset");
    synth->add_option("--num-images", num_images, "images to generate")->capture_default_str();
    synth->add_option("--persons", spec.person_count, "people per image")->capture_default_str();
    synth->add_option("--occlusion-rate", spec.occlusion_rate,
                      "probability each face joint is dropped")->capture_default_str();
    synth->add_option("--jitter-sigma", spec.jitter_sigma, "joint position noise, pixels")
        ->capture_default_str();
    synth->add_option("--pose-mix", pose_mix,
                      "frontal,left,right,back,indeterminate probabilities")
        ->expected(5);
    synth->add_option("--width", width, "image width")->capture_default_str();
    synth->add_option("--height", height, "image height")->capture_default_str();
    synth->add_option("--seed", spec.seed, "dataset seed")->capture_default_str();
    synth->add_option("--out-dir", common.out_dir, "output directory")->capture_default_str();

    // bench
    std::size_t reps = 5;
    auto* bench = app.add_subcommand("bench", "time the keypoints -> detections stage");
    bench->add_option("--keypoints", keypoints_path,
                      ".keypoints file or directory of them")->required();
    bench->add_option("--reps", reps, "repetitions (>= 3)")->capture_default_str();
    add_bfd_flags(*bench, cfg);
    bench->add_option("--out-dir", common.out_dir, "output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (detect->parsed())
            return cmd_detect(keypoints_path, images_dir, skin_model_path, skip_missing_images,
                              cfg, common);
        if (eval->parsed())
            return cmd_eval(gt_path, det_paths, iou_min, x_axis, fp_cap, common);
        if (train->parsed())
            return cmd_train_skin(crops_dir, skin_threshold, skin_bins, model_out);
        if (synth->parsed()) {
            spec.image_size = ImageSize(width, height);
            if (!pose_mix.empty()) {
                spec.head_pose_mix = {pose_mix[0], pose_mix[1], pose_mix[2], pose_mix[3],
                                      pose_mix[4]};
            }
            return cmd_synth(spec, num_images, common);
        }
        if (bench->parsed())
            return cmd_bench(keypoints_path, reps, cfg, common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
