#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "texttiger/metrics/metrics.hpp"

namespace texttiger::metrics {

inline constexpr double kClipDisplayScale = 100.0;

/// Raw values throughout; only the text table scales CLIPScores for display.
struct MetricReport {
    std::optional<double> is_mean;
    std::optional<double> is_std;
    std::optional<double> fid;
    std::optional<double> clip_txt_img_mean;
    std::optional<double> clip_img_img_mean;
    std::size_t is_splits = 1;
    std::string scale_note;
};

struct PairSet {
    Eigen::MatrixXd first;   // images
    Eigen::MatrixXd second;  // texts or reference images
};

struct ReportInputs {
    std::optional<Eigen::MatrixXd> label_dists;
    std::optional<Eigen::MatrixXd> real_features;
    std::optional<Eigen::MatrixXd> gen_features;
    std::optional<PairSet> txt_pairs;
    std::optional<PairSet> img_pairs;
    std::size_t splits = 1;
    std::size_t workers = 1;
};

/// Computes every metric whose inputs are present. FID needs both feature sets.
/// Component errors propagate; mismatched pair counts raise DimensionError.
MetricReport aggregate_report(const ReportInputs& inputs);

nlohmann::json to_json(const MetricReport& report);
/// Aligned columns: IS, IS std, FID, Txt-Img, Img-Img. Missing values print "-".
std::string to_table(const MetricReport& report);

}  // namespace texttiger::metrics
