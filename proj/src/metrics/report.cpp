#include "texttiger/metrics/report.hpp"

#include <cstdio>
#include <vector>

namespace texttiger::metrics {

using nlohmann::json;

MetricReport aggregate_report(const ReportInputs& in) {
    MetricReport report;
    report.is_splits = in.splits;
    if (in.label_dists) {
        const auto is = inception_score(LabelDistributionSet(*in.label_dists), in.splits);
        report.is_mean = is.mean;
        report.is_std = is.std;
    }
    if (in.real_features.has_value() != in.gen_features.has_value()) {
        throw DimensionError("FID needs both real and generated features");
    }
    if (in.real_features) {
        report.fid = frechet_distance(gaussian_stats(*in.real_features), gaussian_stats(*in.gen_features));
    }
    if (in.txt_pairs) report.clip_txt_img_mean = mean_pair_cosine(in.txt_pairs->first, in.txt_pairs->second, in.workers);
    if (in.img_pairs) report.clip_img_img_mean = mean_pair_cosine(in.img_pairs->first, in.img_pairs->second, in.workers);
    report.scale_note = "clip scores are raw cosine in [-1, 1]; the text table shows them x100";
    return report;
}

json to_json(const MetricReport& r) {
    auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
    return json{{"is_mean", opt(r.is_mean)},
                {"is_std", opt(r.is_std)},
                {"is_splits", r.is_splits},
                {"fid", opt(r.fid)},
                {"clip_txt_img_mean", opt(r.clip_txt_img_mean)},
                {"clip_img_img_mean", opt(r.clip_img_img_mean)},
                {"clip_display_scale", kClipDisplayScale},
                {"scale_note", r.scale_note}};
}

namespace {

std::string cell(const std::optional<double>& v, double scale = 1.0) {
    if (!v) return "-";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", *v * scale);
    return buf;
}

}  // namespace

std::string to_table(const MetricReport& r) {
    const std::vector<std::string> head{"IS", "IS std", "FID", "Txt-Img", "Img-Img"};
    const std::vector<std::string> row{cell(r.is_mean), cell(r.is_std), cell(r.fid),
                                       cell(r.clip_txt_img_mean, kClipDisplayScale),
                                       cell(r.clip_img_img_mean, kClipDisplayScale)};
    std::string out;
    for (int line = 0; line < 2; ++line) {
        const auto& cells = line == 0 ? head : row;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const std::size_t width = std::max(head[i].size(), row[i].size());
            if (i > 0) out += "  ";
            out += std::string(width - cells[i].size(), ' ') + cells[i];
        }
        out += '\n';
    }
    out += "(" + r.scale_note + ")\n";
    return out;
}

}  // namespace texttiger::metrics
