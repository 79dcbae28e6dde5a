#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "texttiger/metrics/features.hpp"
#include "texttiger/metrics/metrics.hpp"
#include "texttiger/metrics/report.hpp"

using namespace texttiger;
using namespace texttiger::metrics;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

MatrixXd random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::normal_distribution<double> n(0.0, 1.0);
    MatrixXd m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = n(rng);
    return m;
}

MatrixXd random_distributions(std::mt19937_64& rng, int rows, int classes) {
    std::gamma_distribution<double> g(0.7, 1.0);
    MatrixXd m(rows, classes);
    for (int r = 0; r < rows; ++r) {
        double s = 0;
        for (int c = 0; c < classes; ++c) s += m(r, c) = g(rng) + 1e-9;
        m.row(r) /= s;
    }
    return m;
}

MatrixXd random_spd(std::mt19937_64& rng, int d) {
    const MatrixXd x = random_matrix(rng, d, d + 2);
    return x * x.transpose() / (d + 2) + 1e-3 * MatrixXd::Identity(d, d);
}

// Plain loops: marginal as a straight average, KL in the log domain.
double is_oracle(const MatrixXd& p) {
    const int n = static_cast<int>(p.rows()), c = static_cast<int>(p.cols());
    std::vector<double> marg(c, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < c; ++j) marg[j] += p(i, j) / n;
    double total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < c; ++j)
            if (p(i, j) > 0) total += p(i, j) * (std::log(p(i, j)) - std::log(marg[j]));
    return std::exp(total / n);
}

// Sum of square roots of the eigenvalues of the non-symmetric product.
double cross_trace_oracle(const MatrixXd& a, const MatrixXd& b) {
    Eigen::EigenSolver<MatrixXd> eig(a * b);
    double s = 0;
    for (int i = 0; i < eig.eigenvalues().size(); ++i) s += std::sqrt(std::max(eig.eigenvalues()[i].real(), 0.0));
    return s;
}

VectorXd vec2(double x, double y) { return Eigen::Vector2d(x, y); }

GaussianStats stats_of(VectorXd mean, MatrixXd cov) { return {std::move(mean), std::move(cov), 2}; }

}  // namespace

TEST(Tfv1, RoundTripAndLayout) {
    MatrixXd m(2, 3);
    m << 1, 2, 3, 4.5, -0.25, 1e-3;
    std::stringstream buf;
    write_tfv1(m, buf);
    const std::string bytes = buf.str();
    ASSERT_EQ(bytes.size(), 12u + 6 * 4);
    EXPECT_EQ(bytes.substr(0, 4), "TFV1");
    EXPECT_EQ(bytes.substr(4, 4), std::string("\x02\x00\x00\x00", 4));
    EXPECT_EQ(bytes.substr(8, 4), std::string("\x03\x00\x00\x00", 4));
    // 1.0f little-endian, first element
    EXPECT_EQ(bytes.substr(12, 4), std::string("\x00\x00\x80\x3f", 4));
    // 2.0f is the second element of row 0
    EXPECT_EQ(bytes.substr(16, 4), std::string("\x00\x00\x00\x40", 4));
    const MatrixXd back = read_tfv1(buf);
    ASSERT_EQ(back.rows(), 2);
    ASSERT_EQ(back.cols(), 3);
    EXPECT_EQ(back, m.cast<float>().cast<double>());
}

TEST(Tfv1, RejectsDamagedFiles) {
    std::stringstream bad_magic(std::string("TFV2\x01\x00\x00\x00\x01\x00\x00\x00\x00\x00\x00\x00", 16));
    EXPECT_THROW(read_tfv1(bad_magic), FeatureFormatError);
    std::stringstream short_payload(std::string("TFV1\x02\x00\x00\x00\x01\x00\x00\x00\x00\x00\x00\x00", 16));
    EXPECT_THROW(read_tfv1(short_payload), FeatureFormatError);
    std::stringstream trailing(std::string("TFV1\x00\x00\x00\x00\x00\x00\x00\x00\x01", 13));
    EXPECT_THROW(read_tfv1(trailing), FeatureFormatError);
    std::stringstream empty(std::string("TFV1\x00\x00\x00\x00\x04\x00\x00\x00", 12));
    EXPECT_EQ(read_tfv1(empty).rows(), 0);
}

TEST(Tfv1, SidecarKindChecked) {
    const auto dir = std::filesystem::temp_directory_path() / "texttiger_metrics_sidecar";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const auto path = dir / "gen.tfv1";
    FeatureSidecar side{FeatureKind::ClipImg, "images/", "ViT-L/14", "2025-01-01T00:00:00Z", {{"skipped", 1}}};
    save_features(path, MatrixXd::Ones(3, 2), side);
    const auto f = load_features(path, FeatureKind::ClipImg);
    ASSERT_TRUE(f.sidecar);
    EXPECT_EQ(f.sidecar->model, "ViT-L/14");
    EXPECT_EQ(f.sidecar->extra["skipped"], 1);
    EXPECT_EQ(f.values.rows(), 3);
    EXPECT_THROW(load_features(path, FeatureKind::LabelDist), FeatureFormatError);
    EXPECT_THROW(parse_feature_kind("inception"), FeatureFormatError);
}

TEST(InceptionScoreTest, IdenticalRowsGiveExactlyOne) {
    std::mt19937_64 rng(1);
    const MatrixXd one = random_distributions(rng, 1, 7);
    MatrixXd rows = one.replicate(9, 1);
    EXPECT_EQ(inception_score(LabelDistributionSet(rows)).mean, 1.0);
    MatrixXd uniform = MatrixXd::Constant(10, 4, 0.25);
    EXPECT_EQ(inception_score(LabelDistributionSet(uniform)).mean, 1.0);
}

TEST(InceptionScoreTest, TwoOneHotRowsGiveTwo) {
    MatrixXd p(2, 2);
    p << 1, 0, 0, 1;
    EXPECT_NEAR(inception_score(LabelDistributionSet(p)).mean, 2.0, 1e-12);
}

TEST(InceptionScoreTest, MatchesBruteForceOracle) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const MatrixXd p = random_distributions(rng, 16, 5);
        EXPECT_NEAR(inception_score(LabelDistributionSet(p)).mean, is_oracle(p), 1e-9);
    }
}

TEST(InceptionScoreTest, BoundsAndDuplication) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int c = 2 + trial % 9;
        const MatrixXd p = random_distributions(rng, 3 + trial % 20, c);
        const double is = inception_score(LabelDistributionSet(p)).mean;
        EXPECT_GE(is, 1.0 - 1e-12);
        EXPECT_LE(is, c + 1e-12);
        const MatrixXd doubled = p.replicate(2, 1);
        EXPECT_NEAR(inception_score(LabelDistributionSet(doubled)).mean, is, 1e-12);
    }
}

TEST(InceptionScoreTest, SplitsAverageChunks) {
    std::mt19937_64 rng(4);
    const MatrixXd p = random_distributions(rng, 10, 3);
    const auto is = inception_score(LabelDistributionSet(p), 2);
    const double a = is_oracle(p.topRows(5)), b = is_oracle(p.bottomRows(5));
    EXPECT_NEAR(is.mean, (a + b) / 2, 1e-12);
    EXPECT_NEAR(is.std, std::abs(a - b) / 2, 1e-12);
    EXPECT_THROW(inception_score(LabelDistributionSet(p), 0), std::invalid_argument);
    EXPECT_THROW(inception_score(LabelDistributionSet(p), 11), std::invalid_argument);
}

TEST(InceptionScoreTest, InvalidRowReported) {
    MatrixXd p(3, 2);
    p << 0.5, 0.5, 0.7, 0.2, 1, 0;
    try {
        LabelDistributionSet set(p);
        FAIL();
    } catch (const InvalidDistribution& e) {
        EXPECT_EQ(e.row(), 1u);
    }
    p.row(1) << 1.5, -0.5;
    EXPECT_THROW(LabelDistributionSet{p}, InvalidDistribution);
    p.row(1) << 0.5 + 5e-7, 0.5;
    EXPECT_NO_THROW(LabelDistributionSet{p});
}

TEST(GaussianStatsTest, HandComputedAndConstant) {
    MatrixXd two(2, 2);
    two << 0, 0, 2, 0;
    const auto s = gaussian_stats(two);
    EXPECT_EQ(s.mean, vec2(1, 0));
    MatrixXd expect(2, 2);
    expect << 2, 0, 0, 0;
    EXPECT_EQ(s.covariance, expect);
    const auto c = gaussian_stats(MatrixXd::Constant(5, 3, 7.5));
    EXPECT_EQ(c.covariance, MatrixXd::Zero(3, 3));
    EXPECT_THROW(gaussian_stats(MatrixXd::Ones(1, 3)), InsufficientSamples);
}

TEST(GaussianStatsTest, MatchesTwoPassOracle) {
    std::mt19937_64 rng(5);
    const MatrixXd x = random_matrix(rng, 50, 4);
    const auto s = gaussian_stats(x);
    for (int j = 0; j < 4; ++j) {
        double mean = 0;
        for (int i = 0; i < 50; ++i) mean += x(i, j);
        mean /= 50;
        EXPECT_NEAR(s.mean(j), mean, 1e-12);
    }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            double ma = 0, mb = 0;
            for (int i = 0; i < 50; ++i) ma += x(i, a) / 50, mb += x(i, b) / 50;
            double cov = 0;
            for (int i = 0; i < 50; ++i) cov += (x(i, a) - ma) * (x(i, b) - mb);
            EXPECT_NEAR(s.covariance(a, b), cov / 49, 1e-10);
        }
    EXPECT_EQ(s.covariance, s.covariance.transpose());
}

TEST(Frechet, ClosedForms) {
    std::mt19937_64 rng(6);
    const auto r = gaussian_stats(random_matrix(rng, 40, 5));
    EXPECT_NEAR(frechet_distance(r, r), 0.0, 1e-8);
    EXPECT_NEAR(frechet_distance(stats_of(VectorXd::Constant(1, 0.0), MatrixXd::Constant(1, 1, 1.0)),
                                 stats_of(VectorXd::Constant(1, 1.0), MatrixXd::Constant(1, 1, 4.0))),
                2.0, 1e-9);
    EXPECT_NEAR(frechet_distance(stats_of(VectorXd::Zero(2), MatrixXd::Identity(2, 2)),
                                 stats_of(VectorXd::Zero(2), 4 * MatrixXd::Identity(2, 2))),
                2.0, 1e-9);
}

TEST(Frechet, CrossTraceMatchesGeneralEigensolver) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + trial % 8;
        const MatrixXd a = random_spd(rng, d), b = random_spd(rng, d);
        EXPECT_NEAR(sqrt_product_trace(a, b), cross_trace_oracle(a, b), 1e-6) << "d=" << d;
    }
}

TEST(Frechet, SymmetryAndOrthogonalInvariance) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 1 + trial % 8;
        const MatrixXd xr = random_matrix(rng, 30, d), xg = random_matrix(rng, 25, d) * 1.5 +
                                                           MatrixXd::Constant(25, d, 0.3);
        const auto r = gaussian_stats(xr), g = gaussian_stats(xg);
        const double fid = frechet_distance(r, g);
        EXPECT_GE(fid, 0.0);
        EXPECT_NEAR(fid, frechet_distance(g, r), 1e-8);
        const MatrixXd q = Eigen::HouseholderQR<MatrixXd>(random_matrix(rng, d, d)).householderQ();
        EXPECT_NEAR(frechet_distance(gaussian_stats(xr * q), gaussian_stats(xg * q)), fid, 1e-6);
    }
}

TEST(Frechet, Errors) {
    EXPECT_THROW(frechet_distance(stats_of(VectorXd::Zero(2), MatrixXd::Identity(2, 2)),
                                  stats_of(VectorXd::Zero(3), MatrixXd::Identity(3, 3))),
                 DimensionError);
    MatrixXd nan_cov = MatrixXd::Identity(2, 2);
    nan_cov(0, 1) = std::nan("");
    EXPECT_THROW(frechet_distance(stats_of(VectorXd::Zero(2), nan_cov), stats_of(VectorXd::Zero(2), nan_cov)),
                 NumericError);
}

TEST(ClipScore, ClosedForms) {
    const EmbeddingVector a(vec2(3, 4)), b(vec2(4, 3));
    EXPECT_NEAR(clip_score_txt_img(a, b), 0.96, 1e-12);
    EXPECT_NEAR(clip_score_img_img(a, a), 1.0, 1e-12);
    EXPECT_NEAR(clip_score_img_img(a, EmbeddingVector(vec2(-3, -4))), -1.0, 1e-12);
    EXPECT_NEAR(clip_score_txt_img(EmbeddingVector(vec2(1, 0)), EmbeddingVector(vec2(0, 2))),
                0.0, 1e-12);
    EXPECT_THROW(EmbeddingVector(VectorXd::Zero(3)), ZeroVector);
    EXPECT_THROW(cosine(a, EmbeddingVector(VectorXd::Ones(3))), DimensionError);
}

TEST(ClipScore, NaiveOracleAndBounds) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 1 + trial % 16;
        const MatrixXd v = random_matrix(rng, 2, d);
        double dot = 0, na = 0, nb = 0;
        for (int i = 0; i < d; ++i) dot += v(0, i) * v(1, i), na += v(0, i) * v(0, i), nb += v(1, i) * v(1, i);
        const double got = cosine(EmbeddingVector(v.row(0).transpose()), EmbeddingVector(v.row(1).transpose()));
        EXPECT_NEAR(got, dot / (std::sqrt(na) * std::sqrt(nb)), 1e-12);
        EXPECT_LE(std::abs(got), 1.0 + 1e-12);
    }
}

TEST(ClipScore, PairMeanIndependentOfWorkers) {
    std::mt19937_64 rng(10);
    const MatrixXd a = random_matrix(rng, 257, 12), b = random_matrix(rng, 257, 12);
    const double serial = mean_pair_cosine(a, b, 1);
    EXPECT_EQ(mean_pair_cosine(a, b, 8), serial);
    EXPECT_THROW(mean_pair_cosine(a, b.topRows(10)), DimensionError);
}

TEST(Report, DegenerateInputs) {
    ReportInputs in;
    in.label_dists = MatrixXd::Constant(6, 3, 1.0 / 3);
    in.real_features = MatrixXd::Ones(6, 4);
    in.gen_features = MatrixXd::Ones(6, 4);
    in.txt_pairs = PairSet{MatrixXd::Ones(6, 4), MatrixXd::Ones(6, 4)};
    in.img_pairs = PairSet{MatrixXd::Ones(6, 4), MatrixXd::Ones(6, 4)};
    const auto r = aggregate_report(in);
    EXPECT_EQ(*r.is_mean, 1.0);
    EXPECT_NEAR(*r.fid, 0.0, 1e-12);
    EXPECT_NEAR(*r.clip_txt_img_mean, 1.0, 1e-12);
    EXPECT_NEAR(*r.clip_img_img_mean, 1.0, 1e-12);
    const auto table = to_table(r);
    EXPECT_NE(table.find("Txt-Img"), std::string::npos);
    EXPECT_NE(table.find("100.00"), std::string::npos);
    EXPECT_EQ(to_json(r)["clip_txt_img_mean"].get<double>(), *r.clip_txt_img_mean);
    EXPECT_FALSE(r.scale_note.empty());
}

TEST(Report, ComposesComponentOracles) {
    std::mt19937_64 rng(11);
    ReportInputs in;
    in.label_dists = random_distributions(rng, 20, 6);
    in.real_features = random_matrix(rng, 30, 3);
    in.gen_features = random_matrix(rng, 30, 3);
    in.txt_pairs = PairSet{random_matrix(rng, 8, 5), random_matrix(rng, 8, 5)};
    in.img_pairs = PairSet{random_matrix(rng, 8, 5), random_matrix(rng, 8, 5)};
    const auto r = aggregate_report(in);
    EXPECT_NEAR(*r.is_mean, is_oracle(*in.label_dists), 1e-9);
    EXPECT_EQ(*r.fid, frechet_distance(gaussian_stats(*in.real_features), gaussian_stats(*in.gen_features)));
    double s = 0;
    for (int i = 0; i < 8; ++i) {
        const VectorXd x = in.txt_pairs->first.row(i), y = in.txt_pairs->second.row(i);
        s += x.dot(y) / (x.norm() * y.norm());
    }
    EXPECT_NEAR(*r.clip_txt_img_mean, s / 8, 1e-12);

    in.img_pairs->second = random_matrix(rng, 7, 5);
    EXPECT_THROW(aggregate_report(in), DimensionError);
}
