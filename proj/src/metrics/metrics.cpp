#include "texttiger/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "texttiger/common/parallel.hpp"

namespace texttiger::metrics {

LabelDistributionSet::LabelDistributionSet(Eigen::MatrixXd conditionals) : p_(std::move(conditionals)) {
    if (p_.rows() == 0 || p_.cols() == 0) throw DimensionError("label distribution set is empty");
    for (Eigen::Index r = 0; r < p_.rows(); ++r) {
        double sum = 0.0;
        for (Eigen::Index c = 0; c < p_.cols(); ++c) {
            const double v = p_(r, c);
            if (!std::isfinite(v) || v < 0.0) {
                throw InvalidDistribution("row " + std::to_string(r) + " has a negative or non-finite entry",
                                          static_cast<std::size_t>(r));
            }
            sum += v;
        }
        if (std::abs(sum - 1.0) > kRowSumTolerance) {
            throw InvalidDistribution("row " + std::to_string(r) + " sums to " + std::to_string(sum),
                                      static_cast<std::size_t>(r));
        }
    }
}

Eigen::VectorXd LabelDistributionSet::marginal(std::size_t begin, std::size_t end) const {
    if (begin >= end || end > size()) throw std::out_of_range("marginal row range");
    // mean taken relative to the first row: identical rows give that row back exactly
    const Eigen::RowVectorXd base = p_.row(static_cast<Eigen::Index>(begin));
    Eigen::RowVectorXd offset = Eigen::RowVectorXd::Zero(p_.cols());
    for (std::size_t r = begin + 1; r < end; ++r) offset += p_.row(static_cast<Eigen::Index>(r)) - base;
    return (base + offset / static_cast<double>(end - begin)).transpose();
}

namespace {

double kl_divergence(const Eigen::Ref<const Eigen::RowVectorXd>& p, const Eigen::VectorXd& q) {
    double kl = 0.0;
    for (Eigen::Index c = 0; c < p.size(); ++c) {
        if (p(c) <= 0.0) continue;
        kl += p(c) * (std::log(std::max(p(c), kProbabilityFloor)) - std::log(std::max(q(c), kProbabilityFloor)));
    }
    return kl;
}

}  // namespace

InceptionScore inception_score(const LabelDistributionSet& dist, std::size_t splits) {
    const std::size_t n = dist.size();
    if (splits < 1 || splits > n) throw std::invalid_argument("splits must be in [1, N]");

    std::vector<double> scores;
    scores.reserve(splits);
    for (std::size_t s = 0; s < splits; ++s) {
        const std::size_t begin = s * n / splits, end = (s + 1) * n / splits;
        const Eigen::VectorXd marginal = dist.marginal(begin, end);
        double total = 0.0;
        for (std::size_t r = begin; r < end; ++r) {
            total += kl_divergence(dist.conditionals().row(static_cast<Eigen::Index>(r)), marginal);
        }
        scores.push_back(std::exp(total / static_cast<double>(end - begin)));
    }

    InceptionScore out;
    for (double v : scores) out.mean += v;
    out.mean /= static_cast<double>(splits);
    double var = 0.0;
    for (double v : scores) var += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(var / static_cast<double>(splits));
    return out;
}

GaussianStats gaussian_stats(const Eigen::MatrixXd& features) {
    if (features.rows() < 2) throw InsufficientSamples("need at least 2 samples, got " + std::to_string(features.rows()));
    if (!features.allFinite()) throw NumericError("features contain non-finite values");

    GaussianStats s;
    s.sample_count = static_cast<std::size_t>(features.rows());
    s.mean = features.colwise().mean().transpose();
    const Eigen::MatrixXd centered = features.rowwise() - s.mean.transpose();
    const Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(features.rows() - 1);
    s.covariance = 0.5 * (cov + cov.transpose());
    return s;
}

namespace {

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    if (eig.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
    const Eigen::VectorXd roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * roots.asDiagonal() * eig.eigenvectors().transpose();
}

}  // namespace

double sqrt_product_trace(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw DimensionError("covariances must be square and of equal size");
    }
    const Eigen::MatrixXd root_a = psd_sqrt(a);
    Eigen::MatrixXd inner = root_a * b * root_a;
    inner = 0.5 * (inner + inner.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(inner, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
    return eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
}

double frechet_distance(const GaussianStats& r, const GaussianStats& g) {
    if (r.dim() != g.dim() || r.covariance.rows() != g.covariance.rows() ||
        r.covariance.rows() != static_cast<Eigen::Index>(r.dim())) {
        throw DimensionError("Gaussian statistics have different dimensions");
    }
    if (!r.mean.allFinite() || !g.mean.allFinite() || !r.covariance.allFinite() || !g.covariance.allFinite()) {
        throw NumericError("Gaussian statistics contain non-finite values");
    }
    const double mean_term = (r.mean - g.mean).squaredNorm();
    const double fid = mean_term + r.covariance.trace() + g.covariance.trace() -
                       2.0 * sqrt_product_trace(r.covariance, g.covariance);
    if (!std::isfinite(fid)) throw NumericError("Frechet distance is not finite");
    return std::max(fid, 0.0);
}

EmbeddingVector::EmbeddingVector(Eigen::VectorXd values) : values_(std::move(values)) {
    if (!values_.allFinite()) throw NumericError("embedding contains non-finite values");
    norm_ = values_.norm();
    if (!(norm_ > 0.0)) throw ZeroVector("embedding has zero norm");
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.dim() != b.dim()) throw DimensionError("embeddings have different dimensions");
    return std::clamp(a.values().dot(b.values()) / (a.norm() * b.norm()), -1.0, 1.0);
}

double mean_pair_cosine(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, std::size_t workers) {
    if (a.rows() != b.rows()) {
        throw DimensionError("pair counts differ: " + std::to_string(a.rows()) + " vs " + std::to_string(b.rows()));
    }
    if (a.cols() != b.cols()) throw DimensionError("embeddings have different dimensions");
    if (a.rows() == 0) throw DimensionError("no embedding pairs");

    std::vector<double> scores(static_cast<std::size_t>(a.rows()));
    parallel_for_index(scores.size(), workers, [&](std::size_t i) {
        const auto r = static_cast<Eigen::Index>(i);
        scores[i] = cosine(EmbeddingVector(a.row(r).transpose()), EmbeddingVector(b.row(r).transpose()));
    });
    double sum = 0.0;
    for (double s : scores) sum += s;
    return sum / static_cast<double>(scores.size());
}

}  // namespace texttiger::metrics
