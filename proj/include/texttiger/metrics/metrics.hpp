#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "texttiger/common/error.hpp"

namespace texttiger::metrics {

class InvalidDistribution : public Error {
public:
    InvalidDistribution(const std::string& message, std::size_t row) : Error(message), row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class InsufficientSamples : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

inline constexpr double kRowSumTolerance = 1e-6;
inline constexpr double kProbabilityFloor = 1e-12;

/// N x C conditional label distributions p(y|x), one image per row.
class LabelDistributionSet {
public:
    /// Throws InvalidDistribution(row) for a negative or non-finite entry or a
    /// row whose sum is off by more than 1e-6; DimensionError for an empty matrix.
    explicit LabelDistributionSet(Eigen::MatrixXd conditionals);

    const Eigen::MatrixXd& conditionals() const noexcept { return p_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(p_.rows()); }
    std::size_t classes() const noexcept { return static_cast<std::size_t>(p_.cols()); }

    /// Column mean over rows [begin, end).
    Eigen::VectorXd marginal(std::size_t begin, std::size_t end) const;
    Eigen::VectorXd marginal() const { return marginal(0, size()); }

private:
    Eigen::MatrixXd p_;
};

struct InceptionScore {
    double mean = 0.0;
    double std = 0.0;  // population std over splits
};

/// Rows are cut into `splits` contiguous chunks of near-equal size. Per chunk,
/// exp of the mean KL(p(y|x) || p(y)) with p(y) the chunk marginal.
/// Throws std::invalid_argument unless 1 <= splits <= N.
InceptionScore inception_score(const LabelDistributionSet& dist, std::size_t splits = 1);

struct GaussianStats {
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;
    std::size_t sample_count = 0;

    std::size_t dim() const noexcept { return static_cast<std::size_t>(mean.size()); }
};

/// Column mean and unbiased (N-1) covariance, symmetrized.
/// Throws InsufficientSamples for N < 2 and NumericError for non-finite input.
GaussianStats gaussian_stats(const Eigen::MatrixXd& features);

/// Tr((A B)^{1/2}) for symmetric PSD A, B, via the eigenvalues of A^{1/2} B A^{1/2}.
double sqrt_product_trace(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// ||mu_r - mu_g||^2 + Tr(S_r) + Tr(S_g) - 2 Tr((S_r S_g)^{1/2}), clamped at 0.
double frechet_distance(const GaussianStats& r, const GaussianStats& g);

class EmbeddingVector {
public:
    /// Throws ZeroVector for a zero norm and NumericError for non-finite values.
    explicit EmbeddingVector(Eigen::VectorXd values);

    const Eigen::VectorXd& values() const noexcept { return values_; }
    double norm() const noexcept { return norm_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(values_.size()); }

private:
    Eigen::VectorXd values_;
    double norm_;
};

/// Cosine similarity clamped to [-1, 1]. DimensionError on a size mismatch.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

inline double clip_score_txt_img(const EmbeddingVector& img, const EmbeddingVector& txt) { return cosine(img, txt); }
inline double clip_score_img_img(const EmbeddingVector& a, const EmbeddingVector& b) { return cosine(a, b); }

/// Mean cosine over row pairs (a_i, b_i). Per-pair scores may be computed in
/// parallel; the sum is taken in row order, so the result does not depend on
/// `workers`. DimensionError when shapes differ or there are no rows.
double mean_pair_cosine(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, std::size_t workers = 1);

}  // namespace texttiger::metrics
