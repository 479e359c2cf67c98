#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "lucidsum/errors.hpp"

namespace lucidsum {

// ----------------------------------------------------------------------------
// DenseMatrix
// ----------------------------------------------------------------------------

// Row-major dense matrix of doubles. Small and simple on purpose: the
// summarizers work at desk scale (tens of sentences, a few thousand terms).
class DenseMatrix {
public:
  DenseMatrix() = default;

  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

  DenseMatrix transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
  }

  double frobenius_norm() const {
    double sum = 0.0;
    for (double v : data_) sum += v * v;
    return std::sqrt(sum);
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Truncated singular value decomposition A ~ u * diag(sigma) * vt.
struct SvdResult {
  DenseMatrix u;              // rows x k, orthonormal columns
  std::vector<double> sigma;  // k singular values, descending, >= 0
  DenseMatrix vt;             // k x cols, orthonormal rows
};

// ----------------------------------------------------------------------------
// Truncated SVD (one-sided Jacobi)
// ----------------------------------------------------------------------------

namespace detail {

struct JacobiSvd {
  DenseMatrix w;  // starts as a copy of A, columns end up orthogonal
  DenseMatrix v;  // accumulated right rotations, orthogonal
};

// One-sided Jacobi: repeatedly rotate column pairs of W (mirroring the
// rotations into V) until every pair is orthogonal to relative tolerance
// 1e-12, capped at 30 sweeps. On exit W = A*V, so A = U * diag(sigma) * V^T
// with sigma the column norms of W.
inline JacobiSvd one_sided_jacobi(const DenseMatrix& a) {
  constexpr double kRelTol = 1e-12;
  constexpr int kMaxSweeps = 30;

  JacobiSvd out{a, DenseMatrix::identity(a.cols())};
  DenseMatrix& w = out.w;
  DenseMatrix& v = out.v;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += w(i, p) * w(i, p);
          beta += w(i, q) * w(i, q);
          gamma += w(i, p) * w(i, q);
        }
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= kRelTol * std::sqrt(alpha * beta)) continue;

        // Rutishauser rotation annihilating the (p,q) inner product.
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;

        for (std::size_t i = 0; i < m; ++i) {
          const double wip = w(i, p), wiq = w(i, q);
          w(i, p) = c * wip - s * wiq;
          w(i, q) = s * wip + c * wiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
        rotated = true;
      }
    }
    if (!rotated) break;
  }
  return out;
}

// Replaces a numerically zero U column with a unit vector orthogonal to all
// columns already fixed, found by Gram-Schmidt over the standard basis.
inline void complete_u_column(DenseMatrix& u, std::size_t col) {
  const std::size_t m = u.rows();
  for (std::size_t seed = 0; seed < m; ++seed) {
    std::vector<double> cand(m, 0.0);
    cand[seed] = 1.0;
    for (std::size_t j = 0; j < col; ++j) {
      double dot = 0.0;
      for (std::size_t i = 0; i < m; ++i) dot += cand[i] * u(i, j);
      for (std::size_t i = 0; i < m; ++i) cand[i] -= dot * u(i, j);
    }
    double norm = 0.0;
    for (double x : cand) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0.5) {  // seed was not (nearly) in the span of prior columns
      for (std::size_t i = 0; i < m; ++i) u(i, col) = cand[i] / norm;
      return;
    }
  }
}

inline SvdResult jacobi_svd_tall(const DenseMatrix& a, std::size_t k) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  JacobiSvd jac = one_sided_jacobi(a);

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += jac.w(i, j) * jac.w(i, j);
    norms[j] = std::sqrt(sum);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  // Columns below this are treated as zero; their U columns get synthesized.
  const double tiny = std::max(a.frobenius_norm(), 1.0) * 1e-13;

  SvdResult result;
  result.u = DenseMatrix(m, k);
  result.vt = DenseMatrix(k, n);
  result.sigma.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t j = order[r];
    result.sigma[r] = norms[j];
    if (norms[j] > tiny) {
      for (std::size_t i = 0; i < m; ++i) result.u(i, r) = jac.w(i, j) / norms[j];
    } else {
      complete_u_column(result.u, r);
    }
    for (std::size_t i = 0; i < n; ++i) result.vt(r, i) = jac.v(i, j);
  }
  return result;
}

// Sign convention: the largest-magnitude entry of each U column (first such
// entry on ties) is non-negative; V rows flip together with U columns.
inline void fix_svd_signs(SvdResult& svd) {
  for (std::size_t r = 0; r < svd.sigma.size(); ++r) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < svd.u.rows(); ++i) {
      if (std::abs(svd.u(i, r)) > best) {
        best = std::abs(svd.u(i, r));
        arg = i;
      }
    }
    if (svd.u(arg, r) < 0.0) {
      for (std::size_t i = 0; i < svd.u.rows(); ++i) svd.u(i, r) = -svd.u(i, r);
      for (std::size_t i = 0; i < svd.vt.cols(); ++i) svd.vt(r, i) = -svd.vt(r, i);
    }
  }
}

}  // namespace detail

/**
 * Truncated SVD of a dense matrix via one-sided Jacobi, keeping the k largest
 * singular triplets. Accuracy over speed; fine for term-sentence matrices.
 *
 * Throws DimensionError when k exceeds min(rows, cols) and NonFinite when the
 * input contains NaN or infinities.
 */
inline SvdResult truncated_svd(const DenseMatrix& a, std::size_t k) {
  if (k > std::min(a.rows(), a.cols())) {
    throw DimensionError("truncated_svd: k = " + std::to_string(k) + " exceeds min(" +
                         std::to_string(a.rows()) + ", " + std::to_string(a.cols()) + ")");
  }
  if (!a.all_finite()) {
    throw NonFinite("truncated_svd: input contains NaN or infinite entries");
  }

  SvdResult result;
  if (a.rows() >= a.cols()) {
    result = detail::jacobi_svd_tall(a, k);
  } else {
    // Jacobi wants at least as many rows as columns; decompose the transpose
    // and swap the factors: A^T = U' S V'^T  =>  A = V' S U'^T.
    SvdResult t = detail::jacobi_svd_tall(a.transposed(), k);
    result.sigma = std::move(t.sigma);
    result.u = DenseMatrix(a.rows(), k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t i = 0; i < a.rows(); ++i) result.u(i, r) = t.vt(r, i);
    result.vt = DenseMatrix(k, a.cols());
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t i = 0; i < a.cols(); ++i) result.vt(r, i) = t.u(i, r);
  }
  detail::fix_svd_signs(result);
  return result;
}

// ----------------------------------------------------------------------------
// Stationary scores (damped power iteration)
// ----------------------------------------------------------------------------

/**
 * PageRank-style fixed point of p <- (1-d)/n * 1 + d * M * p on a
 * column-stochastic matrix, started from the uniform vector. The result is a
 * probability vector: it sums to 1 and every entry is at least (1-d)/n.
 *
 * Dangling (all-zero) columns must be replaced with uniform 1/n columns by
 * the caller; anything whose columns do not sum to 1 within 1e-9 is rejected
 * with NotStochastic. NoConvergence signals that max_iter was reached while
 * the L1 change was still above 1e-6.
 */
inline std::vector<double> stationary_scores(const DenseMatrix& transition, double damping,
                                             double tol = 1e-8, std::size_t max_iter = 200) {
  const std::size_t n = transition.rows();
  if (transition.cols() != n || n == 0) {
    throw DimensionError("stationary_scores: transition matrix must be square and non-empty");
  }
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += transition(i, j);
    // Written so NaN fails too.
    if (!(std::abs(sum - 1.0) <= 1e-9)) {
      throw NotStochastic("stationary_scores: column " + std::to_string(j) +
                          " sums to " + std::to_string(sum));
    }
  }

  const double teleport = (1.0 - damping) / static_cast<double>(n);
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  double delta = 0.0;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += transition(i, j) * p[j];
      next[i] = teleport + damping * acc;
    }
    delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - p[i]);
    p.swap(next);
    if (delta < tol) return p;
  }
  if (delta > 1e-6) {
    throw NoConvergence("stationary_scores: no fixed point after " + std::to_string(max_iter) +
                        " iterations (L1 change " + std::to_string(delta) + ")");
  }
  return p;
}

}  // namespace lucidsum
