#include "tracelink/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tracelink/error.hpp"

namespace tracelink::ir {

SvdResult jacobi_svd(DenseMatrix a, int max_sweeps, double tolerance) {
    const std::size_t m = a.rows;
    const std::size_t n = a.cols;
    DenseMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) v.at(i, i) = 1.0;

    // Rounding in the inner products grows with the column length.
    const double tol = std::max(tolerance, 8.0 * static_cast<double>(m) * std::numeric_limits<double>::epsilon());

    auto col = [](DenseMatrix& x, std::size_t c) { return x.data.data() + c * x.rows; };

    // Columns rotated down to rounding noise count as zero; otherwise their
    // noisy inner products keep triggering rotations on rank-deficient input.
    double frobenius = 0.0;
    for (double x : a.data) frobenius += x * x;
    const double negligible = frobenius * std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon();

    int sweep = 0;
    bool rotated = true;
    while (rotated) {
        if (sweep >= max_sweeps) {
            throw Error(ErrorKind::Numeric, "Jacobi SVD did not converge after " +
                                                std::to_string(max_sweeps) + " sweeps");
        }
        ++sweep;
        rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double* up = col(a, p);
                double* uq = col(a, q);
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += up[i] * up[i];
                    beta += uq[i] * uq[i];
                    gamma += up[i] * uq[i];
                }
                if (alpha <= negligible || beta <= negligible) continue;
                if (std::abs(gamma) <= tol * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double x = up[i];
                    const double y = uq[i];
                    up[i] = c * x - s * y;
                    uq[i] = s * x + c * y;
                }
                double* vp = col(v, p);
                double* vq = col(v, q);
                for (std::size_t i = 0; i < n; ++i) {
                    const double x = vp[i];
                    const double y = vq[i];
                    vp[i] = c * x - s * y;
                    vq[i] = s * x + c * y;
                }
            }
        }
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double* u = col(a, j);
        double norm = 0.0;
        for (std::size_t i = 0; i < m; ++i) norm += u[i] * u[i];
        sigma[j] = std::sqrt(norm);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    SvdResult result;
    result.sweeps = sweep;
    result.singular_values.resize(n);
    result.right_vectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        result.singular_values[j] = sigma[order[j]];
        for (std::size_t i = 0; i < n; ++i) result.right_vectors.at(i, j) = v.at(i, order[j]);
    }
    return result;
}

}  // namespace tracelink::ir
