#pragma once

#include <cstddef>
#include <vector>

namespace tracelink::ir {

// Dense column-major matrix, just enough for the SVD below.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // data[c * rows + r]

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[c * rows + r]; }
    double at(std::size_t r, std::size_t c) const { return data[c * rows + r]; }
};

struct SvdResult {
    std::vector<double> singular_values;  // descending, size cols
    DenseMatrix right_vectors;            // cols x cols, column j pairs with singular_values[j]
    int sweeps = 0;
};

// One-sided (Hestenes) Jacobi SVD, cyclic pair order, no randomization.
// Throws Error(Numeric) when the sweep limit is reached before the columns
// become orthogonal.
SvdResult jacobi_svd(DenseMatrix a, int max_sweeps = 100, double tolerance = 1e-13);

}  // namespace tracelink::ir
