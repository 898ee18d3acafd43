#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "planpref/common.hpp"
#include "planpref/parallel.hpp"

namespace planpref {

// Dense row-major matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

Matrix transpose(const Matrix& m);

// Gathers a subset of rows, in the order given.
Matrix take_rows(const Matrix& m, const std::vector<std::size_t>& idx);

namespace kernels {

using parallel::Exec;

// Z = X * W^T + b. X is (n x in), W is (out x in) row-major, b has out
// entries. Each Z element is accumulated serially over k, so the serial and
// OpenMP paths (and any thread count) give bit-identical results.
void affine(const Matrix& x, const Matrix& w, const std::vector<double>& b, Matrix& z, Exec exec);

// dW = delta^T * X, accumulated per output row; delta is (n x out), X is (n x in).
void grad_weights(const Matrix& delta, const Matrix& x, Matrix& dw, Exec exec);

// db = column sums of delta.
void grad_bias(const Matrix& delta, std::vector<double>& db, Exec exec);

// dX = delta * W.
void grad_input(const Matrix& delta, const Matrix& w, Matrix& dx, Exec exec);

// Pearson correlation of every column pair, written into an (n_cols x n_cols)
// matrix. Columns with zero variance correlate 0 with everything (the caller
// warns). Parallel over the flattened upper-triangle pair index.
void pairwise_pearson(const Matrix& columns_major_rows, Matrix& out, std::vector<bool>& degenerate,
                      Exec exec);

}  // namespace kernels

}  // namespace planpref
