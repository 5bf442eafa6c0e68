#pragma once

#include <vector>

#include "geomtl/matrix.hpp"

// Data-parallel primitives behind the layer math. The default entry points
// are OpenMP-parallel; kernels::serial holds the plain reference loops the
// tests compare against. Both paths compute every output element with the
// same inner summation order, so results are bit-identical at any thread
// count.
namespace geomtl::kernels {

// c[m x n] = a[m x k] * b[k x n]
void matmul_nn(const Matrix& a, const Matrix& b, Matrix& c);

// c[m x n] = a[m x k] * b^T, with b stored as [n x k]
void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c);

// c[m x n] = a^T * b, with a stored as [k x m] and b as [k x n]
void matmul_tn(const Matrix& a, const Matrix& b, Matrix& c);

// x[i][j] += v[j]
void add_row_vector(Matrix& x, const std::vector<double>& v);

// out[j] = sum_i x[i][j]
std::vector<double> col_sum(const Matrix& x);

// out[i] = dot(a.row(i), b.row(i)); a and b both [m x d]
std::vector<double> row_dot(const Matrix& a, const Matrix& b);

// out = max(0, x), elementwise
Matrix relu(const Matrix& x);

// grad_in = grad_out where x > 0, else 0 (gradient at exactly 0 is 0)
Matrix relu_mask(const Matrix& x, const Matrix& grad_out);

namespace serial {

void matmul_nn(const Matrix& a, const Matrix& b, Matrix& c);
void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c);
void matmul_tn(const Matrix& a, const Matrix& b, Matrix& c);
void add_row_vector(Matrix& x, const std::vector<double>& v);
std::vector<double> col_sum(const Matrix& x);
std::vector<double> row_dot(const Matrix& a, const Matrix& b);
Matrix relu(const Matrix& x);
Matrix relu_mask(const Matrix& x, const Matrix& grad_out);

}  // namespace serial

}  // namespace geomtl::kernels
