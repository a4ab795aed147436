#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace ck {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

double op_norm(const Mat& m);
double max_abs(const Mat& m);

// Orthonormal basis of the null space of m (columns), singular values at or below tol.
Mat null_space(const Mat& m, double tol);

// Columns spanning the range of a Hermitian projector-like matrix.
Mat range_basis(const Mat& m, double tol);

Mat block_diag(const std::vector<Mat>& blocks);

}  // namespace ck
