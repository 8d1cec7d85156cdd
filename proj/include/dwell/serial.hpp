#pragma once

// Single-threaded reference versions of the OpenMP kernels. They follow the
// same arithmetic in the same order, so results must match bit for bit.

#include <functional>

#include "dwell/basis.hpp"
#include "dwell/fdm.hpp"
#include "dwell/sweep.hpp"

namespace dwell::serial {

Tridiagonal assemble_tridiagonal(const std::function<double(double)>& v, const GridSpec& grid);

std::vector<double> eigen_tridiag_smallest(const Tridiagonal& t, int k);

DenseTable quadrature_matrix(int m, int count, const std::function<double(double)>& f);

SweepResult sweep(const SweepConfig& config);

}  // namespace dwell::serial
