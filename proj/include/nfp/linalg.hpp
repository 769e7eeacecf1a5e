#pragma once

// Small dense determinant helpers shared by the Schur and matrix layers.

#include <vector>

#include "nfp/numerics.hpp"

namespace nfp::linalg {

/// Determinant of a row-major n x n complex matrix (partial pivoting).
CNum det(std::vector<CNum> a, std::size_t n);

}  // namespace nfp::linalg
