#include "nfp/linalg.hpp"

#include <cmath>
#include <utility>

namespace nfp::linalg {

CNum det(std::vector<CNum> a, std::size_t n) {
  CNum result(1.0, 0.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (a[piv * n + col] == CNum(0.0)) return CNum(0.0);
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
      result = -result;
    }
    CNum p = a[col * n + col];
    result *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      CNum f = a[r * n + col] / p;
      if (f == CNum(0.0)) continue;
      for (std::size_t k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
    }
  }
  return result;
}

}  // namespace nfp::linalg
