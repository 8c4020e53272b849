#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "mvsteg/codec/types.hpp"

namespace mvsteg::codec {

// Orthonormal DCT-II basis: row k holds the k-th cosine.
template <typename Scalar>
const Block8<Scalar>& dct_basis() {
  static const Block8<Scalar> basis = [] {
    Block8<Scalar> m;
    for (int k = 0; k < 8; ++k) {
      const Scalar scale = k == 0 ? std::sqrt(Scalar(1) / 8) : std::sqrt(Scalar(2) / 8);
      for (int n = 0; n < 8; ++n)
        m(k, n) = scale * std::cos(std::numbers::pi_v<Scalar> * (2 * n + 1) * k / Scalar(16));
    }
    return m;
  }();
  return basis;
}

template <typename Derived>
Block8<typename Derived::Scalar> dct8(const Eigen::MatrixBase<Derived>& residual) {
  using Scalar = typename Derived::Scalar;
  const auto& c = dct_basis<Scalar>();
  return c * residual * c.transpose();
}

template <typename Derived>
Block8<typename Derived::Scalar> idct8(const Eigen::MatrixBase<Derived>& coeffs) {
  using Scalar = typename Derived::Scalar;
  const auto& c = dct_basis<Scalar>();
  return c.transpose() * coeffs * c;
}

// Zigzag scan: kZigzag[i] is the raster index (row * 8 + col) of scan position i.
inline constexpr std::array<int, 64> kZigzag = {
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,
    12, 19, 26, 33, 40, 48, 41, 34, 27, 20, 13, 6,  7,  14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63};

}  // namespace mvsteg::codec
