#include "mvsteg/codec/quant.hpp"

#include <cmath>

namespace mvsteg::codec {

int quantise(double coeff, int qp) { return static_cast<int>(std::round(coeff / qp)); }

LevelBlock quantise(const Block8<double>& coeffs, int qp) {
  return coeffs.unaryExpr([qp](double c) { return quantise(c, qp); });
}

Block8<double> dequantise(const LevelBlock& levels, int qp) {
  return levels.cast<double>() * static_cast<double>(qp);
}

}  // namespace mvsteg::codec
