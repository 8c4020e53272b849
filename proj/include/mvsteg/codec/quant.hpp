#pragma once

#include "mvsteg/codec/types.hpp"

namespace mvsteg::codec {

// Uniform scalar quantiser with a flat step: level = round-half-away(c / qp).
int quantise(double coeff, int qp);
inline double dequantise(int level, int qp) { return static_cast<double>(level) * qp; }

LevelBlock quantise(const Block8<double>& coeffs, int qp);
Block8<double> dequantise(const LevelBlock& levels, int qp);

}  // namespace mvsteg::codec
