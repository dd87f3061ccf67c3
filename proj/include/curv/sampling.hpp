#pragma once

#include "curv/types.hpp"

#include <stdexcept>

namespace curv {

/// Splits every pixel into factor x factor sub-pixels carrying h/factor^2
/// each, so total mass sum(h * area) is preserved when the cell area shrinks
/// by factor^2. Heights stay strictly positive.
template <class Scalar>
GrayImageT<Scalar> upsample(const GrayImageT<Scalar>& image, int factor) {
    if (factor != 2 && factor != 3)
        throw std::invalid_argument("upsample: factor must be 2 or 3");
    const Eigen::Index H = image.rows(), W = image.cols();
    // true division, not multiplication by a rounded reciprocal: h/9 rounds
    // once and the block sum below recovers h exactly for quantized heights
    const Scalar den = Scalar(factor * factor);
    Grid<Scalar> out(H * factor, W * factor);
    for (Eigen::Index i = 0; i < H; ++i)
        for (Eigen::Index j = 0; j < W; ++j)
            out.block(i * factor, j * factor, factor, factor).setConstant(image.h(i, j) / den);
    return GrayImageT<Scalar>(out);
}

/// Fuses factor x factor blocks into one pixel whose height is the sum of
/// the constituents, clamped to 1. The block sum is accumulated in extended
/// precision and rounded once, so downsample(upsample(img)) == img whenever
/// no clamping triggers.
template <class Scalar>
GrayImageT<Scalar> downsample(const GrayImageT<Scalar>& image, int factor) {
    if (factor != 2 && factor != 3)
        throw std::invalid_argument("downsample: factor must be 2 or 3");
    const Eigen::Index H = image.rows(), W = image.cols();
    if (H % factor != 0 || W % factor != 0)
        throw std::invalid_argument("downsample: dimensions must be divisible by factor");
    Grid<Scalar> out(H / factor, W / factor);
    for (Eigen::Index i = 0; i < H / factor; ++i)
        for (Eigen::Index j = 0; j < W / factor; ++j) {
            long double sum = 0.0L;
            for (Eigen::Index a = 0; a < factor; ++a)
                for (Eigen::Index b = 0; b < factor; ++b)
                    sum += static_cast<long double>(image.h(i * factor + a, j * factor + b));
            out(i, j) = std::min(static_cast<Scalar>(sum), Scalar(1));
        }
    return GrayImageT<Scalar>(out);
}

}  // namespace curv
