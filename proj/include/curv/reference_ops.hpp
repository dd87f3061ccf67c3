#pragma once

#include "curv/types.hpp"

#include <stdexcept>

namespace curv {

namespace detail {

// Central differences on interior samples, one-sided at the borders.
template <class Scalar>
Grid<Scalar> d_rows(const Grid<Scalar>& h, Scalar spacing) {
    const Eigen::Index H = h.rows(), W = h.cols();
    Grid<Scalar> d(H, W);
    d.row(0) = (h.row(1) - h.row(0)) / spacing;
    d.row(H - 1) = (h.row(H - 1) - h.row(H - 2)) / spacing;
    if (H > 2)
        d.block(1, 0, H - 2, W) =
            (h.block(2, 0, H - 2, W) - h.block(0, 0, H - 2, W)) / (2 * spacing);
    return d;
}

template <class Scalar>
Grid<Scalar> d_cols(const Grid<Scalar>& h, Scalar spacing) {
    return d_rows<Scalar>(h.transpose(), spacing).transpose();
}

}  // namespace detail

/// Gaussian curvature of the height surface (Monge patch):
///   K = (h_xx h_yy - h_xy^2) / (1 + h_x^2 + h_y^2)^2,
/// finite differences with the given grid spacing.
template <class Scalar>
Grid<Scalar> classical_gauss(const GrayImageT<Scalar>& image, Scalar spacing) {
    if (image.rows() < 3 || image.cols() < 3)
        throw std::invalid_argument("classical_gauss: image must be at least 3x3");
    const Grid<Scalar> hx = detail::d_cols(image.h, spacing);
    const Grid<Scalar> hy = detail::d_rows(image.h, spacing);
    const Grid<Scalar> hxx = detail::d_cols(hx, spacing);
    const Grid<Scalar> hyy = detail::d_rows(hy, spacing);
    const Grid<Scalar> hxy = detail::d_rows(hx, spacing);
    const Grid<Scalar> denom = (Scalar(1) + hx.square() + hy.square()).square();
    return (hxx * hyy - hxy.square()) / denom;
}

/// 5-point Laplacian with replicated borders, scaled by 1/spacing^2.
template <class Scalar>
Grid<Scalar> classical_laplacian(const GrayImageT<Scalar>& image, Scalar spacing) {
    if (image.rows() < 3 || image.cols() < 3)
        throw std::invalid_argument("classical_laplacian: image must be at least 3x3");
    const auto& h = image.h;
    const Eigen::Index H = h.rows(), W = h.cols();

    auto clampi = [](Eigen::Index v, Eigen::Index n) {
        return v < 0 ? 0 : (v >= n ? n - 1 : v);
    };
    Grid<Scalar> out(H, W);
    for (Eigen::Index i = 0; i < H; ++i)
        for (Eigen::Index j = 0; j < W; ++j)
            out(i, j) = (h(clampi(i - 1, H), j) + h(clampi(i + 1, H), j) +
                         h(i, clampi(j - 1, W)) + h(i, clampi(j + 1, W)) -
                         Scalar(4) * h(i, j)) /
                        (spacing * spacing);
    return out;
}

}  // namespace curv
