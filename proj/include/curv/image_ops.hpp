#pragma once

#include "curv/types.hpp"

#include <cmath>
#include <stdexcept>

namespace curv {

enum class Direction { Horizontal, Vertical, Average };

/// w(pixel) = w1 * h * w2^2.
template <class Scalar>
Grid<Scalar> pixel_weights(const GrayImageT<Scalar>& image, const WeightScheme& scheme) {
    const Scalar w2 = static_cast<Scalar>(scheme.resolve_w2(image.rows(), image.cols()));
    return (static_cast<Scalar>(scheme.w1) * w2 * w2) * image.h;
}

/// w(edge) = w1 * |h_a - h_b| * w2 on interior edges. Border edges of the
/// tiling have one incident pixel and weight 0; they are not stored.
template <class Scalar>
EdgeFieldT<Scalar> edge_weights(const GrayImageT<Scalar>& image, const WeightScheme& scheme) {
    const Eigen::Index H = image.rows(), W = image.cols();
    const Scalar f = static_cast<Scalar>(scheme.w1) *
                     static_cast<Scalar>(scheme.resolve_w2(H, W));
    EdgeFieldT<Scalar> e;
    e.horizontal = f * (image.h.block(1, 0, H - 1, W) - image.h.block(0, 0, H - 1, W)).abs();
    e.vertical = f * (image.h.block(0, 1, H, W - 1) - image.h.block(0, 0, H, W - 1)).abs();
    return e;
}

namespace detail {

template <class Scalar>
void require_positive_pixels(const Grid<Scalar>& pw) {
    if (!(pw > Scalar(0)).all())
        throw std::domain_error("pixel weights must be strictly positive");
}

// Opposite-edge weights for a directional family: entry k shifted by one,
// zero where the opposite edge is a border edge of the tiling.
template <class Scalar>
Grid<Scalar> shift_down(const Grid<Scalar>& g) {
    Grid<Scalar> out = Grid<Scalar>::Zero(g.rows(), g.cols());
    if (g.rows() > 1) out.block(1, 0, g.rows() - 1, g.cols()) = g.block(0, 0, g.rows() - 1, g.cols());
    return out;
}

template <class Scalar>
Grid<Scalar> shift_up(const Grid<Scalar>& g) {
    Grid<Scalar> out = Grid<Scalar>::Zero(g.rows(), g.cols());
    if (g.rows() > 1) out.block(0, 0, g.rows() - 1, g.cols()) = g.block(1, 0, g.rows() - 1, g.cols());
    return out;
}

template <class Scalar>
Grid<Scalar> shift_right(const Grid<Scalar>& g) {
    Grid<Scalar> out = Grid<Scalar>::Zero(g.rows(), g.cols());
    if (g.cols() > 1) out.block(0, 1, g.rows(), g.cols() - 1) = g.block(0, 0, g.rows(), g.cols() - 1);
    return out;
}

template <class Scalar>
Grid<Scalar> shift_left(const Grid<Scalar>& g) {
    Grid<Scalar> out = Grid<Scalar>::Zero(g.rows(), g.cols());
    if (g.cols() > 1) out.block(0, 0, g.rows(), g.cols() - 1) = g.block(0, 1, g.rows(), g.cols() - 1);
    return out;
}

}  // namespace detail

/// Ricci curvature of every interior edge from explicit cell weights.
/// For an edge e0 with co-face pixels c1, c2 and opposite edges e1, e2:
///   Ric(e0) = w(e0)[(w(e0)/w(c1) + w(e0)/w(c2))
///                   - (sqrt(w(e0)w(e1))/w(c1) + sqrt(w(e0)w(e2))/w(c2))].
/// Opposite edges that are border edges of the tiling enter with weight 0.
template <class Scalar>
EdgeFieldT<Scalar> ricci_from_weights(const EdgeFieldT<Scalar>& ew, const Grid<Scalar>& pw) {
    detail::require_positive_pixels(pw);
    const Eigen::Index H = pw.rows(), W = pw.cols();

    EdgeFieldT<Scalar> out;
    {
        const auto& w0 = ew.horizontal;                       // edge (k,j): pixels (k,j),(k+1,j)
        const Grid<Scalar> c1 = pw.block(0, 0, H - 1, W);     // upper pixel
        const Grid<Scalar> c2 = pw.block(1, 0, H - 1, W);     // lower pixel
        const Grid<Scalar> e1 = detail::shift_down(w0);       // opposite edge in c1
        const Grid<Scalar> e2 = detail::shift_up(w0);         // opposite edge in c2
        out.horizontal = w0 * (w0 / c1 + w0 / c2 - (w0 * e1).sqrt() / c1 - (w0 * e2).sqrt() / c2);
    }
    {
        const auto& w0 = ew.vertical;                         // edge (i,k): pixels (i,k),(i,k+1)
        const Grid<Scalar> c1 = pw.block(0, 0, H, W - 1);     // left pixel
        const Grid<Scalar> c2 = pw.block(0, 1, H, W - 1);     // right pixel
        const Grid<Scalar> e1 = detail::shift_right(w0);
        const Grid<Scalar> e2 = detail::shift_left(w0);
        out.vertical = w0 * (w0 / c1 + w0 / c2 - (w0 * e1).sqrt() / c1 - (w0 * e2).sqrt() / c2);
    }
    return out;
}

template <class Scalar>
EdgeFieldT<Scalar> ricci_edges(const GrayImageT<Scalar>& image, const WeightScheme& scheme) {
    return ricci_from_weights(edge_weights(image, scheme), pixel_weights(image, scheme));
}

/// Unit-convention curvature on each interior edge:
///   Ric(e0) = w(c1) + w(c2) - w(e1) - w(e2) - w(e3) - w(e4) + 2,
/// with e1..e4 the four parallel edges (two opposite, two collinear);
/// cells missing at the border contribute 0.
template <class Scalar>
EdgeFieldT<Scalar> combinatorial_ricci_from_weights(const EdgeFieldT<Scalar>& ew,
                                                    const Grid<Scalar>& pw) {
    const Eigen::Index H = pw.rows(), W = pw.cols();
    EdgeFieldT<Scalar> out;
    {
        const auto& w0 = ew.horizontal;
        out.horizontal = pw.block(0, 0, H - 1, W) + pw.block(1, 0, H - 1, W) -
                         detail::shift_down(w0) - detail::shift_up(w0) -
                         detail::shift_right(w0) - detail::shift_left(w0) + Scalar(2);
    }
    {
        const auto& w0 = ew.vertical;
        out.vertical = pw.block(0, 0, H, W - 1) + pw.block(0, 1, H, W - 1) -
                       detail::shift_right(w0) - detail::shift_left(w0) -
                       detail::shift_down(w0) - detail::shift_up(w0) + Scalar(2);
    }
    return out;
}

template <class Scalar>
EdgeFieldT<Scalar> combinatorial_ricci_edges(const GrayImageT<Scalar>& image,
                                             const WeightScheme& scheme) {
    return combinatorial_ricci_from_weights(edge_weights(image, scheme),
                                            pixel_weights(image, scheme));
}

/// box_1 on each interior edge: w(e0)/w(c1) - w(e0)/w(c2), c1 the upper
/// (horizontal family) or left (vertical family) pixel.
template <class Scalar>
EdgeFieldT<Scalar> box1_from_weights(const EdgeFieldT<Scalar>& ew, const Grid<Scalar>& pw) {
    detail::require_positive_pixels(pw);
    const Eigen::Index H = pw.rows(), W = pw.cols();
    EdgeFieldT<Scalar> out;
    out.horizontal = ew.horizontal / pw.block(0, 0, H - 1, W) -
                     ew.horizontal / pw.block(1, 0, H - 1, W);
    out.vertical = ew.vertical / pw.block(0, 0, H, W - 1) -
                   ew.vertical / pw.block(0, 1, H, W - 1);
    return out;
}

template <class Scalar>
EdgeFieldT<Scalar> box1_edges(const GrayImageT<Scalar>& image, const WeightScheme& scheme) {
    return box1_from_weights(edge_weights(image, scheme), pixel_weights(image, scheme));
}

/// B_1 = box_1 - Ric, elementwise; the identity holds exactly as computed.
template <class Scalar>
EdgeFieldT<Scalar> bochner_edges(const GrayImageT<Scalar>& image, const WeightScheme& scheme) {
    const EdgeFieldT<Scalar> ew = edge_weights(image, scheme);
    const Grid<Scalar> pw = pixel_weights(image, scheme);
    const EdgeFieldT<Scalar> box1 = box1_from_weights(ew, pw);
    const EdgeFieldT<Scalar> ric = ricci_from_weights(ew, pw);
    EdgeFieldT<Scalar> out;
    out.horizontal = box1.horizontal - ric.horizontal;
    out.vertical = box1.vertical - ric.vertical;
    return out;
}

/// box_2 across each interior edge, reported as a nonnegative magnitude:
///   |box_2(c1, c2)| = w(e0)/sqrt(w(c1)w(c2)).
template <class Scalar>
EdgeFieldT<Scalar> box2_from_weights(const EdgeFieldT<Scalar>& ew, const Grid<Scalar>& pw) {
    detail::require_positive_pixels(pw);
    const Eigen::Index H = pw.rows(), W = pw.cols();
    EdgeFieldT<Scalar> out;
    out.horizontal = ew.horizontal /
                     (pw.block(0, 0, H - 1, W) * pw.block(1, 0, H - 1, W)).sqrt();
    out.vertical = ew.vertical /
                   (pw.block(0, 0, H, W - 1) * pw.block(0, 1, H, W - 1)).sqrt();
    return out;
}

template <class Scalar>
EdgeFieldT<Scalar> box2_edges(const GrayImageT<Scalar>& image, const WeightScheme& scheme) {
    return box2_from_weights(edge_weights(image, scheme), pixel_weights(image, scheme));
}

/// Per-pixel mean over the bounding edges that carry a value in the field
/// (2 at corners, 3 on borders, 4 in the interior).
template <class Scalar>
Grid<Scalar> directional_map(const EdgeFieldT<Scalar>& field, Direction dir) {
    const Eigen::Index H = field.image_rows(), W = field.image_cols();
    if (field.horizontal.cols() != W || field.horizontal.rows() != (H > 0 ? H - 1 : 0))
        throw std::invalid_argument("inconsistent edge field dimensions");

    Grid<Scalar> sum = Grid<Scalar>::Zero(H, W);
    Grid<Scalar> count = Grid<Scalar>::Zero(H, W);
    if (dir != Direction::Vertical && H > 1) {
        sum.block(0, 0, H - 1, W) += field.horizontal;   // bottom edge of pixel
        sum.block(1, 0, H - 1, W) += field.horizontal;   // top edge
        count.block(0, 0, H - 1, W) += Scalar(1);
        count.block(1, 0, H - 1, W) += Scalar(1);
    }
    if (dir != Direction::Horizontal && W > 1) {
        sum.block(0, 0, H, W - 1) += field.vertical;     // right edge
        sum.block(0, 1, H, W - 1) += field.vertical;     // left edge
        count.block(0, 0, H, W - 1) += Scalar(1);
        count.block(0, 1, H, W - 1) += Scalar(1);
    }
    return (count > Scalar(0)).select(sum / count, Grid<Scalar>::Zero(H, W));
}

template <class Scalar>
Grid<Scalar> pixel_average(const EdgeFieldT<Scalar>& field) {
    return directional_map(field, Direction::Average);
}

}  // namespace curv
