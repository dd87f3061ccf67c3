#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace curv {

template <class Scalar>
using Grid = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Gridd = Grid<double>;

/// Normalized grayscale height field. Heights are strictly positive;
/// 8-bit gray levels map in as (g+1)/256.
template <class Scalar>
struct GrayImageT {
    Grid<Scalar> h;

    GrayImageT() = default;
    explicit GrayImageT(Grid<Scalar> heights) : h(std::move(heights)) {}

    Eigen::Index rows() const { return h.rows(); }
    Eigen::Index cols() const { return h.cols(); }

    bool valid() const {
        return h.rows() >= 1 && h.cols() >= 1 && (h > Scalar(0)).all() &&
               h.isFinite().all();
    }
};

using GrayImage = GrayImageT<double>;

/// Scalar data on the interior edges of the pixel tiling.
/// horizontal(k,j): edge between pixels (k,j) and (k+1,j), size (H-1) x W.
/// vertical(i,k):   edge between pixels (i,k) and (i,k+1), size H x (W-1).
template <class Scalar>
struct EdgeFieldT {
    Grid<Scalar> horizontal;
    Grid<Scalar> vertical;

    static EdgeFieldT zero(Eigen::Index image_rows, Eigen::Index image_cols) {
        EdgeFieldT f;
        f.horizontal = Grid<Scalar>::Zero(std::max<Eigen::Index>(image_rows - 1, 0), image_cols);
        f.vertical = Grid<Scalar>::Zero(image_rows, std::max<Eigen::Index>(image_cols - 1, 0));
        return f;
    }

    Eigen::Index image_rows() const { return vertical.rows(); }
    Eigen::Index image_cols() const { return horizontal.cols(); }

    bool shape_matches(Eigen::Index image_rows_, Eigen::Index image_cols_) const {
        return horizontal.rows() == image_rows_ - 1 && horizontal.cols() == image_cols_ &&
               vertical.rows() == image_rows_ && vertical.cols() == image_cols_ - 1;
    }
};

using EdgeField = EdgeFieldT<double>;

template <class Scalar>
using PixelFieldT = Grid<Scalar>;

using PixelField = Gridd;

enum class EdgeRule3D { MaxMinusMin, StdDev };
enum class FaceRule3D { MeanHeight, AbsDiff };

/// Standard-weight parameters w(cell of dim p) = w1 * w2^p, modulated by
/// image content (pixel height, cross-edge height difference).
struct WeightScheme {
    double w1 = 1.0;
    /// 0 means "auto": 1/max(H,W) of the image at hand.
    double w2 = 0.0;
    EdgeRule3D edge_rule = EdgeRule3D::MaxMinusMin;
    FaceRule3D face_rule = FaceRule3D::MeanHeight;

    double resolve_w2(Eigen::Index rows, Eigen::Index cols) const {
        if (w2 > 0.0) return w2;
        return 1.0 / static_cast<double>(std::max(rows, cols));
    }
    double resolve_w2(Eigen::Index depth, Eigen::Index rows, Eigen::Index cols) const {
        if (w2 > 0.0) return w2;
        return 1.0 / static_cast<double>(std::max({depth, rows, cols}));
    }
};

/// D x H x W voxel height grid, index order (z, y, x), x fastest.
struct VoxelVolume {
    Eigen::Index depth = 0, rows = 0, cols = 0;
    std::vector<double> h;

    VoxelVolume() = default;
    VoxelVolume(Eigen::Index d, Eigen::Index r, Eigen::Index c, double fill = 1.0)
        : depth(d), rows(r), cols(c),
          h(static_cast<std::size_t>(d * r * c), fill) {}

    double& operator()(Eigen::Index z, Eigen::Index y, Eigen::Index x) {
        return h[static_cast<std::size_t>((z * rows + y) * cols + x)];
    }
    double operator()(Eigen::Index z, Eigen::Index y, Eigen::Index x) const {
        return h[static_cast<std::size_t>((z * rows + y) * cols + x)];
    }

    bool valid() const {
        if (depth < 1 || rows < 1 || cols < 1) return false;
        return std::all_of(h.begin(), h.end(),
                           [](double v) { return v > 0.0 && std::isfinite(v); });
    }
};

/// Dense scalar grid over one axis-aligned edge family of the 3D lattice.
struct Grid3D {
    Eigen::Index n0 = 0, n1 = 0, n2 = 0;  // (z, y, x) extents
    std::vector<double> v;

    Grid3D() = default;
    Grid3D(Eigen::Index a, Eigen::Index b, Eigen::Index c, double fill = 0.0)
        : n0(a), n1(b), n2(c), v(static_cast<std::size_t>(a * b * c), fill) {}

    double& operator()(Eigen::Index z, Eigen::Index y, Eigen::Index x) {
        return v[static_cast<std::size_t>((z * n1 + y) * n2 + x)];
    }
    double operator()(Eigen::Index z, Eigen::Index y, Eigen::Index x) const {
        return v[static_cast<std::size_t>((z * n1 + y) * n2 + x)];
    }
};

/// Per-edge data for a voxel volume, one grid per edge direction.
/// x-aligned edges: (D+1) x (H+1) x W, y: (D+1) x H x (W+1), z: D x (H+1) x (W+1).
struct EdgeField3D {
    Grid3D x, y, z;

    static EdgeField3D zero(const VoxelVolume& vol) {
        EdgeField3D f;
        f.x = Grid3D(vol.depth + 1, vol.rows + 1, vol.cols);
        f.y = Grid3D(vol.depth + 1, vol.rows, vol.cols + 1);
        f.z = Grid3D(vol.depth, vol.rows + 1, vol.cols + 1);
        return f;
    }
};

}  // namespace curv
