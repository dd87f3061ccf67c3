#pragma once

#include "curv/complex.hpp"
#include "curv/types.hpp"

#include <vector>

namespace curv {

/// Weighted cell complex of the pixel tiling plus a bidirectional map
/// between lattice coordinates and cell ids.
///
/// Lattice layout for an H x W image: vertices v(i,j) with 0<=i<=H, 0<=j<=W;
/// horizontal edges hd(i,j) joining v(i,j)-v(i,j+1); vertical edges vd(i,j)
/// joining v(i,j)-v(i+1,j); squares s(i,j) = pixel (i,j).
///
/// Orientations are fixed globally (all squares traverse their boundary the
/// same way) so the two co-faces of an interior edge carry opposite signs;
/// the sign is +1 for the upper pixel of a horizontal edge and the left
/// pixel of a vertical edge.
struct Cubical2D {
    CellComplex complex;
    Eigen::Index rows = 0, cols = 0;

    CellId vertex(Eigen::Index i, Eigen::Index j) const { return vertex_ids[idx(i, j, cols + 1)]; }
    CellId h_edge(Eigen::Index i, Eigen::Index j) const { return h_edge_ids[idx(i, j, cols)]; }
    CellId v_edge(Eigen::Index i, Eigen::Index j) const { return v_edge_ids[idx(i, j, cols + 1)]; }
    CellId pixel(Eigen::Index i, Eigen::Index j) const { return pixel_ids[idx(i, j, cols)]; }

    /// Interior edges in EdgeField indexing.
    CellId interior_h_edge(Eigen::Index k, Eigen::Index j) const { return h_edge(k + 1, j); }
    CellId interior_v_edge(Eigen::Index i, Eigen::Index k) const { return v_edge(i, k + 1); }

    std::vector<CellId> vertex_ids, h_edge_ids, v_edge_ids, pixel_ids;

private:
    static std::size_t idx(Eigen::Index i, Eigen::Index j, Eigen::Index stride) {
        return static_cast<std::size_t>(i * stride + j);
    }
};

Cubical2D build_cubical_2d(const GrayImage& image, const WeightScheme& scheme);

/// Weighted cell complex of the voxel lattice for a D x H x W volume.
/// Edge and square families follow the EdgeField3D layout; squares are
/// indexed by their normal axis.
struct Cubical3D {
    CellComplex complex;
    Eigen::Index depth = 0, rows = 0, cols = 0;

    std::vector<CellId> vertex_ids;
    std::vector<CellId> x_edge_ids, y_edge_ids, z_edge_ids;
    std::vector<CellId> xy_square_ids, xz_square_ids, yz_square_ids;
    std::vector<CellId> cube_ids;

    CellId vertex(Eigen::Index z, Eigen::Index y, Eigen::Index x) const {
        return vertex_ids[idx(z, y, x, rows + 1, cols + 1)];
    }
    CellId x_edge(Eigen::Index z, Eigen::Index y, Eigen::Index x) const {
        return x_edge_ids[idx(z, y, x, rows + 1, cols)];
    }
    CellId y_edge(Eigen::Index z, Eigen::Index y, Eigen::Index x) const {
        return y_edge_ids[idx(z, y, x, rows, cols + 1)];
    }
    CellId z_edge(Eigen::Index z, Eigen::Index y, Eigen::Index x) const {
        return z_edge_ids[idx(z, y, x, rows + 1, cols + 1)];
    }
    CellId xy_square(Eigen::Index z, Eigen::Index y, Eigen::Index x) const {
        return xy_square_ids[idx(z, y, x, rows, cols)];
    }
    CellId xz_square(Eigen::Index z, Eigen::Index y, Eigen::Index x) const {
        return xz_square_ids[idx(z, y, x, rows + 1, cols)];
    }
    CellId yz_square(Eigen::Index z, Eigen::Index y, Eigen::Index x) const {
        return yz_square_ids[idx(z, y, x, rows, cols + 1)];
    }
    CellId cube(Eigen::Index z, Eigen::Index y, Eigen::Index x) const {
        return cube_ids[idx(z, y, x, rows, cols)];
    }

private:
    static std::size_t idx(Eigen::Index z, Eigen::Index y, Eigen::Index x,
                           Eigen::Index ny, Eigen::Index nx) {
        return static_cast<std::size_t>((z * ny + y) * nx + x);
    }
};

Cubical3D build_cubical_3d(const VoxelVolume& volume, const WeightScheme& scheme);

}  // namespace curv
