#include "curv/cubical.hpp"

#include "curv/image_ops.hpp"
#include "curv/voxel_ops.hpp"

#include <stdexcept>

namespace curv {

Cubical2D build_cubical_2d(const GrayImage& image, const WeightScheme& scheme) {
    if (image.rows() < 1 || image.cols() < 1)
        throw std::invalid_argument("build_cubical_2d: empty image");
    const Eigen::Index H = image.rows(), W = image.cols();

    const Gridd pw = pixel_weights(image, scheme);
    const EdgeField ew = edge_weights(image, scheme);

    Cubical2D c;
    c.rows = H;
    c.cols = W;
    c.vertex_ids.resize(static_cast<std::size_t>((H + 1) * (W + 1)));
    c.h_edge_ids.resize(static_cast<std::size_t>((H + 1) * W));
    c.v_edge_ids.resize(static_cast<std::size_t>(H * (W + 1)));
    c.pixel_ids.resize(static_cast<std::size_t>(H * W));

    for (Eigen::Index i = 0; i <= H; ++i)
        for (Eigen::Index j = 0; j <= W; ++j)
            c.vertex_ids[i * (W + 1) + j] = c.complex.add_cell(0, 0.0);

    // Horizontal edge hd(i,j) is oriented v(i,j+1) -> v(i,j); it is interior
    // iff 0 < i < H, where it separates pixels (i-1,j) and (i,j).
    for (Eigen::Index i = 0; i <= H; ++i)
        for (Eigen::Index j = 0; j < W; ++j) {
            const double w = (i > 0 && i < H) ? ew.horizontal(i - 1, j) : 0.0;
            c.h_edge_ids[i * W + j] = c.complex.add_cell(
                1, w, {{c.vertex(i, j), +1}, {c.vertex(i, j + 1), -1}});
        }

    // Vertical edge vd(i,j) is oriented v(i,j) -> v(i+1,j); interior iff
    // 0 < j < W, separating pixels (i,j-1) and (i,j).
    for (Eigen::Index i = 0; i < H; ++i)
        for (Eigen::Index j = 0; j <= W; ++j) {
            const double w = (j > 0 && j < W) ? ew.vertical(i, j - 1) : 0.0;
            c.v_edge_ids[i * (W + 1) + j] = c.complex.add_cell(
                1, w, {{c.vertex(i + 1, j), +1}, {c.vertex(i, j), -1}});
        }

    // All squares traverse their boundary the same way, so the bottom edge
    // and right edge enter with +1 and the top and left with -1. An
    // interior horizontal edge then has sign +1 in its upper pixel, and an
    // interior vertical edge sign +1 in its left pixel.
    for (Eigen::Index i = 0; i < H; ++i)
        for (Eigen::Index j = 0; j < W; ++j)
            c.pixel_ids[i * W + j] = c.complex.add_cell(
                2, pw(i, j),
                {{c.h_edge(i, j), -1},
                 {c.h_edge(i + 1, j), +1},
                 {c.v_edge(i, j + 1), +1},
                 {c.v_edge(i, j), -1}});

    c.complex.finalize();
    return c;
}

namespace {

// Tensor-product boundary signs: for the m-th extended axis (1-based, axes
// ordered x < y < z), the upper face enters with (-1)^(m-1) and the lower
// face with the opposite sign.
constexpr int kUpper = +1;
constexpr int kLower = -1;

int tensor_sign(int m, int which) {
    const int base = (m % 2 == 1) ? +1 : -1;
    return which == kUpper ? base : -base;
}

}  // namespace

Cubical3D build_cubical_3d(const VoxelVolume& vol, const WeightScheme& scheme) {
    if (vol.depth < 1 || vol.rows < 1 || vol.cols < 1)
        throw std::invalid_argument("build_cubical_3d: empty volume");
    const Eigen::Index D = vol.depth, H = vol.rows, W = vol.cols;

    const EdgeField3D ew = edge_weights_3d(vol, scheme);
    const FaceField3D fw = face_weights_3d(vol, scheme);
    const double w2 = scheme.resolve_w2(D, H, W);
    const double cube_factor = scheme.w1 * w2 * w2 * w2;

    Cubical3D c;
    c.depth = D;
    c.rows = H;
    c.cols = W;
    c.vertex_ids.resize(static_cast<std::size_t>((D + 1) * (H + 1) * (W + 1)));
    c.x_edge_ids.resize(static_cast<std::size_t>((D + 1) * (H + 1) * W));
    c.y_edge_ids.resize(static_cast<std::size_t>((D + 1) * H * (W + 1)));
    c.z_edge_ids.resize(static_cast<std::size_t>(D * (H + 1) * (W + 1)));
    c.xy_square_ids.resize(static_cast<std::size_t>((D + 1) * H * W));
    c.xz_square_ids.resize(static_cast<std::size_t>(D * (H + 1) * W));
    c.yz_square_ids.resize(static_cast<std::size_t>(D * H * (W + 1)));
    c.cube_ids.resize(static_cast<std::size_t>(D * H * W));

    for (Eigen::Index z = 0; z <= D; ++z)
        for (Eigen::Index y = 0; y <= H; ++y)
            for (Eigen::Index x = 0; x <= W; ++x)
                c.vertex_ids[(z * (H + 1) + y) * (W + 1) + x] = c.complex.add_cell(0, 0.0);

    for (Eigen::Index z = 0; z <= D; ++z)
        for (Eigen::Index y = 0; y <= H; ++y)
            for (Eigen::Index x = 0; x < W; ++x)
                c.x_edge_ids[(z * (H + 1) + y) * W + x] = c.complex.add_cell(
                    1, ew.x(z, y, x),
                    {{c.vertex(z, y, x + 1), tensor_sign(1, kUpper)},
                     {c.vertex(z, y, x), tensor_sign(1, kLower)}});
    for (Eigen::Index z = 0; z <= D; ++z)
        for (Eigen::Index y = 0; y < H; ++y)
            for (Eigen::Index x = 0; x <= W; ++x)
                c.y_edge_ids[(z * H + y) * (W + 1) + x] = c.complex.add_cell(
                    1, ew.y(z, y, x),
                    {{c.vertex(z, y + 1, x), tensor_sign(1, kUpper)},
                     {c.vertex(z, y, x), tensor_sign(1, kLower)}});
    for (Eigen::Index z = 0; z < D; ++z)
        for (Eigen::Index y = 0; y <= H; ++y)
            for (Eigen::Index x = 0; x <= W; ++x)
                c.z_edge_ids[(z * (H + 1) + y) * (W + 1) + x] = c.complex.add_cell(
                    1, ew.z(z, y, x),
                    {{c.vertex(z + 1, y, x), tensor_sign(1, kUpper)},
                     {c.vertex(z, y, x), tensor_sign(1, kLower)}});

    // Squares: extended axes in x < y < z order decide the boundary signs.
    for (Eigen::Index z = 0; z <= D; ++z)
        for (Eigen::Index y = 0; y < H; ++y)
            for (Eigen::Index x = 0; x < W; ++x)
                c.xy_square_ids[(z * H + y) * W + x] = c.complex.add_cell(
                    2, fw.xy(z, y, x),
                    {{c.y_edge(z, y, x + 1), tensor_sign(1, kUpper)},
                     {c.y_edge(z, y, x), tensor_sign(1, kLower)},
                     {c.x_edge(z, y + 1, x), tensor_sign(2, kUpper)},
                     {c.x_edge(z, y, x), tensor_sign(2, kLower)}});
    for (Eigen::Index z = 0; z < D; ++z)
        for (Eigen::Index y = 0; y <= H; ++y)
            for (Eigen::Index x = 0; x < W; ++x)
                c.xz_square_ids[(z * (H + 1) + y) * W + x] = c.complex.add_cell(
                    2, fw.xz(z, y, x),
                    {{c.z_edge(z, y, x + 1), tensor_sign(1, kUpper)},
                     {c.z_edge(z, y, x), tensor_sign(1, kLower)},
                     {c.x_edge(z + 1, y, x), tensor_sign(2, kUpper)},
                     {c.x_edge(z, y, x), tensor_sign(2, kLower)}});
    for (Eigen::Index z = 0; z < D; ++z)
        for (Eigen::Index y = 0; y < H; ++y)
            for (Eigen::Index x = 0; x <= W; ++x)
                c.yz_square_ids[(z * H + y) * (W + 1) + x] = c.complex.add_cell(
                    2, fw.yz(z, y, x),
                    {{c.z_edge(z, y + 1, x), tensor_sign(1, kUpper)},
                     {c.z_edge(z, y, x), tensor_sign(1, kLower)},
                     {c.y_edge(z + 1, y, x), tensor_sign(2, kUpper)},
                     {c.y_edge(z, y, x), tensor_sign(2, kLower)}});

    for (Eigen::Index z = 0; z < D; ++z)
        for (Eigen::Index y = 0; y < H; ++y)
            for (Eigen::Index x = 0; x < W; ++x)
                c.cube_ids[(z * H + y) * W + x] = c.complex.add_cell(
                    3, cube_factor * vol(z, y, x),
                    {{c.yz_square(z, y, x + 1), tensor_sign(1, kUpper)},
                     {c.yz_square(z, y, x), tensor_sign(1, kLower)},
                     {c.xz_square(z, y + 1, x), tensor_sign(2, kUpper)},
                     {c.xz_square(z, y, x), tensor_sign(2, kLower)},
                     {c.xy_square(z + 1, y, x), tensor_sign(3, kUpper)},
                     {c.xy_square(z, y, x), tensor_sign(3, kLower)}});

    c.complex.finalize();
    return c;
}

}  // namespace curv
