#pragma once

#include "curv/cubical.hpp"
#include "curv/image_ops.hpp"
#include "curv/voxel_ops.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace curv {

/// Uniform random 8-bit image, heights (g+1)/256.
inline GrayImage random_image(Eigen::Index rows, Eigen::Index cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> gray(0, 255);
    Gridd h(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) h(i, j) = (gray(rng) + 1) / 256.0;
    return GrayImage(h);
}

inline VoxelVolume random_volume(Eigen::Index n, std::mt19937& rng) {
    std::uniform_int_distribution<int> gray(0, 255);
    VoxelVolume vol(n, n, n);
    for (double& v : vol.h) v = (gray(rng) + 1) / 256.0;
    return vol;
}

/// Max absolute deviation between the closed-form 2D kernels (Ric, box_1,
/// box_2) and the enumeration oracle on one image.
inline double oracle_deviation_2d(const GrayImage& image, const WeightScheme& scheme) {
    const Cubical2D cx = build_cubical_2d(image, scheme);
    const EdgeField ric = ricci_edges(image, scheme);
    const EdgeField box1 = box1_edges(image, scheme);
    const EdgeField box2 = box2_edges(image, scheme);
    const Eigen::Index H = image.rows(), W = image.cols();

    double dev = 0.0;
    auto track = [&dev](double a, double b) { dev = std::max(dev, std::abs(a - b)); };

    for (Eigen::Index k = 0; k + 1 < H; ++k)
        for (Eigen::Index j = 0; j < W; ++j) {
            const CellId e = cx.interior_h_edge(k, j);
            track(ric.horizontal(k, j), curvature_function(cx.complex, e));
            track(box1.horizontal(k, j),
                  laplacian_entry(cx.complex, e, e, EpsilonConvention::PaperImage));
            track(box2.horizontal(k, j),
                  std::abs(laplacian_entry(cx.complex, cx.pixel(k, j), cx.pixel(k + 1, j),
                                           EpsilonConvention::PaperImage)));
        }
    for (Eigen::Index i = 0; i < H; ++i)
        for (Eigen::Index k = 0; k + 1 < W; ++k) {
            const CellId e = cx.interior_v_edge(i, k);
            track(ric.vertical(i, k), curvature_function(cx.complex, e));
            track(box1.vertical(i, k),
                  laplacian_entry(cx.complex, e, e, EpsilonConvention::PaperImage));
            track(box2.vertical(i, k),
                  std::abs(laplacian_entry(cx.complex, cx.pixel(i, k), cx.pixel(i, k + 1),
                                           EpsilonConvention::PaperImage)));
        }
    return dev;
}

/// Max absolute deviation between the 3D Ricci kernel and the oracle over
/// every lattice edge of one volume.
inline double oracle_deviation_3d(const VoxelVolume& vol, const WeightScheme& scheme) {
    const Cubical3D cx = build_cubical_3d(vol, scheme);
    const EdgeField3D ric = ricci_edges_3d(vol, scheme);
    const Eigen::Index D = vol.depth, H = vol.rows, W = vol.cols;

    double dev = 0.0;
    auto track = [&dev](double a, double b) { dev = std::max(dev, std::abs(a - b)); };

    for (Eigen::Index z = 0; z <= D; ++z)
        for (Eigen::Index y = 0; y <= H; ++y)
            for (Eigen::Index x = 0; x < W; ++x)
                track(ric.x(z, y, x), curvature_function(cx.complex, cx.x_edge(z, y, x)));
    for (Eigen::Index z = 0; z <= D; ++z)
        for (Eigen::Index y = 0; y < H; ++y)
            for (Eigen::Index x = 0; x <= W; ++x)
                track(ric.y(z, y, x), curvature_function(cx.complex, cx.y_edge(z, y, x)));
    for (Eigen::Index z = 0; z < D; ++z)
        for (Eigen::Index y = 0; y <= H; ++y)
            for (Eigen::Index x = 0; x <= W; ++x)
                track(ric.z(z, y, x), curvature_function(cx.complex, cx.z_edge(z, y, x)));
    return dev;
}

inline double oracle_check_2d(Eigen::Index size, int trials, unsigned seed = 42) {
    std::mt19937 rng(seed);
    WeightScheme scheme;
    double dev = 0.0;
    for (int t = 0; t < trials; ++t)
        dev = std::max(dev, oracle_deviation_2d(random_image(size, size, rng), scheme));
    return dev;
}

inline double oracle_check_3d(Eigen::Index size, int trials, unsigned seed = 42) {
    std::mt19937 rng(seed);
    WeightScheme scheme;
    double dev = 0.0;
    for (int t = 0; t < trials; ++t)
        dev = std::max(dev, oracle_deviation_3d(random_volume(size, rng), scheme));
    return dev;
}

}  // namespace curv
