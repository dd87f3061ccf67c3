#include "curv/voxel_ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace curv {

namespace {

struct Samples {
    double v[4];
    int n = 0;
    void push(double x) { v[n++] = x; }
};

double apply_edge_rule(const Samples& s, EdgeRule3D rule) {
    if (s.n == 0) return 0.0;
    if (rule == EdgeRule3D::MaxMinusMin) {
        double lo = s.v[0], hi = s.v[0];
        for (int i = 1; i < s.n; ++i) {
            lo = std::min(lo, s.v[i]);
            hi = std::max(hi, s.v[i]);
        }
        return hi - lo;
    }
    double mean = 0.0;
    for (int i = 0; i < s.n; ++i) mean += s.v[i];
    mean /= s.n;
    double var = 0.0;
    for (int i = 0; i < s.n; ++i) var += (s.v[i] - mean) * (s.v[i] - mean);
    return std::sqrt(var / s.n);
}

double apply_face_rule(const Samples& s, FaceRule3D rule) {
    if (s.n == 0) return 0.0;
    if (rule == FaceRule3D::MeanHeight) {
        double mean = 0.0;
        for (int i = 0; i < s.n; ++i) mean += s.v[i];
        return mean / s.n;
    }
    return s.n == 2 ? std::abs(s.v[0] - s.v[1]) : 0.0;
}

// Voxels touching the x-aligned edge at lattice position (zi, yi, x).
Samples x_edge_voxels(const VoxelVolume& vol, Eigen::Index zi, Eigen::Index yi,
                      Eigen::Index x) {
    Samples s;
    for (Eigen::Index z : {zi - 1, zi})
        for (Eigen::Index y : {yi - 1, yi})
            if (z >= 0 && z < vol.depth && y >= 0 && y < vol.rows) s.push(vol(z, y, x));
    return s;
}

Samples y_edge_voxels(const VoxelVolume& vol, Eigen::Index zi, Eigen::Index y,
                      Eigen::Index xi) {
    Samples s;
    for (Eigen::Index z : {zi - 1, zi})
        for (Eigen::Index x : {xi - 1, xi})
            if (z >= 0 && z < vol.depth && x >= 0 && x < vol.cols) s.push(vol(z, y, x));
    return s;
}

Samples z_edge_voxels(const VoxelVolume& vol, Eigen::Index z, Eigen::Index yi,
                      Eigen::Index xi) {
    Samples s;
    for (Eigen::Index y : {yi - 1, yi})
        for (Eigen::Index x : {xi - 1, xi})
            if (y >= 0 && y < vol.rows && x >= 0 && x < vol.cols) s.push(vol(z, y, x));
    return s;
}

}  // namespace

EdgeField3D edge_weights_3d(const VoxelVolume& vol, const WeightScheme& scheme) {
    const double f = scheme.w1 * scheme.resolve_w2(vol.depth, vol.rows, vol.cols);
    EdgeField3D e = EdgeField3D::zero(vol);
    for (Eigen::Index z = 0; z <= vol.depth; ++z)
        for (Eigen::Index y = 0; y <= vol.rows; ++y)
            for (Eigen::Index x = 0; x < vol.cols; ++x)
                e.x(z, y, x) = f * apply_edge_rule(x_edge_voxels(vol, z, y, x), scheme.edge_rule);
    for (Eigen::Index z = 0; z <= vol.depth; ++z)
        for (Eigen::Index y = 0; y < vol.rows; ++y)
            for (Eigen::Index x = 0; x <= vol.cols; ++x)
                e.y(z, y, x) = f * apply_edge_rule(y_edge_voxels(vol, z, y, x), scheme.edge_rule);
    for (Eigen::Index z = 0; z < vol.depth; ++z)
        for (Eigen::Index y = 0; y <= vol.rows; ++y)
            for (Eigen::Index x = 0; x <= vol.cols; ++x)
                e.z(z, y, x) = f * apply_edge_rule(z_edge_voxels(vol, z, y, x), scheme.edge_rule);
    return e;
}

FaceField3D face_weights_3d(const VoxelVolume& vol, const WeightScheme& scheme) {
    const double w2 = scheme.resolve_w2(vol.depth, vol.rows, vol.cols);
    const double f = scheme.w1 * w2 * w2;
    FaceField3D faces;
    faces.xy = Grid3D(vol.depth + 1, vol.rows, vol.cols);
    faces.xz = Grid3D(vol.depth, vol.rows + 1, vol.cols);
    faces.yz = Grid3D(vol.depth, vol.rows, vol.cols + 1);

    for (Eigen::Index z = 0; z <= vol.depth; ++z)
        for (Eigen::Index y = 0; y < vol.rows; ++y)
            for (Eigen::Index x = 0; x < vol.cols; ++x) {
                Samples s;
                if (z - 1 >= 0) s.push(vol(z - 1, y, x));
                if (z < vol.depth) s.push(vol(z, y, x));
                faces.xy(z, y, x) = f * apply_face_rule(s, scheme.face_rule);
            }
    for (Eigen::Index z = 0; z < vol.depth; ++z)
        for (Eigen::Index y = 0; y <= vol.rows; ++y)
            for (Eigen::Index x = 0; x < vol.cols; ++x) {
                Samples s;
                if (y - 1 >= 0) s.push(vol(z, y - 1, x));
                if (y < vol.rows) s.push(vol(z, y, x));
                faces.xz(z, y, x) = f * apply_face_rule(s, scheme.face_rule);
            }
    for (Eigen::Index z = 0; z < vol.depth; ++z)
        for (Eigen::Index y = 0; y < vol.rows; ++y)
            for (Eigen::Index x = 0; x <= vol.cols; ++x) {
                Samples s;
                if (x - 1 >= 0) s.push(vol(z, y, x - 1));
                if (x < vol.cols) s.push(vol(z, y, x));
                faces.yz(z, y, x) = f * apply_face_rule(s, scheme.face_rule);
            }
    return faces;
}

namespace {

struct RicAccum {
    double inv_face = 0.0;      // sum of 1/w(c_i)
    double opposite = 0.0;      // sum of sqrt(w(e_i))/w(c_i)

    void add(double face_w, double opp_edge_w) {
        if (face_w <= 0.0)
            throw std::domain_error("nonpositive 3D face weight " + std::to_string(face_w));
        inv_face += 1.0 / face_w;
        opposite += std::sqrt(opp_edge_w) / face_w;
    }
    double finish(double w0) const {
        return w0 * (w0 * inv_face - std::sqrt(w0) * opposite);
    }
};

}  // namespace

EdgeField3D ricci_edges_3d(const VoxelVolume& vol, const WeightScheme& scheme) {
    const EdgeField3D ew = edge_weights_3d(vol, scheme);
    const FaceField3D fw = face_weights_3d(vol, scheme);
    const Eigen::Index D = vol.depth, H = vol.rows, W = vol.cols;

    EdgeField3D ric = EdgeField3D::zero(vol);

    // x-aligned edge (zi, yi, x): co-faces are xy-squares at y in {yi-1, yi}
    // and xz-squares at z in {zi-1, zi}; the opposite edge mirrors across
    // the square.
    for (Eigen::Index zi = 0; zi <= D; ++zi)
        for (Eigen::Index yi = 0; yi <= H; ++yi)
            for (Eigen::Index x = 0; x < W; ++x) {
                RicAccum acc;
                for (Eigen::Index y0 : {yi - 1, yi})
                    if (y0 >= 0 && y0 < H)
                        acc.add(fw.xy(zi, y0, x), ew.x(zi, 2 * y0 + 1 - yi, x));
                for (Eigen::Index z0 : {zi - 1, zi})
                    if (z0 >= 0 && z0 < D)
                        acc.add(fw.xz(z0, yi, x), ew.x(2 * z0 + 1 - zi, yi, x));
                ric.x(zi, yi, x) = acc.finish(ew.x(zi, yi, x));
            }

    for (Eigen::Index zi = 0; zi <= D; ++zi)
        for (Eigen::Index y = 0; y < H; ++y)
            for (Eigen::Index xi = 0; xi <= W; ++xi) {
                RicAccum acc;
                for (Eigen::Index x0 : {xi - 1, xi})
                    if (x0 >= 0 && x0 < W)
                        acc.add(fw.xy(zi, y, x0), ew.y(zi, y, 2 * x0 + 1 - xi));
                for (Eigen::Index z0 : {zi - 1, zi})
                    if (z0 >= 0 && z0 < D)
                        acc.add(fw.yz(z0, y, xi), ew.y(2 * z0 + 1 - zi, y, xi));
                ric.y(zi, y, xi) = acc.finish(ew.y(zi, y, xi));
            }

    for (Eigen::Index z = 0; z < D; ++z)
        for (Eigen::Index yi = 0; yi <= H; ++yi)
            for (Eigen::Index xi = 0; xi <= W; ++xi) {
                RicAccum acc;
                for (Eigen::Index x0 : {xi - 1, xi})
                    if (x0 >= 0 && x0 < W)
                        acc.add(fw.xz(z, yi, x0), ew.z(z, yi, 2 * x0 + 1 - xi));
                for (Eigen::Index y0 : {yi - 1, yi})
                    if (y0 >= 0 && y0 < H)
                        acc.add(fw.yz(z, y0, xi), ew.z(z, 2 * y0 + 1 - yi, xi));
                ric.z(z, yi, xi) = acc.finish(ew.z(z, yi, xi));
            }

    return ric;
}

}  // namespace curv
