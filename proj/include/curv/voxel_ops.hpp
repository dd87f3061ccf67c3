#pragma once

#include "curv/types.hpp"

namespace curv {

/// Square weights of the voxel lattice, one grid per normal axis.
/// xy (normal z): (D+1) x H x W; xz (normal y): D x (H+1) x W;
/// yz (normal x): D x H x (W+1).
struct FaceField3D {
    Grid3D xy, xz, yz;
};

/// Edge weights from the scheme's 3D edge rule applied to the <=4 incident
/// voxel heights, scaled by w1*w2.
EdgeField3D edge_weights_3d(const VoxelVolume& volume, const WeightScheme& scheme);

/// Square weights from the scheme's 3D face rule applied to the <=2 incident
/// voxel heights, scaled by w1*w2^2.
FaceField3D face_weights_3d(const VoxelVolume& volume, const WeightScheme& scheme);

/// Ricci curvature of every lattice edge:
///   Ric(e0) = w(e0)[w(e0) * sum_i 1/w(c_i)
///                   - sqrt(w(e0)) * sum_i sqrt(w(e_i))/w(c_i)],
/// summing over the existing co-face squares c_i with their opposite edges
/// e_i. Throws std::domain_error on a nonpositive square weight.
EdgeField3D ricci_edges_3d(const VoxelVolume& volume, const WeightScheme& scheme);

}  // namespace curv
