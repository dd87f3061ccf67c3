#pragma once

#include "curv/complex.hpp"
#include "curv/types.hpp"

#include <vector>

namespace curv::testing {

/// Hand-built neighborhood of one edge: e0 with co-faces c1, c2 (signs +1
/// and -1), the opposite edge in each, and optionally two collinear edges
/// through e0's endpoints.
struct EdgePatch {
    CellComplex complex;
    CellId e0, e1, e2, c1, c2;
};

inline EdgePatch make_edge_patch(double w_e0, double w_e1, double w_e2, double w_c1,
                                 double w_c2, double w_vertex = 0.0,
                                 bool collinear = false, double w_collinear = 0.0) {
    EdgePatch p;
    auto& cx = p.complex;
    const CellId v1 = cx.add_cell(0, w_vertex);
    const CellId v2 = cx.add_cell(0, w_vertex);
    const CellId v3 = cx.add_cell(0, w_vertex);
    const CellId v4 = cx.add_cell(0, w_vertex);
    const CellId v5 = cx.add_cell(0, w_vertex);
    const CellId v6 = cx.add_cell(0, w_vertex);
    p.e0 = cx.add_cell(1, w_e0, {{v1, +1}, {v2, -1}});
    p.e1 = cx.add_cell(1, w_e1, {{v3, +1}, {v4, -1}});
    p.e2 = cx.add_cell(1, w_e2, {{v5, +1}, {v6, -1}});
    p.c1 = cx.add_cell(2, w_c1, {{p.e0, +1}, {p.e1, -1}});
    p.c2 = cx.add_cell(2, w_c2, {{p.e0, -1}, {p.e2, +1}});
    if (collinear) {
        const CellId v7 = cx.add_cell(0, w_vertex);
        const CellId v8 = cx.add_cell(0, w_vertex);
        cx.add_cell(1, w_collinear, {{v7, +1}, {v1, -1}});
        cx.add_cell(1, w_collinear, {{v2, +1}, {v8, -1}});
    }
    cx.finalize();
    return p;
}

/// Edge with four co-face squares of equal weight and the opposite edge in
/// each, mirroring an interior voxel-lattice edge.
struct Edge3DPatch {
    CellComplex complex;
    CellId e0;
};

inline Edge3DPatch make_edge_3d_patch(double w_e0, double w_opposite, double w_face) {
    Edge3DPatch p;
    auto& cx = p.complex;
    const CellId v1 = cx.add_cell(0, 0.0);
    const CellId v2 = cx.add_cell(0, 0.0);
    p.e0 = cx.add_cell(1, w_e0, {{v1, +1}, {v2, -1}});
    for (int i = 0; i < 4; ++i) {
        const CellId a = cx.add_cell(0, 0.0);
        const CellId b = cx.add_cell(0, 0.0);
        const CellId opp = cx.add_cell(1, w_opposite, {{a, +1}, {b, -1}});
        cx.add_cell(2, w_face, {{p.e0, +1}, {opp, -1}});
    }
    cx.finalize();
    return p;
}

/// Copy of a complex with every weight set to 1 (vertices included).
inline CellComplex unit_weight_copy(const CellComplex& src) {
    CellComplex out;
    for (CellId id = 0; id < src.size(); ++id) {
        const Cell& c = src.cell(id);
        out.add_cell(c.dim, 1.0, c.faces);
    }
    out.finalize();
    return out;
}

/// Copy with every weight scaled by lambda.
inline CellComplex scaled_copy(const CellComplex& src, double lambda) {
    CellComplex out;
    for (CellId id = 0; id < src.size(); ++id) {
        const Cell& c = src.cell(id);
        out.add_cell(c.dim, lambda * c.weight, c.faces);
    }
    out.finalize();
    return out;
}

}  // namespace curv::testing
