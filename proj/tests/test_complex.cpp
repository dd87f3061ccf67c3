#include "curv/complex.hpp"
#include "curv/cubical.hpp"
#include "curv/oracle.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace curv;
using namespace curv::testing;

TEST_CASE("parallel cells of an interior 2D lattice edge") {
    WeightScheme scheme;
    std::mt19937 rng(11);
    const Cubical2D cx = build_cubical_2d(random_image(4, 4, rng), scheme);

    // interior horizontal edge away from the border: 2 opposite-in-pixel
    // plus 2 collinear-through-vertex
    const CellId e = cx.interior_h_edge(1, 1);
    const auto par = parallel_cells(cx.complex, e);
    CHECK(par.size() == 4);
    const std::set<CellId> expected{cx.interior_h_edge(0, 1), cx.interior_h_edge(2, 1),
                                    cx.h_edge(2, 0), cx.h_edge(2, 2)};
    CHECK(std::set<CellId>(par.begin(), par.end()) == expected);
}

TEST_CASE("parallel cells: single-cell complex and invalid ids") {
    CellComplex cx;
    const CellId v = cx.add_cell(0, 1.0);
    cx.finalize();
    CHECK(parallel_cells(cx, v).empty());
    CHECK_THROWS_AS(parallel_cells(cx, 99), std::out_of_range);
}

TEST_CASE("parallel cells of an interior 3D lattice edge") {
    WeightScheme scheme;
    VoxelVolume vol(3, 3, 3, 0.5);
    const Cubical3D cx = build_cubical_3d(vol, scheme);
    // fully interior x-edge of a 3x3x3 lattice: 4 opposite + 2 collinear
    CHECK(parallel_cells(cx.complex, cx.x_edge(1, 1, 1)).size() == 6);
}

TEST_CASE("parallelism is symmetric, irreflexive, dimension-preserving") {
    std::mt19937 rng(5);
    const Cubical2D cx = build_cubical_2d(random_image(4, 5, rng), WeightScheme{});
    for (CellId a = 0; a < cx.complex.size(); ++a) {
        for (CellId b : parallel_cells(cx.complex, a)) {
            CHECK(b != a);
            CHECK(cx.complex.cell(b).dim == cx.complex.cell(a).dim);
            const auto back = parallel_cells(cx.complex, b);
            CHECK(std::count(back.begin(), back.end(), a) == 1);
        }
    }
}

TEST_CASE("curvature function worked values") {
    SUBCASE("unit weights, interior edge with four parallels") {
        const EdgePatch p = make_edge_patch(1, 1, 1, 1, 1, 0.0, true, 1.0);
        CHECK(curvature_function(p.complex, p.e0) == doctest::Approx(0.0));
    }
    SUBCASE("zero-weight cell has zero curvature") {
        const EdgePatch p = make_edge_patch(0, 1, 1, 2, 2);
        CHECK(curvature_function(p.complex, p.e0) == 0.0);
    }
    SUBCASE("weighted interior edge") {
        const EdgePatch p = make_edge_patch(4, 1, 1, 2, 2);
        CHECK(curvature_function(p.complex, p.e0) == doctest::Approx(8.0));
    }
    SUBCASE("zero co-face weight under nonzero numerator is an error") {
        const EdgePatch p = make_edge_patch(4, 1, 1, 0.0, 2);
        CHECK_THROWS_AS(curvature_function(p.complex, p.e0), std::domain_error);
    }
}

TEST_CASE("curvature function 3D worked value") {
    // four co-faces of weight 2, opposite edges of weight 1, own weight 4
    const Edge3DPatch p = make_edge_3d_patch(4, 1, 2);
    CHECK(curvature_function(p.complex, p.e0) == doctest::Approx(16.0));
}

TEST_CASE("combinatorial curvature") {
    SUBCASE("interior 2D edge") {
        std::mt19937 rng(2);
        const Cubical2D cx = build_cubical_2d(random_image(4, 4, rng), WeightScheme{});
        CHECK(combinatorial_curvature(cx.complex, cx.interior_h_edge(1, 1)) == 0);
        CHECK(combinatorial_curvature(cx.complex, cx.interior_v_edge(1, 1)) == 0);
    }
    SUBCASE("interior 3D edge") {
        const Cubical3D cx = build_cubical_3d(VoxelVolume(3, 3, 3, 0.5), WeightScheme{});
        CHECK(combinatorial_curvature(cx.complex, cx.x_edge(1, 1, 1)) == 0);
        CHECK(combinatorial_curvature(cx.complex, cx.y_edge(1, 1, 1)) == 0);
        CHECK(combinatorial_curvature(cx.complex, cx.z_edge(1, 1, 1)) == 0);
    }
    SUBCASE("isolated edge") {
        CellComplex cx;
        const CellId v1 = cx.add_cell(0, 1.0);
        const CellId v2 = cx.add_cell(0, 1.0);
        const CellId e = cx.add_cell(1, 1.0, {{v1, +1}, {v2, -1}});
        cx.finalize();
        CHECK(combinatorial_curvature(cx, e) == 2);
    }
}

TEST_CASE("laplacian entry worked values") {
    SUBCASE("diagonal, PaperImage convention") {
        const EdgePatch p = make_edge_patch(4, 1, 1, 2, 4);
        CHECK(laplacian_entry(p.complex, p.e0, p.e0, EpsilonConvention::PaperImage) ==
              doctest::Approx(1.0));
        // Standard convention adds both co-face terms
        CHECK(laplacian_entry(p.complex, p.e0, p.e0, EpsilonConvention::Standard) ==
              doctest::Approx(3.0));
    }
    SUBCASE("two pixels across an edge") {
        const EdgePatch p = make_edge_patch(6, 0, 0, 4, 9);
        const double v =
            laplacian_entry(p.complex, p.c1, p.c2, EpsilonConvention::PaperImage);
        CHECK(std::abs(v) == doctest::Approx(1.0));
    }
    SUBCASE("cells sharing nothing give zero") {
        const EdgePatch p = make_edge_patch(1, 1, 1, 1, 1);
        CHECK(laplacian_entry(p.complex, p.e1, p.e2, EpsilonConvention::Standard) == 0.0);
    }
    SUBCASE("dimension mismatch") {
        const EdgePatch p = make_edge_patch(1, 1, 1, 1, 1);
        CHECK_THROWS_AS(laplacian_entry(p.complex, p.e0, p.c1, EpsilonConvention::Standard),
                        std::invalid_argument);
    }
    SUBCASE("zero divisor reported with the offending cell") {
        const EdgePatch p = make_edge_patch(4, 1, 1, 0.0, 2);
        try {
            laplacian_entry(p.complex, p.e0, p.e0, EpsilonConvention::Standard);
            FAIL("expected std::domain_error");
        } catch (const std::domain_error& e) {
            CHECK(std::string(e.what()).find(std::to_string(p.c1)) != std::string::npos);
        }
    }
}

TEST_CASE("bochner diagonal") {
    SUBCASE("zero-weight cell reduces to the laplacian") {
        const EdgePatch p = make_edge_patch(0, 1, 1, 2, 4);
        CHECK(bochner_diagonal(p.complex, p.e0, EpsilonConvention::PaperImage) ==
              laplacian_entry(p.complex, p.e0, p.e0, EpsilonConvention::PaperImage));
    }
    SUBCASE("unit weights vanish") {
        const EdgePatch p = make_edge_patch(1, 1, 1, 1, 1);
        CHECK(bochner_diagonal(p.complex, p.e0, EpsilonConvention::PaperImage) ==
              doctest::Approx(0.0));
    }
    SUBCASE("worked example") {
        const EdgePatch p = make_edge_patch(4, 1, 1, 2, 4);
        CHECK(curvature_function(p.complex, p.e0) == doctest::Approx(6.0));
        CHECK(bochner_diagonal(p.complex, p.e0, EpsilonConvention::PaperImage) ==
              doctest::Approx(-5.0));
    }
}

TEST_CASE("homogeneity and scale invariance under uniform weight scaling") {
    std::mt19937 rng(17);
    const Cubical2D cx = build_cubical_2d(random_image(5, 4, rng), WeightScheme{});
    for (double lambda : {0.5, 3.0}) {
        const CellComplex scaled = scaled_copy(cx.complex, lambda);
        for (CellId a = 0; a < cx.complex.size(); ++a) {
            const double base = curvature_function(cx.complex, a);
            CHECK(curvature_function(scaled, a) ==
                  doctest::Approx(lambda * base).epsilon(1e-12));
            if (cx.complex.cell(a).dim == 1) {
                CHECK(laplacian_entry(scaled, a, a, EpsilonConvention::PaperImage) ==
                      doctest::Approx(
                          laplacian_entry(cx.complex, a, a, EpsilonConvention::PaperImage))
                          .epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("unit-weight curvature equals the combinatorial count on cubical lattices") {
    std::mt19937 rng(23);
    const Cubical2D cx2 = build_cubical_2d(random_image(4, 4, rng), WeightScheme{});
    const CellComplex unit2 = unit_weight_copy(cx2.complex);
    for (CellId a = 0; a < unit2.size(); ++a)
        CHECK(curvature_function(unit2, a) ==
              doctest::Approx(static_cast<double>(combinatorial_curvature(unit2, a))));

    const Cubical3D cx3 = build_cubical_3d(VoxelVolume(2, 2, 2, 0.5), WeightScheme{});
    const CellComplex unit3 = unit_weight_copy(cx3.complex);
    for (CellId a = 0; a < unit3.size(); ++a)
        CHECK(curvature_function(unit3, a) ==
              doctest::Approx(static_cast<double>(combinatorial_curvature(unit3, a))));
}

TEST_CASE("invalid cell ids are rejected") {
    const EdgePatch p = make_edge_patch(1, 1, 1, 1, 1);
    CHECK_THROWS_AS(curvature_function(p.complex, 1000), std::out_of_range);
    CHECK_THROWS_AS(combinatorial_curvature(p.complex, 1000), std::out_of_range);
}
