#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace curv {

using CellId = std::size_t;

/// Sign convention for the epsilon factors of the p-Laplacian.
///
/// Standard: epsilon is the product of the two incidence signs (so diagonal
/// entries always add with +).
/// PaperImage: off-diagonal entries as in Standard, but a diagonal entry
/// takes the bare incidence sign of the cell in each co-face / face, so the
/// two co-faces of an interior image edge enter with opposite signs.
enum class EpsilonConvention { Standard, PaperImage };

struct Cell {
    int dim = 0;
    double weight = 0.0;
    /// (face id, orientation), every face has dimension dim-1.
    std::vector<std::pair<CellId, int>> faces;
};

/// Weighted cell complex evaluated by explicit enumeration. Construction is
/// add_cell calls followed by finalize(); all queries afterwards are
/// read-only and thread-safe.
class CellComplex {
public:
    CellId add_cell(int dim, double weight,
                    std::vector<std::pair<CellId, int>> faces = {});

    /// Builds the co-face index and validates face dimensions and weights.
    void finalize();

    std::size_t size() const { return cells_.size(); }
    const Cell& cell(CellId id) const;
    const std::vector<std::pair<CellId, int>>& cofaces(CellId id) const;

    /// Signed double boundary through every intermediate cell; zero for a
    /// well-formed complex. Exposed for property tests.
    bool boundary_squares_to_zero() const;

private:
    std::vector<Cell> cells_;
    std::vector<std::vector<std::pair<CellId, int>>> cofaces_;
    bool finalized_ = false;

    void require_finalized() const;
    friend std::vector<CellId> parallel_cells(const CellComplex&, CellId);
    friend double curvature_function(const CellComplex&, CellId);
    friend long combinatorial_curvature(const CellComplex&, CellId);
    friend double laplacian_entry(const CellComplex&, CellId, CellId,
                                  EpsilonConvention);
};

/// All cells of the same dimension sharing a co-face or a face with `a`,
/// but not both. Sorted by id.
std::vector<CellId> parallel_cells(const CellComplex& complex, CellId a);

/// Forman's curvature function F_p(a) for standard-type weights, by direct
/// enumeration of co-faces, faces, and parallel cells. Terms with zero
/// numerator count as zero; a zero divisor under a nonzero numerator throws
/// std::domain_error naming the offending cell.
double curvature_function(const CellComplex& complex, CellId a);

/// Unit-weight curvature: #cofaces + #faces - #parallel cells.
long combinatorial_curvature(const CellComplex& complex, CellId a);

/// Entry of the combinatorial p-Laplacian for two cells of equal dimension.
double laplacian_entry(const CellComplex& complex, CellId a1, CellId a2,
                       EpsilonConvention conv);

/// Diagonal of the Bochner (rough) Laplacian: box_p(a,a) - F_p(a).
double bochner_diagonal(const CellComplex& complex, CellId a,
                        EpsilonConvention conv);

}  // namespace curv
