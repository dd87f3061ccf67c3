#include "curv/complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace curv {

namespace {

[[noreturn]] void throw_zero_divisor(CellId cell) {
    throw std::domain_error("zero weight divisor at cell " + std::to_string(cell));
}

// Terms of Eqs for F_p and box_p: numerator 0 means the term is 0 even if
// the divisor is 0 (vertex weights are 0 in the image complexes).
double safe_div(double num, double den, CellId divisor_cell) {
    if (num == 0.0) return 0.0;
    if (den == 0.0) throw_zero_divisor(divisor_cell);
    return num / den;
}

}  // namespace

CellId CellComplex::add_cell(int dim, double weight,
                             std::vector<std::pair<CellId, int>> faces) {
    if (dim < 0) throw std::invalid_argument("cell dimension must be >= 0");
    if (weight < 0.0 || !std::isfinite(weight))
        throw std::invalid_argument("cell weight must be finite and >= 0");
    for (const auto& [f, s] : faces) {
        if (f >= cells_.size()) throw std::out_of_range("unknown face id");
        if (cells_[f].dim != dim - 1)
            throw std::invalid_argument("face dimension must be dim-1");
        if (s != 1 && s != -1)
            throw std::invalid_argument("orientation must be +1 or -1");
    }
    cells_.push_back(Cell{dim, weight, std::move(faces)});
    finalized_ = false;
    return cells_.size() - 1;
}

void CellComplex::finalize() {
    cofaces_.assign(cells_.size(), {});
    for (CellId id = 0; id < cells_.size(); ++id)
        for (const auto& [f, s] : cells_[id].faces)
            cofaces_[f].emplace_back(id, s);
    finalized_ = true;
}

const Cell& CellComplex::cell(CellId id) const {
    if (id >= cells_.size()) throw std::out_of_range("invalid cell id");
    return cells_[id];
}

const std::vector<std::pair<CellId, int>>& CellComplex::cofaces(CellId id) const {
    require_finalized();
    if (id >= cells_.size()) throw std::out_of_range("invalid cell id");
    return cofaces_[id];
}

void CellComplex::require_finalized() const {
    if (!finalized_)
        throw std::logic_error("CellComplex::finalize() must be called first");
}

bool CellComplex::boundary_squares_to_zero() const {
    for (const Cell& c : cells_) {
        // signed incidence of each (dim-2)-cell through the faces of c
        std::map<CellId, long> acc;
        for (const auto& [f, sf] : c.faces)
            for (const auto& [g, sg] : cells_[f].faces) acc[g] += long(sf) * sg;
        for (const auto& [g, total] : acc)
            if (total != 0) return false;
    }
    return true;
}

std::vector<CellId> parallel_cells(const CellComplex& complex, CellId a) {
    complex.require_finalized();
    const Cell& ca = complex.cell(a);

    std::set<CellId> share_up, share_down;
    for (const auto& [b, sb] : complex.cofaces_[a])
        for (const auto& [other, so] : complex.cells_[b].faces)
            if (other != a) share_up.insert(other);
    for (const auto& [g, sg] : ca.faces)
        for (const auto& [other, so] : complex.cofaces_[g])
            if (other != a) share_down.insert(other);

    std::vector<CellId> out;
    for (CellId b : share_up)
        if (!share_down.count(b)) out.push_back(b);
    for (CellId b : share_down)
        if (!share_up.count(b)) out.push_back(b);
    std::sort(out.begin(), out.end());
    return out;
}

double curvature_function(const CellComplex& complex, CellId a) {
    complex.require_finalized();
    const Cell& ca = complex.cell(a);
    const double wa = ca.weight;

    double up = 0.0;
    for (const auto& [b, sb] : complex.cofaces_[a])
        up += safe_div(wa, complex.cells_[b].weight, b);

    double down = 0.0;
    for (const auto& [g, sg] : ca.faces)
        down += safe_div(complex.cells_[g].weight, wa, a);

    double par = 0.0;
    for (CellId a1 : parallel_cells(complex, a)) {
        const double w1 = complex.cells_[a1].weight;
        const double cross = std::sqrt(wa * w1);
        double term = 0.0;
        for (const auto& [b, sb] : complex.cofaces_[a])
            for (const auto& [b1, s1] : complex.cofaces_[a1])
                if (b == b1) term += safe_div(cross, complex.cells_[b].weight, b);
        for (const auto& [g, sg] : ca.faces)
            for (const auto& [g1, s1] : complex.cells_[a1].faces)
                if (g == g1) term -= safe_div(complex.cells_[g].weight, cross, a);
        par += std::abs(term);
    }

    return wa * (up + down - par);
}

long combinatorial_curvature(const CellComplex& complex, CellId a) {
    complex.require_finalized();
    const Cell& ca = complex.cell(a);
    return static_cast<long>(complex.cofaces_[a].size()) +
           static_cast<long>(ca.faces.size()) -
           static_cast<long>(parallel_cells(complex, a).size());
}

double laplacian_entry(const CellComplex& complex, CellId a1, CellId a2,
                       EpsilonConvention conv) {
    complex.require_finalized();
    const Cell& c1 = complex.cell(a1);
    const Cell& c2 = complex.cell(a2);
    if (c1.dim != c2.dim)
        throw std::invalid_argument("laplacian_entry requires equal-dimensional cells");

    const bool diagonal = (a1 == a2);
    const double cross = std::sqrt(c1.weight * c2.weight);

    double total = 0.0;
    for (const auto& [b, s1] : complex.cofaces_[a1])
        for (const auto& [b2, s2] : complex.cofaces_[a2])
            if (b == b2) {
                const int eps = (diagonal && conv == EpsilonConvention::PaperImage)
                                    ? s1
                                    : s1 * s2;
                total += eps * safe_div(cross, complex.cells_[b].weight, b);
            }
    for (const auto& [g, s1] : c1.faces)
        for (const auto& [g2, s2] : c2.faces)
            if (g == g2) {
                const int eps = (diagonal && conv == EpsilonConvention::PaperImage)
                                    ? s1
                                    : s1 * s2;
                const double wg = complex.cells_[g].weight;
                if (wg != 0.0 && cross == 0.0) throw_zero_divisor(a1);
                total += (wg == 0.0) ? 0.0 : eps * wg / cross;
            }
    return total;
}

double bochner_diagonal(const CellComplex& complex, CellId a,
                        EpsilonConvention conv) {
    return laplacian_entry(complex, a, a, conv) - curvature_function(complex, a);
}

}  // namespace curv
