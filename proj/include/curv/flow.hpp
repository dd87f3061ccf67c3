#pragma once

#include "curv/image_ops.hpp"
#include "curv/types.hpp"

#include <vector>

namespace curv {

struct FlowConfig {
    double dt = 1e-3;
    int steps = 0;
    double floor = 0.0;
    /// Rescale edge weights after each step so the total stays at its
    /// initial value.
    bool renormalize = false;
};

/// One explicit Euler step of d l/dt = -2 Ric(e): w'(e) = w(e) - 2 dt Ric(e),
/// clamped at `floor`. Pixel (face) weights stay fixed.
template <class Scalar>
EdgeFieldT<Scalar> flow_step(const EdgeFieldT<Scalar>& edges, const Grid<Scalar>& pixels,
                             double dt, double floor = 0.0) {
    const EdgeFieldT<Scalar> ric = ricci_from_weights(edges, pixels);
    EdgeFieldT<Scalar> out;
    out.horizontal =
        (edges.horizontal - Scalar(2 * dt) * ric.horizontal).max(Scalar(floor));
    out.vertical = (edges.vertical - Scalar(2 * dt) * ric.vertical).max(Scalar(floor));
    return out;
}

/// Iterates flow_step from the image's edge weights; returns the trace of
/// steps+1 fields including the initial one.
template <class Scalar>
std::vector<EdgeFieldT<Scalar>> run_flow(const GrayImageT<Scalar>& image,
                                         const WeightScheme& scheme,
                                         const FlowConfig& cfg) {
    if (cfg.dt <= 0.0) throw std::invalid_argument("flow: dt must be > 0");
    if (cfg.steps < 0) throw std::invalid_argument("flow: steps must be >= 0");

    const Grid<Scalar> pixels = pixel_weights(image, scheme);
    std::vector<EdgeFieldT<Scalar>> trace;
    trace.reserve(static_cast<std::size_t>(cfg.steps) + 1);
    trace.push_back(edge_weights(image, scheme));
    const Scalar initial_mass = trace.front().horizontal.sum() + trace.front().vertical.sum();

    for (int s = 0; s < cfg.steps; ++s) {
        EdgeFieldT<Scalar> next = flow_step(trace.back(), pixels, cfg.dt, cfg.floor);
        if (cfg.renormalize) {
            const Scalar mass = next.horizontal.sum() + next.vertical.sum();
            if (mass > Scalar(0)) {
                const Scalar scale = initial_mass / mass;
                next.horizontal *= scale;
                next.vertical *= scale;
            }
        }
        trace.push_back(std::move(next));
    }
    return trace;
}

}  // namespace curv
