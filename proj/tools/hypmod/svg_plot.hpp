#pragma once

#include <ostream>

#include "hypmod/closed_form.hpp"

namespace hypmod::cli {

struct PlotOptions {
    FamilyKind family = FamilyKind::quad_arcs;
    bool density = false;
    int grid_n = 256;  // density raster resolution
    int n_curves = 12; // subfamily curves drawn
};

/// Self-contained SVG of Q(a,1): boundary (two sampled circular arcs, two
/// horizontal segments), the sampled subfamily, and optionally a log-scaled
/// heatmap of the extremal density. Byte-deterministic for fixed inputs.
void write_quad_plot(std::ostream& out, double a, const PlotOptions& options);

/// Same for an annulus: the two Euclidean boundary circles, subfamily
/// curves, optional density heatmap.
void write_annulus_plot(std::ostream& out, const Annulus& annulus,
                        const PlotOptions& options);

} // namespace hypmod::cli
