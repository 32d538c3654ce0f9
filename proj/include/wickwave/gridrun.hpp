#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wickwave/config.hpp"

namespace wickwave {

// Dense evaluation of a configured solution over its grid. Pole hits become
// NaN cells and are counted, not fatal.
struct GridResult {
  GridSpec2D grid;
  bool complex_valued = false;
  std::vector<Complex> values;  // row-major, t slowest
  std::size_t excluded_points = 0;

  std::size_t total_points() const { return grid.nx * grid.nt; }
};

// n_threads <= 0 picks a sensible default. Output is deterministic and
// independent of the thread count.
GridResult evaluate_grid(const RunConfig& cfg, int n_threads = 0);

// Columns are x,t,re,im,abs for complex fields and x,t,value otherwise;
// rows sweep x fastest. Values print as %.17g with LF line ends, so repeat
// runs are byte-identical.
void write_csv(const GridResult& result, const std::string& path);

// Minimal heatmap raster (one rect per cell, diverging palette, NaN in gray).
void write_svg_heatmap(const GridResult& result, const std::string& path);

// Brownian path table t,B for external inspection.
void write_noise_csv(std::uint64_t seed, double t_end, double dt, const std::string& path);

// Long-time probes attached to the rlw figures: the family-1 amplitude max
// over x in [-10,10] at t = 1e4 for alpha in {0.25, 0.5}, and the family-4
// small-amplitude envelope max over t in [80,120]. The envelope is reported
// as measured, nothing is asserted about it here.
struct FigureProbes {
  double decay_alpha025 = 0.0;
  double decay_alpha05 = 0.0;
  double v4_envelope = 0.0;

  std::string to_json() const;
};
FigureProbes rlw_figure_probes(const RealFn& noise_term);

// Known figure presets: fig1, fig2 (nls panels a/b), fig3, fig4 (rlw at
// alpha 0.25/0.5/1 plus a probes sidecar). Returns the files written.
std::vector<std::string> run_figure(const std::string& name, const std::string& outdir,
                                    const GridSpec2D* grid_override = nullptr);

}  // namespace wickwave
