#pragma once

// Veronese embeddings FP^2 -> S^{3m+1} for F = R, C, H (m = dim_R F), and a
// finite-difference mean-curvature probe for maps into the unit sphere.
//
//   [u:v:w] -> (sqrt3 v w*, sqrt3 w u*, sqrt3 u v*, (sqrt3/2)(|u|^2-|v|^2),
//               (1/2)(2|w|^2-|u|^2-|v|^2)) / (|u|^2+|v|^2+|w|^2)
//
// The fourth slot carries sqrt3/2; with 3/2 the image of [1:0:0] would have
// norm sqrt(10)/2 and leave the sphere.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "conindex/quaternion.hpp"

namespace conindex {

enum class NormedField { R, C, H };

std::string_view to_string(NormedField f);
NormedField parse_field(std::string_view s);

struct VeroneseField {
  NormedField tag = NormedField::R;

  int m() const { return tag == NormedField::R ? 1 : tag == NormedField::C ? 2 : 4; }
  int domain_dim() const { return 2 * m(); }
  int ambient_dim() const { return 3 * m() + 2; }
};

// Homogeneous coordinates; components outside the field (e.g. j, k parts for C) must be zero.
std::vector<double> veronese_embed(VeroneseField f, const std::array<Quaternion, 3>& point);

// Packs 3m real coordinates (u, v, w) into quaternions and embeds.
std::vector<double> veronese_embed(VeroneseField f, std::span<const double> coords);

// Map from a chart of R^k into R^N whose image should lie in the unit sphere.
using ChartMap = std::function<void(std::span<const double> x, std::span<double> out)>;

// Norm of the spherical mean-curvature vector at x, by central differences with step h:
// trace of the second derivatives w.r.t. the induced metric, with the tangent
// plane and the radial direction projected out.
std::vector<double> spherical_mean_curvature(const ChartMap& map, std::size_t domain_dim, std::size_t ambient_dim,
                                             std::span<const double> x, double h);

struct MinimalityReport {
  double residual = 0.0;       // sup over chart points, Richardson-extrapolated from steps h and h/2
  double residual_h = 0.0;     // raw sup at step h
  double residual_half = 0.0;  // raw sup at step h/2
  double observed_order = 0.0; // log2(residual_h / residual_half)
  std::size_t points = 0;
  double step = 0.0;
};

// Chart points: a tensor grid of [-1,1]^k when k = 2, otherwise grid^2 Halton
// points of [-1,1]^k. The finite-difference step is the grid spacing 2/(grid-1).
std::vector<std::vector<double>> chart_points(std::size_t domain_dim, std::size_t grid);

MinimalityReport minimality_residual(const ChartMap& map, std::size_t domain_dim, std::size_t ambient_dim,
                                     std::size_t grid);

// Affine chart w = 1 of the Veronese embedding. grid < 8 is rejected.
MinimalityReport veronese_minimality_residual(VeroneseField f, std::size_t grid);

ChartMap veronese_chart(VeroneseField f);

}  // namespace conindex
