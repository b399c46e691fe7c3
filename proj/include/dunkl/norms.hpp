#pragma once

// Weighted L^p norms on the line for functions given by evaluation, with an
// optional power-law tail continued analytically past the sampled range.

#include "dunkl/functions.hpp"

#include <functional>
#include <optional>

namespace dunkl {

struct NormLayout {
  double scale = 1.0;    // panel width near the origin
  double extent = 16.0;  // sampled range [-extent, extent]
  int points = 16;
  double inner = 8.0;    // equal panels up to inner * scale, doubling beyond
};

/// (int |F|^p |x|^{2 kappa} dx)^{1/p}. With tail_exponent q the contribution
/// beyond the extent follows x^{-q} (c0 + c1 x^{-2}), fitted at E and E/2 on each side.
double line_lp_norm(const std::function<double(double)>& F, double kappa, double p, const NormLayout& layout,
                    Parity parity = Parity::none, std::optional<double> tail_exponent = std::nullopt);

/// Nodes and weights (including |x|^{2 kappa}) of the rule used by line_lp_norm on [0, extent].
void half_line_rule(double kappa, const NormLayout& layout, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace dunkl
