#pragma once

// Checks that span several modules: grid Plancherel and inversion, the
// Gaussian eigenfunctions, agreement of the translation routes, and norm
// ratios ||T f|| / ||f|| of the bounded operators over function families.

#include "dunkl/functions.hpp"
#include "dunkl/report.hpp"
#include "dunkl/transform.hpp"

#include <span>
#include <vector>

namespace dunkl {

/// Twenty Schwartz functions whose transforms are resolved on the default grid.
std::vector<Function1D> schwartz_family();

/// ||f^||_2 = ||f||_2 and inverse(forward f) = f on the grid, relative to ||f||_2 and sup |f|.
OperatorReport plancherel_inversion_check(std::span<const Function1D> fs, double kappa, int grid_n = 256,
                                          double cutoff = 12.0, double tolerance = 1e-6);

/// (P_n e^{-x^2/2})^ = (-i)^n P_n e^{-xi^2/2} with P_0 = 1, P_1 = x.
OperatorReport eigenfunction_check(int n, double kappa, int grid_n = 256, double cutoff = 12.0,
                                   double tolerance = 1e-8);

/// Explicit, spectral and (for even f) radial translates agree pairwise at the grid nodes with |x| <= 6.
OperatorReport translation_routes_check(const Function1D& f, double kappa, double y, double tolerance = 1e-7);

/// tau_y e^{-s^2 x^2} = e^{-s^2 (x^2 + y^2)} E(2 s^2 x, y).
OperatorReport gaussian_translate_check(double kappa, double s, double tolerance = 1e-8);

enum class NormedOperator { maximal, riesz_potential, bessel_potential, riesz_transform };
const char* operator_name(NormedOperator op);

struct NormRatioSpec {
  NormedOperator op = NormedOperator::riesz_transform;
  double kappa = 1.0;
  double p = 2.0;        // input exponent; the Riesz potential maps L^p to L^q with 1/q = 1/p - alpha/(2k+1)
  double alpha = 0.5;    // potentials only
  double bound = 10.0;
};

/// Ten smooth functions of mixed parity.
std::vector<Function1D> boundedness_family();
/// gaussian(s) and odd-gaussian(s) for s = 1/8, 1/4, ..., 8.
std::vector<Function1D> dilation_family();

/// max ||T f|| / ||f|| over the functions against spec.bound; the ratios go to `computed`.
OperatorReport norm_ratio_check(const NormRatioSpec& spec, std::span<const Function1D> fs);

}  // namespace dunkl
