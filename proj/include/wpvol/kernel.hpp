#pragma once

#include "wpvol/polynomial.hpp"

namespace wpvol {

/// Bernoulli number B_m (B_1 = -1/2 convention), exact.
Rational bernoulli(int m);

/// The rational c with zeta(2i) = c * pi^(2i); zeta(0) = -1/2.
Rational zeta_even_coefficient(int i);

/// zeta(2i) as an element of Q[pi^2].
PiScalar zeta_even(int i);

// F_{2k+1}(t) = int_0^inf x^{2k+1} H(x,t) dx for the recursion kernel
// H(x,t) = 1/(1+e^{(x+t)/2}) + 1/(1+e^{(x-t)/2}), as an exact even
// polynomial of degree 2k+2 in t:
//   F_{2k+1}(t) = (2k+1)! sum_{i=0}^{k+1} zeta(2i)(2^{2i+1}-4) t^{2k+2-2i}/(2k+2-2i)!
VolumePolynomial kernel_moment(int k);

/// Coefficient map of F_{2k+1}: entry m is the coefficient of t^{2m}.
std::vector<PiScalar> kernel_moment_coefficients(int k);

/// (2a+1)!(2b+1)!/(2a+2b+3)!, the weight pairing x^{2a+1} y^{2b+1} against
/// the two-variable kernel: the double integral reduces to this multiple of
/// F_{2a+2b+3}.
Rational kernel_pair_weight(int a, int b);

/// Kernel H(x,t) evaluated numerically (used by quadrature cross-checks).
double kernel_h(double x, double t);

} // namespace wpvol
