/*
   Copyright 2026 The nacf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NACF_ROOTS_HPP
#define NACF_ROOTS_HPP

#include <complex>
#include <vector>

#include <gmpxx.h>

#include "nacf/polyz.hpp"

namespace nacf {

struct ModulusInterval {
  double lo = 0;
  double hi = 0;
};

/**
 * Approximate roots of an integer polynomial with a posteriori error radii.
 *
 * residuals[i] is the relative backward residual |f(z)| / sum |a_k||z|^k.
 * radii[i] is an inclusion radius: every root of f lies in the union of the
 * disks |z - roots[i]| <= radii[i], and a connected component made of k disks
 * holds exactly k roots. modulus_bounds[i] = [|z_i| - r_i, |z_i| + r_i].
 */
struct ComplexRootSet {
  std::vector<std::complex<double>> roots;
  std::vector<double> residuals;
  std::vector<double> radii;
  std::vector<ModulusInterval> modulus_bounds;
  unsigned precision_bits = 53; ///< 53 when the double pass sufficed
  int sweeps = 0;
};

struct SolveOptions {
  double tol = 1e-9;
  int max_sweeps = 1000;
  unsigned mp_start_bits = 128; ///< first multiprecision retry; doubles after
  int max_retries = 4;
};

/// Aberth-Ehrlich iteration from a perturbed circle of radius
/// |a_0/a_d|^{1/d}; deterministic. Throws ConvergenceError when neither the
/// double pass nor any multiprecision retry reaches `tol`.
ComplexRootSet solve_roots(const IntPolynomial &f, const SolveOptions &opts);
ComplexRootSet solve_roots(const IntPolynomial &f, double tol = 1e-9);

struct F1nBoundsReport {
  long n = 0;
  double min_mod = 0;
  double max_mod = 0;
  double lower = 1;       ///< 1
  double upper = 0;       ///< (n+1)^{2/n}
  double max_dev_from_one = 0; ///< max | |alpha| - 1 |
  double max_radius = 0;
  double slack = 0;       ///< numerical allowance on both ends
  bool bound_ok = false;
};

/// Every certified modulus interval of f_{1,n} inside [1 - slack, (n+1)^{2/n} + slack].
F1nBoundsReport check_bounds_f1n(long n, double tol = 1e-9);

struct FpNBoundsReport {
  mpz_class p;
  mpz_class N;
  int degree = 0;
  double min_mod = 0;
  double max_mod = 0;
  double lower = 0; ///< p
  double upper = 0; ///< p^2
  double max_radius = 0;
  double slack = 0;
  bool bound_ok = false;
};

/// Every certified modulus interval of f_{p,N} inside [p - slack, p^2).
/// A constant f_{p,N} (no roots) passes vacuously.
FpNBoundsReport check_bounds_fpN(const mpz_class &p, const mpz_class &N, double tol = 1e-9);

} // namespace nacf

#endif // NACF_ROOTS_HPP
