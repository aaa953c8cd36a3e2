// Copyright 2026 The Elastowave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ELASTOWAVE_SPECTRAL_HPP
#define ELASTOWAVE_SPECTRAL_HPP

#include <array>

#include "field.hpp"

namespace elastowave {

// Representation changes. Round trip is exact to rounding.
ScalarField to_spectral(const ScalarField& f);
ScalarField to_physical(const ScalarField& f);
VectorField to_physical(const VectorField& f);
MatrixField to_physical(const MatrixField& f);

// Spectral derivative d/dx_axis, axis in {1,2,3}. Accepts either
// representation and returns the physical representation. The Nyquist mode
// is zeroed in odd derivatives to keep the output real-symmetric.
ScalarField partial(const ScalarField& f, int axis);

VectorField gradient(const ScalarField& f);                 // (grad f)_i = d_i f
ScalarField divergence(const VectorField& v);               // d_i v_i
VectorField divergence_rows(const MatrixField& F);          // (div F)_i = d_j F_ij
VectorField divergence_cols(const MatrixField& F);          // d_m F_mi
ScalarField laplacian(const ScalarField& f);

/// L^2-orthogonal projection onto divergence-free fields (exact in Fourier
/// space; the k = 0 mode is untouched).
VectorField leray_project(const VectorField& v);

/// Inverse Laplacian with zero-mean output. The input mean must vanish to
/// 1e-12 relative; otherwise throws std::domain_error naming the magnitude.
ScalarField inv_laplacian(const ScalarField& f);

/// Two-thirds rule: zero every mode with any |mode_axis| > n/3.
ScalarField dealias(const ScalarField& f);
VectorField dealias(const VectorField& f);
MatrixField dealias(const MatrixField& f);

/// Radial derivative d_r f = w . grad f (w = 0 at the origin cell).
ScalarField radial_derivative(const ScalarField& f);
/// Angular momentum components (Omega_i f)_{i=1..3}, Omega = x ^ grad.
std::array<ScalarField, 3> angular_part(const ScalarField& f);

// Pointwise helpers (physical representation).
ScalarField pointwise_product(const ScalarField& a, const ScalarField& b);
ScalarField coordinate_multiply(const ScalarField& f, int axis);  // x_axis * f

// Norms and integrals (deterministic compensated reductions, physical rep).
double l2_norm(const ScalarField& f);   // sqrt(int f^2 dx)
double l2_norm(const VectorField& f);
double l2_norm(const MatrixField& f);
double sup_norm(const ScalarField& f);
double sup_norm(const VectorField& f);
double sup_norm(const MatrixField& f);
double inner(const ScalarField& a, const ScalarField& b);  // int a b dx
double mean(const ScalarField& f);
double spectral_energy(const ScalarField& f);  // Parseval partner of int f^2 dx

// In-place arithmetic used by the kernels (physical rep, same grid).
void axpy(double a, const ScalarField& x, ScalarField& y);  // y += a*x
void scale(ScalarField& f, double a);
void scale(VectorField& f, double a);
void scale(MatrixField& f, double a);

}  // namespace elastowave

#endif
