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

#ifndef ELASTOWAVE_GRID_HPP
#define ELASTOWAVE_GRID_HPP

#include <complex>
#include <memory>

#include "common.hpp"

namespace elastowave {

/// Periodic box [-L, L)^3 sampled on an n^3 grid, n even.
///
/// Physical coordinates x_m = -L + m*dx include the origin (m = n/2).
/// Wavenumbers are integer multiples of pi/L; storage is the half-spectrum
/// conjugate-symmetric r2c layout n x n x (n/2+1), last axis contiguous.
/// Radial tables r = |x| and the unit vector w = x/r (w = 0 at the origin
/// cell) are precomputed for the vector-field diagnostics.
class Grid {
  public:
    Grid(int n, double L);
    ~Grid();
    Grid(const Grid&) = delete;
    Grid& operator=(const Grid&) = delete;

    int n() const { return n_; }
    double L() const { return L_; }
    double dx() const { return dx_; }
    std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }
    std::size_t spec_size() const { return static_cast<std::size_t>(n_) * n_ * (n_ / 2 + 1); }
    double cell_volume() const { return dx_ * dx_ * dx_; }
    double box_volume() const { return 8.0 * L_ * L_ * L_; }

    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }
    std::size_t spec_index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_ + j) * (n_ / 2 + 1) + k;
    }

    double coord(int m) const { return coord_[m]; }
    /// Signed wavenumber of full-axis index m (pi/L times m for m <= n/2,
    /// m-n beyond); the Nyquist mode appears exactly once, as +n/2.
    double wavenumber(int m) const { return wavenumber_[m]; }
    int mode(int m) const { return m <= n_ / 2 ? m : m - n_; }

    const avec<double>& r() const { return r_; }
    const avec<double>& w(int axis) const { return w_[axis]; }  // axis 0..2

    // r2c / c2r transforms of one scalar component. Forward output is
    // normalized by 1/n^3, so spectral entries are Fourier coefficients of
    // f(x) = sum c_k exp(i k.x) in index phase. Thread-safe.
    void forward(const double* phys, std::complex<double>* spec) const;
    void backward(const std::complex<double>* spec, double* phys) const;

  private:
    int n_;
    double L_;
    double dx_;
    avec<double> coord_;
    avec<double> wavenumber_;
    avec<double> r_;
    avec<double> w_[3];

    struct Plans;
    std::unique_ptr<Plans> plans_;
};

}  // namespace elastowave

#endif
