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

#include "grid.hpp"

#include <fftw3.h>

#include <cmath>

namespace elastowave {

struct Grid::Plans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    avec<double> scratch_phys;
    avec<std::complex<double>> scratch_spec;

    ~Plans() {
        if (fwd)
            fftw_destroy_plan(fwd);
        if (bwd)
            fftw_destroy_plan(bwd);
    }
};

Grid::Grid(int n, double L) : n_(n), L_(L) {
    if (n < 8 || n % 2 != 0)
        throw config_error("grid: n must be even and >= 8, got " + std::to_string(n));
    if (!(L > 0.0))
        throw config_error("grid: box half-length must be positive");
    dx_ = 2.0 * L / n;

    coord_.resize(n);
    wavenumber_.resize(n);
    for (int m = 0; m < n; ++m) {
        coord_[m] = -L + m * dx_;
        wavenumber_[m] = (M_PI / L) * mode(m);
    }

    r_.resize(size());
    for (auto& w : w_)
        w.resize(size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::size_t idx = index(i, j, k);
                double x = coord_[i], y = coord_[j], z = coord_[k];
                double rr = std::sqrt(x * x + y * y + z * z);
                r_[idx] = rr;
                if (rr > 0.0) {
                    w_[0][idx] = x / rr;
                    w_[1][idx] = y / rr;
                    w_[2][idx] = z / rr;
                } else {
                    w_[0][idx] = w_[1][idx] = w_[2][idx] = 0.0;
                }
            }

    plans_ = std::make_unique<Plans>();
    plans_->scratch_phys.resize(size());
    plans_->scratch_spec.resize(spec_size());
    // Plans are created once on aligned scratch and executed on other
    // (equally aligned) arrays via the new-array interface.
    plans_->fwd = fftw_plan_dft_r2c_3d(n, n, n, plans_->scratch_phys.data(),
                                       reinterpret_cast<fftw_complex*>(plans_->scratch_spec.data()),
                                       FFTW_ESTIMATE);
    plans_->bwd = fftw_plan_dft_c2r_3d(n, n, n,
                                       reinterpret_cast<fftw_complex*>(plans_->scratch_spec.data()),
                                       plans_->scratch_phys.data(), FFTW_ESTIMATE);
}

Grid::~Grid() = default;

void Grid::forward(const double* phys, std::complex<double>* spec) const {
    // r2c preserves its input (only c2r destroys input by default).
    fftw_execute_dft_r2c(plans_->fwd, const_cast<double*>(phys),
                         reinterpret_cast<fftw_complex*>(spec));
    const double norm = 1.0 / static_cast<double>(size());
    for (std::size_t i = 0; i < spec_size(); ++i)
        spec[i] *= norm;
}

void Grid::backward(const std::complex<double>* spec, double* phys) const {
    // c2r destroys its input; transform a copy.
    avec<std::complex<double>> tmp(spec_size());
    for (std::size_t i = 0; i < spec_size(); ++i)
        tmp[i] = spec[i];
    fftw_execute_dft_c2r(plans_->bwd, reinterpret_cast<fftw_complex*>(tmp.data()), phys);
}

}  // namespace elastowave
