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

#ifndef ELASTOWAVE_FIELD_HPP
#define ELASTOWAVE_FIELD_HPP

#include <array>
#include <complex>

#include "grid.hpp"

namespace elastowave {

enum class Rep { physical, spectral };

/// One real scalar sampled on the grid, held in exactly one representation:
/// real samples (physical) or the half-spectrum coefficients (spectral).
class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(const Grid& g, Rep rep = Rep::physical) : g_(&g), rep_(rep) {
        if (rep == Rep::physical)
            phys_.assign(g.size(), 0.0);
        else
            spec_.assign(g.spec_size(), 0.0);
    }

    const Grid& grid() const { return *g_; }
    bool valid() const { return g_ != nullptr; }
    Rep rep() const { return rep_; }

    avec<double>& phys() {
        require(Rep::physical);
        return phys_;
    }
    const avec<double>& phys() const {
        require(Rep::physical);
        return phys_;
    }
    avec<std::complex<double>>& spec() {
        require(Rep::spectral);
        return spec_;
    }
    const avec<std::complex<double>>& spec() const {
        require(Rep::spectral);
        return spec_;
    }

    double& operator[](std::size_t i) { return phys()[i]; }
    double operator[](std::size_t i) const { return phys()[i]; }

  private:
    void require(Rep r) const {
        if (!g_)
            throw contract_error("field: used before construction");
        if (rep_ != r)
            throw contract_error(r == Rep::physical
                                     ? "field: physical access on spectral representation"
                                     : "field: spectral access on physical representation");
    }

    const Grid* g_ = nullptr;
    Rep rep_ = Rep::physical;
    avec<double> phys_;
    avec<std::complex<double>> spec_;
};

/// Three scalar components v_i.
struct VectorField {
    std::array<ScalarField, 3> c;

    VectorField() = default;
    explicit VectorField(const Grid& g, Rep rep = Rep::physical)
        : c{ScalarField(g, rep), ScalarField(g, rep), ScalarField(g, rep)} {}

    const Grid& grid() const { return c[0].grid(); }
    ScalarField& operator[](int i) { return c[i]; }
    const ScalarField& operator[](int i) const { return c[i]; }
};

/// Nine scalar components G_ij, row-major: (i,j) -> 3*i + j.
struct MatrixField {
    std::array<ScalarField, 9> c;

    MatrixField() = default;
    explicit MatrixField(const Grid& g, Rep rep = Rep::physical) {
        for (auto& f : c)
            f = ScalarField(g, rep);
    }

    const Grid& grid() const { return c[0].grid(); }
    ScalarField& operator()(int i, int j) { return c[3 * i + j]; }
    const ScalarField& operator()(int i, int j) const { return c[3 * i + j]; }
    ScalarField& operator[](int k) { return c[k]; }
    const ScalarField& operator[](int k) const { return c[k]; }
};

}  // namespace elastowave

#endif
