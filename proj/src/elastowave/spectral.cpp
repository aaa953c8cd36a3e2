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

#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elastowave {

namespace {

using cplx = std::complex<double>;

// Loop over the half-spectrum applying fn(flat_index, mi, mj, mk) with
// signed integer modes (mk >= 0 by the r2c layout).
template <class Fn>
void spec_loop(const Grid& g, Fn&& fn) {
    const int n = g.n();
    const int nz = n / 2 + 1;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        int mi = g.mode(i);
        for (int j = 0; j < n; ++j) {
            int mj = g.mode(j);
            for (int k = 0; k < nz; ++k, ++idx)
                fn(idx, mi, mj, k);
        }
    }
}

ScalarField spectral_copy(const ScalarField& f) {
    return f.rep() == Rep::spectral ? f : to_spectral(f);
}

}  // namespace

ScalarField to_spectral(const ScalarField& f) {
    if (f.rep() != Rep::physical)
        throw contract_error("to_spectral: input already spectral");
    ScalarField out(f.grid(), Rep::spectral);
    f.grid().forward(f.phys().data(), out.spec().data());
    return out;
}

ScalarField to_physical(const ScalarField& f) {
    if (f.rep() != Rep::spectral)
        throw contract_error("to_physical: input already physical");
    ScalarField out(f.grid(), Rep::physical);
    f.grid().backward(f.spec().data(), out.phys().data());
    return out;
}

VectorField to_physical(const VectorField& f) {
    VectorField out;
    for (int i = 0; i < 3; ++i)
        out[i] = f[i].rep() == Rep::spectral ? to_physical(f[i]) : f[i];
    return out;
}

MatrixField to_physical(const MatrixField& f) {
    MatrixField out;
    for (int i = 0; i < 9; ++i)
        out[i] = f[i].rep() == Rep::spectral ? to_physical(f[i]) : f[i];
    return out;
}

ScalarField partial(const ScalarField& f, int axis) {
    if (axis < 1 || axis > 3)
        throw contract_error("partial: axis must be 1..3");
    ScalarField fs = spectral_copy(f);
    const Grid& g = fs.grid();
    const int half = g.n() / 2;
    auto& s = fs.spec();
    spec_loop(g, [&](std::size_t idx, int mi, int mj, int mk) {
        int m = axis == 1 ? mi : axis == 2 ? mj : mk;
        if (std::abs(m) == half) {
            s[idx] = 0.0;  // Nyquist: odd derivative has no real-symmetric image
            return;
        }
        double k = (M_PI / g.L()) * m;
        s[idx] *= cplx(0.0, k);
    });
    return to_physical(fs);
}

VectorField gradient(const ScalarField& f) {
    ScalarField fs = spectral_copy(f);
    VectorField out;
    for (int a = 0; a < 3; ++a)
        out[a] = partial(fs, a + 1);
    return out;
}

ScalarField divergence(const VectorField& v) {
    ScalarField out(v.grid(), Rep::physical);
    for (int a = 0; a < 3; ++a) {
        ScalarField d = partial(v[a], a + 1);
        axpy(1.0, d, out);
    }
    return out;
}

VectorField divergence_rows(const MatrixField& F) {
    VectorField out(F.grid(), Rep::physical);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            ScalarField d = partial(F(i, j), j + 1);
            axpy(1.0, d, out[i]);
        }
    return out;
}

VectorField divergence_cols(const MatrixField& F) {
    VectorField out(F.grid(), Rep::physical);
    for (int i = 0; i < 3; ++i)
        for (int m = 0; m < 3; ++m) {
            ScalarField d = partial(F(m, i), m + 1);
            axpy(1.0, d, out[i]);
        }
    return out;
}

ScalarField laplacian(const ScalarField& f) {
    ScalarField fs = spectral_copy(f);
    const Grid& g = fs.grid();
    const double kf = M_PI / g.L();
    auto& s = fs.spec();
    spec_loop(g, [&](std::size_t idx, int mi, int mj, int mk) {
        double k2 = kf * kf * (double(mi) * mi + double(mj) * mj + double(mk) * mk);
        s[idx] *= -k2;
    });
    return to_physical(fs);
}

VectorField leray_project(const VectorField& v) {
    const Grid& g = v.grid();
    std::array<ScalarField, 3> vs;
    for (int a = 0; a < 3; ++a)
        vs[a] = spectral_copy(v[a]);
    spec_loop(g, [&](std::size_t idx, int mi, int mj, int mk) {
        double k[3] = {double(mi), double(mj), double(mk)};
        double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
        if (k2 == 0.0)
            return;
        cplx kdotv = k[0] * vs[0].spec()[idx] + k[1] * vs[1].spec()[idx] + k[2] * vs[2].spec()[idx];
        for (int a = 0; a < 3; ++a)
            vs[a].spec()[idx] -= k[a] * kdotv / k2;
    });
    VectorField out;
    for (int a = 0; a < 3; ++a)
        out[a] = to_physical(vs[a]);
    return out;
}

ScalarField inv_laplacian(const ScalarField& f) {
    ScalarField fs = spectral_copy(f);
    const Grid& g = fs.grid();
    auto& s = fs.spec();
    double scale = 0.0;
    for (std::size_t i = 0; i < g.spec_size(); ++i)
        scale = std::max(scale, std::abs(s[i]));
    double zero_mode = std::abs(s[0]);
    if (zero_mode > 1e-12 * std::max(scale, 1e-300))
        throw std::domain_error("inv_laplacian: input has nonzero mean " + std::to_string(zero_mode));
    const double kf = M_PI / g.L();
    spec_loop(g, [&](std::size_t idx, int mi, int mj, int mk) {
        double k2 = kf * kf * (double(mi) * mi + double(mj) * mj + double(mk) * mk);
        s[idx] = k2 == 0.0 ? 0.0 : s[idx] / (-k2);
    });
    return to_physical(fs);
}

ScalarField dealias(const ScalarField& f) {
    bool was_physical = f.rep() == Rep::physical;
    ScalarField fs = spectral_copy(f);
    const Grid& g = fs.grid();
    const int cut = g.n() / 3;
    auto& s = fs.spec();
    spec_loop(g, [&](std::size_t idx, int mi, int mj, int mk) {
        if (std::abs(mi) > cut || std::abs(mj) > cut || std::abs(mk) > cut)
            s[idx] = 0.0;
    });
    return was_physical ? to_physical(fs) : fs;
}

VectorField dealias(const VectorField& f) {
    VectorField out;
    for (int a = 0; a < 3; ++a)
        out[a] = dealias(f[a]);
    return out;
}

MatrixField dealias(const MatrixField& f) {
    MatrixField out;
    for (int a = 0; a < 9; ++a)
        out[a] = dealias(f[a]);
    return out;
}

ScalarField radial_derivative(const ScalarField& f) {
    const Grid& g = f.grid();
    ScalarField fs = spectral_copy(f);
    ScalarField out(g, Rep::physical);
    for (int a = 0; a < 3; ++a) {
        ScalarField d = partial(fs, a + 1);
        const auto& w = g.w(a);
        auto& o = out.phys();
        const auto& dp = d.phys();
        for (std::size_t i = 0; i < g.size(); ++i)
            o[i] += w[i] * dp[i];
    }
    return out;
}

std::array<ScalarField, 3> angular_part(const ScalarField& f) {
    const Grid& g = f.grid();
    ScalarField fs = spectral_copy(f);
    std::array<ScalarField, 3> d;
    for (int a = 0; a < 3; ++a)
        d[a] = partial(fs, a + 1);
    std::array<ScalarField, 3> out;
    // Omega_a = eps_{abc} x_b d_c
    static const int eps[3][2][2] = {{{1, 2}, {2, 1}}, {{2, 0}, {0, 2}}, {{0, 1}, {1, 0}}};
    const int n = g.n();
    for (int a = 0; a < 3; ++a) {
        out[a] = ScalarField(g, Rep::physical);
        auto& o = out[a].phys();
        int bp = eps[a][0][0], cp = eps[a][0][1];
        int bm = eps[a][1][0], cm = eps[a][1][1];
        const auto& dp = d[cp].phys();
        const auto& dm = d[cm].phys();
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k, ++idx) {
                    int m[3] = {i, j, k};
                    o[idx] = g.coord(m[bp]) * dp[idx] - g.coord(m[bm]) * dm[idx];
                }
    }
    return out;
}

ScalarField pointwise_product(const ScalarField& a, const ScalarField& b) {
    ScalarField out(a.grid(), Rep::physical);
    const auto& pa = a.phys();
    const auto& pb = b.phys();
    auto& po = out.phys();
    for (std::size_t i = 0; i < po.size(); ++i)
        po[i] = pa[i] * pb[i];
    return out;
}

ScalarField coordinate_multiply(const ScalarField& f, int axis) {
    const Grid& g = f.grid();
    ScalarField out(g, Rep::physical);
    const auto& p = f.phys();
    auto& o = out.phys();
    const int n = g.n();
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k, ++idx) {
                int m[3] = {i, j, k};
                o[idx] = g.coord(m[axis - 1]) * p[idx];
            }
    return out;
}

double l2_norm(const ScalarField& f) {
    kahan_sum s;
    const auto& p = f.phys();
    for (double v : p)
        s.add(v * v);
    return std::sqrt(s.value() * f.grid().cell_volume());
}

double l2_norm(const VectorField& f) {
    kahan_sum s;
    for (int a = 0; a < 3; ++a)
        for (double v : f[a].phys())
            s.add(v * v);
    return std::sqrt(s.value() * f.grid().cell_volume());
}

double l2_norm(const MatrixField& f) {
    kahan_sum s;
    for (int a = 0; a < 9; ++a)
        for (double v : f[a].phys())
            s.add(v * v);
    return std::sqrt(s.value() * f.grid().cell_volume());
}

double sup_norm(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.phys())
        m = std::max(m, std::abs(v));
    return m;
}

double sup_norm(const VectorField& f) {
    double m = 0.0;
    for (int a = 0; a < 3; ++a)
        m = std::max(m, sup_norm(f[a]));
    return m;
}

double sup_norm(const MatrixField& f) {
    double m = 0.0;
    for (int a = 0; a < 9; ++a)
        m = std::max(m, sup_norm(f[a]));
    return m;
}

double inner(const ScalarField& a, const ScalarField& b) {
    kahan_sum s;
    const auto& pa = a.phys();
    const auto& pb = b.phys();
    for (std::size_t i = 0; i < pa.size(); ++i)
        s.add(pa[i] * pb[i]);
    return s.value() * a.grid().cell_volume();
}

double mean(const ScalarField& f) {
    kahan_sum s;
    for (double v : f.phys())
        s.add(v);
    return s.value() / static_cast<double>(f.grid().size());
}

double spectral_energy(const ScalarField& f) {
    ScalarField fs = spectral_copy(f);
    const Grid& g = fs.grid();
    const int half = g.n() / 2;
    kahan_sum s;
    spec_loop(g, [&](std::size_t idx, int, int, int mk) {
        double w = (mk == 0 || mk == half) ? 1.0 : 2.0;  // conjugate pair weight
        s.add(w * std::norm(fs.spec()[idx]));
    });
    return s.value() * g.box_volume();
}

void axpy(double a, const ScalarField& x, ScalarField& y) {
    const auto& px = x.phys();
    auto& py = y.phys();
    for (std::size_t i = 0; i < px.size(); ++i)
        py[i] += a * px[i];
}

void scale(ScalarField& f, double a) {
    for (double& v : f.phys())
        v *= a;
}

void scale(VectorField& f, double a) {
    for (int i = 0; i < 3; ++i)
        scale(f[i], a);
}

void scale(MatrixField& f, double a) {
    for (int i = 0; i < 9; ++i)
        scale(f[i], a);
}

}  // namespace elastowave
