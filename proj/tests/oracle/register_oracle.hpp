// Copyright 2026 The QSG Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Register-level reference for the search dynamics: whole-register reflections
// and flag toggles written directly on the amplitude array, no gate library.
// Qubit order: C, xA, xB, fA, fB, a (the dummy register is omitted; it stays |0>).

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qsg_oracle {

struct RegisterResult {
    std::vector<double> skip_probes; ///< P(a=1) right after the conjunction, per iteration
    double p_both{0.0};              ///< P(fA=1, fB=1)
    double p_fb{0.0};                ///< P(fB=1)
};

inline RegisterResult register_oracle(int n, int k, std::uint64_t oa, std::uint64_t ob, bool skip) {
    using C = std::complex<double>;
    const int nq = 2 * n + 4;
    const std::size_t dim = std::size_t{1} << nq;
    const int c_bit = 0;
    const int fa = 2 * n + 1;
    const int fb = 2 * n + 2;
    const int a = 2 * n + 3;
    const std::uint64_t reg_mask = (std::uint64_t{1} << n) - 1;
    auto xa = [&](std::size_t i) { return (i >> 1) & reg_mask; };
    auto xb = [&](std::size_t i) { return (i >> (n + 1)) & reg_mask; };
    auto bit = [](std::size_t i, int q) { return (i >> q) & 1U; };

    std::vector<C> psi(dim, 0.0);
    const std::size_t data_mask = (std::size_t{1} << (2 * n + 1)) - 1; // C, xA, xB
    const double amp = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << (2 * n + 1)));
    for (std::size_t i = 0; i <= data_mask; ++i) {
        psi[i] = amp;
    }

    auto flip_if = [&](int q, auto cond) {
        // cond never reads q, so the flip is a permutation
        std::vector<C> out(psi);
        for (std::size_t i = 0; i < dim; ++i) {
            if (cond(i)) {
                out[i ^ (std::size_t{1} << q)] = psi[i];
            }
        }
        psi.swap(out);
    };
    auto negate_if = [&](auto cond) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (cond(i)) {
                psi[i] = -psi[i];
            }
        }
    };
    auto diffusion = [&] {
        const std::size_t x_mask = data_mask & ~std::size_t{1};
        const double m = static_cast<double>(std::size_t{1} << (2 * n));
        for (std::size_t rest = 0; rest < dim; ++rest) {
            if (rest & x_mask) {
                continue;
            }
            C mean = 0.0;
            for (std::size_t x = 0; x < (std::size_t{1} << (2 * n)); ++x) {
                mean += psi[rest | (x << 1)];
            }
            mean /= m;
            for (std::size_t x = 0; x < (std::size_t{1} << (2 * n)); ++x) {
                C &v = psi[rest | (x << 1)];
                v = 2.0 * mean - v;
            }
        }
    };

    RegisterResult out;
    for (int t = 0; t < k; ++t) {
        negate_if([&](std::size_t i) { return xa(i) == oa; });
        flip_if(fa, [&](std::size_t i) { return xa(i) == oa; });
        if (skip) {
            flip_if(a, [&](std::size_t i) { return bit(i, c_bit) && bit(i, fa); });
            double p = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                if (bit(i, a)) {
                    p += std::norm(psi[i]);
                }
            }
            out.skip_probes.push_back(p);
            negate_if([&](std::size_t i) { return xb(i) == ob && !bit(i, a); });
        } else {
            negate_if([&](std::size_t i) { return xb(i) == ob; });
        }
        flip_if(fb, [&](std::size_t i) { return xb(i) == ob; });
        if (skip) {
            flip_if(a, [&](std::size_t i) { return bit(i, c_bit) && bit(i, fa); });
        }
        diffusion();
    }
    for (std::size_t i = 0; i < dim; ++i) {
        const double p = std::norm(psi[i]);
        if (bit(i, fb)) {
            out.p_fb += p;
            if (bit(i, fa)) {
                out.p_both += p;
            }
        }
    }
    return out;
}

/// <#U_B> under the 2k-baseline convention: each iteration costs 2 minus the
/// skip probability renormalised by P(C=1) = 1/2.
inline double register_expected_ub(const RegisterResult &r, int k) {
    double e = 2.0 * k;
    for (double p : r.skip_probes) {
        e -= p / 0.5;
    }
    return e;
}

} // namespace qsg_oracle
