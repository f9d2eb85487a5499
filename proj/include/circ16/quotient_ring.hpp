#pragma once

#include "circ16/int_types.hpp"

#include <array>

namespace circ16 {

/// Dense element of Z[x]/(x^N + 1), the cyclotomic quotient for the 2N-th
/// roots of unity. The reduction rule is x^N = -1, so exponents live mod 2N
/// with a sign. Used with N = 8 (Phi_16) and N = 4 (Phi_8); no root of unity
/// is ever represented numerically.
template <int N>
struct PolyMod {
    std::array<Int, N> c{};

    static PolyMod one() {
        PolyMod p;
        p.c[0] = 1;
        return p;
    }

    /// Add t * x^k with k arbitrary (reduced mod 2N, sign applied).
    void add_term(const Int& t, int k) {
        k %= 2 * N;
        if (k < 0) k += 2 * N;
        if (k >= N)
            c[k - N] -= t;
        else
            c[k] += t;
    }

    /// p(x^l), the substitution that sends the root zeta to zeta^l.
    PolyMod compose_power(int l) const {
        PolyMod r;
        for (int j = 0; j < N; ++j)
            if (c[j] != 0) r.add_term(c[j], j * l);
        return r;
    }

    friend PolyMod operator*(const PolyMod& a, const PolyMod& b) {
        PolyMod r;
        for (int i = 0; i < N; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; j < N; ++j) {
                if (b.c[j] == 0) continue;
                r.add_term(a.c[i] * b.c[j], i + j);
            }
        }
        return r;
    }

    friend bool operator==(const PolyMod&, const PolyMod&) = default;
};

using PolyPhi16 = PolyMod<8>;  // Z[x]/(x^8+1), houses zeta_16
using PolyPhi8 = PolyMod<4>;   // Z[x]/(x^4+1), houses zeta_8

}  // namespace circ16
