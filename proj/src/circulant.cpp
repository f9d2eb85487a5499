#include "circ16/circulant.hpp"

#include "circ16/detail/norm_kernel.hpp"
#include "circ16/quotient_ring.hpp"

#include <sstream>
#include <utility>

namespace circ16 {

Int det_bareiss(std::span<const Int> v) {
    const int n = static_cast<int>(v.size());
    if (n < 1) throw std::invalid_argument("det_bareiss: empty vector");
    if (n == 1) return v[0];

    // M[i][j] = v[(i - j) mod n]: column k is v rotated down by k.
    std::vector<Int> m;
    m.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.push_back(v[((i - j) % n + n) % n]);
    auto at = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i) * n + j]; };

    int sign = 1;
    Int prev = 1;
    Int t;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (at(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                // Fraction-free: the division by the previous pivot is exact.
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    Int det = at(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

Int det_bareiss(const Vec16& v) { return det_bareiss(std::span<const Int>(v.data(), 16)); }

Transforms transforms(const Vec16& v) {
    Transforms t;
    detail::transforms_into(v.data(), t.b.data(), t.c.data(), t.e.data());
    for (int k = 0; k < 4; ++k) t.d[k] = GaussianInt(t.e[k], t.e[k + 4]);
    return t;
}

GaussianInt alpha1_formula(const std::array<Int, 8>& e) {
    GaussianInt a;
    detail::alpha1_into(e.data(), a.re, a.im);
    return a;
}

GaussianInt alpha2_formula(const std::array<Int, 4>& c) {
    GaussianInt a;
    detail::alpha2_into(c.data(), a.re, a.im);
    return a;
}

namespace {

[[noreturn]] void throw_stray_coefficient(const char* where, int degree, const Int& value) {
    std::ostringstream os;
    os << where << ": reduced product has nonzero coefficient " << value << " at degree "
       << degree << "; the product must lie in Z[sqrt(-1)]";
    throw InternalInvariantViolation(os.str());
}

}  // namespace

GaussianInt alpha1_exact(const Vec16& v) {
    // f mod (x^8+1) has coefficient a_j - a_{j+8} at degree j.
    PolyPhi16 f;
    for (int j = 0; j < 8; ++j) f.c[j] = v[j] - v[j + 8];
    PolyPhi16 prod = PolyPhi16::one();
    for (int l : {1, 5, 9, 13}) prod = prod * f.compose_power(l);
    for (int j : {1, 2, 3, 5, 6, 7})
        if (prod.c[j] != 0) throw_stray_coefficient("alpha1_exact", j, prod.c[j]);
    return {prod.c[0], prod.c[4]};  // sqrt(-1) = zeta_16^4
}

GaussianInt alpha2_exact(const Vec16& v) {
    PolyPhi8 h;
    for (int j = 0; j < 4; ++j) h.c[j] = (v[j] + v[j + 8]) - (v[j + 4] + v[j + 12]);
    PolyPhi8 prod = h * h.compose_power(5);
    for (int j : {1, 3})
        if (prod.c[j] != 0) throw_stray_coefficient("alpha2_exact", j, prod.c[j]);
    return {prod.c[0], prod.c[2]};  // sqrt(-1) = zeta_8^2
}

Int n1_ring(const Vec16& v) {
    PolyPhi16 f;
    for (int j = 0; j < 8; ++j) f.c[j] = v[j] - v[j + 8];
    PolyPhi16 prod = PolyPhi16::one();
    for (int l : {1, 3, 5, 7, 9, 11, 13, 15}) prod = prod * f.compose_power(l);
    for (int j = 1; j < 8; ++j)
        if (prod.c[j] != 0) throw_stray_coefficient("n1_ring", j, prod.c[j]);
    return prod.c[0];
}

Int n2_ring(const Vec16& v) {
    PolyPhi8 h;
    for (int j = 0; j < 4; ++j) h.c[j] = (v[j] + v[j + 8]) - (v[j + 4] + v[j + 12]);
    PolyPhi8 prod = PolyPhi8::one();
    for (int l : {1, 3, 5, 7}) prod = prod * h.compose_power(l);
    for (int j = 1; j < 4; ++j)
        if (prod.c[j] != 0) throw_stray_coefficient("n2_ring", j, prod.c[j]);
    return prod.c[0];
}

NormFactorization norms(const Vec16& v) {
    NormFactorization nf;
    nf.transforms = transforms(v);
    nf.n16 = 0;
    nf.n8 = 0;
    for (int k = 0; k < 16; ++k) {
        nf.n16 += v[k];
        if (k & 1)
            nf.n8 -= v[k];
        else
            nf.n8 += v[k];
    }
    const auto& b = nf.transforms.b;
    nf.n4 = (b[0] - b[2]) * (b[0] - b[2]) + (b[1] - b[3]) * (b[1] - b[3]);
    nf.alpha2 = alpha2_formula(nf.transforms.c);
    nf.n2 = nf.alpha2.norm();
    nf.alpha1 = alpha1_formula(nf.transforms.e);
    nf.n1 = nf.alpha1.norm();
    return nf;
}

Int det_via_norms(const Vec16& v) { return norms(v).product(); }

namespace {

// x in 2^k * Z_odd, i.e. x = 2^k * odd.
bool in_pow2_odd(const Int& x, unsigned k) {
    if (x == 0) return false;
    Int q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), 1u << k);
    return r == 0 && mpz_odd_p(q.get_mpz_t());
}

}  // namespace

ParityGate parity_gate(const NormFactorization& nf) {
    ParityGate g;
    g.all_odd_norms = mpz_odd_p(nf.n1.get_mpz_t()) && mpz_odd_p(nf.n2.get_mpz_t()) &&
                      mpz_odd_p(nf.n4.get_mpz_t()) && mpz_odd_p(nf.n8.get_mpz_t()) &&
                      mpz_odd_p(nf.n16.get_mpz_t());
    g.d_in_64_odd = in_pow2_odd(nf.product(), 6);
    g.split_16 = in_pow2_odd(nf.n1, 1) && in_pow2_odd(nf.n2, 1) &&
                 in_pow2_odd(nf.n4 * nf.n8 * nf.n16, 4);
    g.split_8 = in_pow2_odd(nf.n1, 1) && in_pow2_odd(nf.n2, 1) && in_pow2_odd(nf.n4, 1) &&
                in_pow2_odd(nf.n8 * nf.n16, 3);
    if (g.d_in_64_odd) {
        if (!g.split_16 || !g.split_8)
            throw InternalInvariantViolation(
                "parity_gate: D in 64 Z_odd but the equivalent norm splittings do not hold");
        g.thm31_case = "64Zodd-split";
    }
    return g;
}

ParityGate parity_gate(const Vec16& v) { return parity_gate(norms(v)); }

Vec16 cyclic_convolve(const Vec16& u, const Vec16& w) {
    Vec16 r;
    for (auto& x : r) x = 0;
    for (int i = 0; i < 16; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < 16; ++j) r[(i + j) & 15] += u[i] * w[j];
    }
    return r;
}

}  // namespace circ16
