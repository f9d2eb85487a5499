#include "circ16/circulant.hpp"

#include <doctest.h>

#include <random>

using namespace circ16;

namespace {

Vec16 vec(std::initializer_list<long> init) {
    Vec16 v;
    int i = 0;
    for (long x : init) v[i++] = x;
    return v;
}

Vec16 unit(int j) {
    Vec16 v{};
    for (auto& x : v) x = 0;
    v[j] = 1;
    return v;
}

// Test-only oracle: cofactor expansion, exponential but obviously correct.
Int det_laplace(const std::vector<Int>& m, int n) {
    if (n == 1) return m[0];
    Int det = 0;
    std::vector<Int> minor((n - 1) * (n - 1));
    for (int col = 0; col < n; ++col) {
        for (int i = 1; i < n; ++i) {
            int k = 0;
            for (int j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[(i - 1) * (n - 1) + k++] = m[i * n + j];
            }
        }
        Int sub = det_laplace(minor, n - 1);
        det += (col % 2 == 0 ? m[col] : Int(-m[col])) * sub;
    }
    return det;
}

Int det_circulant_laplace(std::span<const Int> v) {
    int n = static_cast<int>(v.size());
    std::vector<Int> m(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i * n + j] = v[((i - j) % n + n) % n];
    return det_laplace(m, n);
}

const Vec16 kWitness320 = vec({0, 0, 0, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0, -1, -1});
const Vec16 kWitness576 = vec({0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0});

}  // namespace

TEST_SUITE_BEGIN("circulant");

TEST_CASE("bareiss determinant matches cofactor expansion on small orders") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int n : {1, 2, 3, 4, 5}) {
        for (int rep = 0; rep < 50; ++rep) {
            CoeffVec v(n);
            for (auto& x : v) x = d(rng);
            CAPTURE(n);
            CHECK(det_bareiss(v) == det_circulant_laplace(v));
        }
    }
}

TEST_CASE("bareiss determinant on the pinned vectors") {
    CHECK(det_bareiss(unit(0)) == 1);
    Vec16 zero{};
    for (auto& x : zero) x = 0;
    CHECK(det_bareiss(zero) == 0);
    CHECK(det_bareiss(kWitness320) == 320);
    CHECK(det_bareiss(kWitness576) == 576);
}

TEST_CASE("order-2 determinant is a0^2 - a1^2") {
    for (long a0 = -5; a0 <= 5; ++a0)
        for (long a1 = -5; a1 <= 5; ++a1) {
            CoeffVec v{Int(a0), Int(a1)};
            CHECK(det_bareiss(v) == Int(a0) * a0 - Int(a1) * a1);
        }
}

TEST_CASE("transforms satisfy their defining sums") {
    Vec16 zero{};
    for (auto& x : zero) x = 0;
    Transforms tz = transforms(zero);
    for (int k = 0; k < 4; ++k) {
        CHECK(tz.b[k] == 0);
        CHECK(tz.c[k] == 0);
    }

    Transforms ti = transforms(unit(0));
    CHECK(ti.b == std::array<Int, 4>{1, 0, 0, 0});
    CHECK(ti.c == std::array<Int, 4>{1, 0, 0, 0});
    CHECK(ti.e == std::array<Int, 8>{1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(ti.d[0] == GaussianInt(1, 0));

    Vec16 ramp;
    for (int k = 0; k < 16; ++k) ramp[k] = k;
    Transforms tr = transforms(ramp);
    CHECK(tr.b[0] == 24);  // 0 + 8 + 4 + 12
    CHECK(tr.e[0] == -8);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int rep = 0; rep < 200; ++rep) {
        Vec16 v;
        for (auto& x : v) x = d(rng);
        Transforms t = transforms(v);
        for (int k = 0; k < 4; ++k) {
            CHECK(t.b[k] == (v[k] + v[k + 8]) + (v[k + 4] + v[k + 12]));
            CHECK(t.c[k] == (v[k] + v[k + 8]) - (v[k + 4] + v[k + 12]));
            CHECK(mpz_even_p(Int(t.b[k] + t.c[k]).get_mpz_t()));
            CHECK(t.d[k] == GaussianInt(t.e[k], t.e[k + 4]));
        }
        for (int k = 0; k < 8; ++k) CHECK(t.e[k] == v[k] - v[k + 8]);
    }
}

TEST_CASE("alpha1 formula on pinned inputs") {
    std::array<Int, 8> e{};
    e[0] = 1;
    CHECK(alpha1_formula(e) == GaussianInt(1, 0));
    e[0] = 0;
    e[3] = 1;
    CHECK(alpha1_formula(e) == GaussianInt(0, 1));
}

TEST_CASE("alpha1 formula agrees with the quotient-ring product") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int rep = 0; rep < 500; ++rep) {
        std::array<Int, 8> e;
        Vec16 padded{};
        for (int j = 0; j < 8; ++j) {
            e[j] = d(rng);
            padded[j] = e[j];
            padded[j + 8] = 0;
        }
        CHECK(alpha1_formula(e) == alpha1_exact(padded));
    }
}

TEST_CASE("alpha2 formula on pinned inputs and against the ring") {
    std::array<Int, 4> c{};
    c[0] = 1;
    CHECK(alpha2_formula(c) == GaussianInt(1, 0));
    c[0] = 0;
    c[1] = 1;
    CHECK(alpha2_formula(c) == GaussianInt(0, -1));

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int rep = 0; rep < 500; ++rep) {
        Vec16 padded{};
        std::array<Int, 4> cs;
        for (int j = 0; j < 4; ++j) {
            cs[j] = d(rng);
            padded[j] = cs[j];
        }
        GaussianInt a2 = alpha2_formula(cs);
        CHECK(a2 == alpha2_exact(padded));
        CHECK(a2.norm() == n2_ring(padded));
    }
}

TEST_CASE("alpha1 exact on pinned inputs") {
    CHECK(alpha1_exact(unit(0)) == GaussianInt(1, 0));
    // f = x: the product of the four conjugate roots is zeta^28 = -zeta^4.
    CHECK(alpha1_exact(unit(1)) == GaussianInt(0, -1));
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-25, 25);
    for (int rep = 0; rep < 300; ++rep) {
        Vec16 v;
        for (auto& x : v) x = d(rng);
        CHECK(alpha1_exact(v) == alpha1_formula(transforms(v).e));
        CHECK(alpha1_exact(v).norm() == n1_ring(v));
    }
}

TEST_CASE("norm factorization") {
    NormFactorization ni = norms(unit(0));
    CHECK(ni.n1 == 1);
    CHECK(ni.n2 == 1);
    CHECK(ni.n4 == 1);
    CHECK(ni.n8 == 1);
    CHECK(ni.n16 == 1);

    NormFactorization n320 = norms(kWitness320);
    CHECK(n320.product() == 320);
    // 320 = 64 * 5: N1, N2, N4 land in 2 Z_odd and N8 N16 in 8 Z_odd.
    for (const Int* nd : {&n320.n1, &n320.n2, &n320.n4})
        CHECK(mpz_fdiv_ui(nd->get_mpz_t(), 4) == 2);
    Int n8n16 = n320.n8 * n320.n16;
    CHECK(n8n16 == 8);

    CHECK(det_via_norms(kWitness576) == 576);
    CHECK(det_via_norms(unit(0)) == 1);

    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int rep = 0; rep < 500; ++rep) {
        Vec16 v;
        for (auto& x : v) x = d(rng);
        NormFactorization nf = norms(v);
        CHECK(nf.product() == det_bareiss(v));
        CHECK(nf.n1 == nf.alpha1.norm());
        CHECK(nf.n2 == nf.alpha2.norm());
    }
}

TEST_CASE("parity gate") {
    ParityGate gi = parity_gate(unit(0));
    CHECK(gi.all_odd_norms);
    CHECK(!gi.d_in_64_odd);

    ParityGate g320 = parity_gate(kWitness320);
    CHECK(g320.d_in_64_odd);
    CHECK(g320.split_16);
    CHECK(g320.split_8);
    CHECK(g320.thm31_case.has_value());

    ParityGate g576 = parity_gate(kWitness576);
    CHECK(g576.d_in_64_odd);  // 576 = 64 * 9
    CHECK(g576.thm31_case.has_value());
}

TEST_CASE("cyclic convolution is the determinant product") {
    Vec16 u = kWitness320;
    CHECK(cyclic_convolve(u, unit(0)) == u);

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int rep = 0; rep < 100; ++rep) {
        Vec16 a, b;
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = d(rng);
        CHECK(det_bareiss(cyclic_convolve(a, b)) == det_bareiss(a) * det_bareiss(b));
    }
}

TEST_SUITE_END();
