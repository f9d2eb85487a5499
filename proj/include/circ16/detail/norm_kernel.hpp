#pragma once

// Closed-form evaluation of the five norm factors of an order-16 circulant
// determinant through the linear recombinations b, c, e of the coefficients.
// Templated on the scalar so the same polynomials serve both the exact
// big-integer path and the overflow-checked fast path of the search oracle.

namespace circ16::detail {

template <class T>
void transforms_into(const T* a, T* b, T* c, T* e) {
    for (int k = 0; k < 4; ++k) {
        b[k] = (a[k] + a[k + 8]) + (a[k + 4] + a[k + 12]);
        c[k] = (a[k] + a[k + 8]) - (a[k + 4] + a[k + 12]);
    }
    for (int k = 0; k < 8; ++k) e[k] = a[k] - a[k + 8];
}

// Re/Im of f(z16) f(z16^5) f(z16^9) f(z16^13) as degree-4 forms in e0..e7.
template <class T>
void alpha1_into(const T* e, T& re, T& im) {
    const T& e0 = e[0];
    const T& e1 = e[1];
    const T& e2 = e[2];
    const T& e3 = e[3];
    const T& e4 = e[4];
    const T& e5 = e[5];
    const T& e6 = e[6];
    const T& e7 = e[7];
    const T s0 = e0 * e0, s1 = e1 * e1, s2 = e2 * e2, s3 = e3 * e3;
    const T s4 = e4 * e4, s5 = e5 * e5, s6 = e6 * e6, s7 = e7 * e7;
    re = s0 * s0 + s4 * s4 - s2 * s2 - s6 * s6 - 6 * s0 * s4 + 6 * s2 * s6
       - 2 * (s1 - s5) * (s3 - s7)
       + 4 * (e2 * e6 + e1 * e7 + e3 * e5) * (s0 - s4)
       - 4 * (e0 * e6 + e2 * e4 - e1 * e5) * (s1 - s5)
       + 4 * (e0 * e4 + e1 * e3 - e5 * e7) * (s2 - s6)
       - 4 * (e0 * e2 - e4 * e6 + e3 * e7) * (s3 - s7)
       - 8 * e0 * e2 * e1 * e5 + 8 * e0 * e4 * e1 * e3 - 8 * e0 * e4 * e5 * e7
       + 8 * e0 * e6 * e3 * e7 + 8 * e2 * e4 * e3 * e7 - 8 * e2 * e6 * e1 * e7
       - 8 * e2 * e6 * e3 * e5 + 8 * e4 * e6 * e1 * e5 + 8 * e1 * e3 * e5 * e7;
    im = s3 * s3 + s7 * s7 - s1 * s1 - s5 * s5 - 6 * s3 * s7 + 6 * s1 * s5
       - 2 * (s0 - s4) * (s2 - s6)
       + 4 * (e0 * e4 - e1 * e3 + e5 * e7) * (s0 - s4)
       + 4 * (e0 * e2 - e4 * e6 - e3 * e7) * (s1 - s5)
       - 4 * (e2 * e6 - e1 * e7 - e3 * e5) * (s2 - s6)
       - 4 * (e0 * e6 + e2 * e4 + e1 * e5) * (s3 - s7)
       + 8 * e0 * e2 * e4 * e6 - 8 * e0 * e2 * e3 * e7 + 8 * e0 * e4 * e1 * e7
       + 8 * e0 * e4 * e3 * e5 - 8 * e0 * e6 * e1 * e5 - 8 * e2 * e4 * e1 * e5
       + 8 * e2 * e6 * e1 * e3 - 8 * e2 * e6 * e5 * e7 + 8 * e4 * e6 * e3 * e7;
}

// Re/Im of f(z8) f(z8^5) as quadratic forms in c0..c3.
template <class T>
void alpha2_into(const T* c, T& re, T& im) {
    re = c[0] * c[0] - c[2] * c[2] + 2 * c[1] * c[3];
    im = c[3] * c[3] - c[1] * c[1] + 2 * c[0] * c[2];
}

// Full determinant N1 N2 N4 N8 N16 of the order-16 circulant.
template <class T>
T det16_by_norms(const T* a) {
    T b[4], c[4], e[8];
    transforms_into(a, b, c, e);
    T n16 = 0, n8 = 0;
    for (int k = 0; k < 16; ++k) {
        n16 += a[k];
        if (k & 1)
            n8 -= a[k];
        else
            n8 += a[k];
    }
    T n4 = (b[0] - b[2]) * (b[0] - b[2]) + (b[1] - b[3]) * (b[1] - b[3]);
    T re2, im2, re1, im1;
    alpha2_into(c, re2, im2);
    alpha1_into(e, re1, im1);
    return (re1 * re1 + im1 * im1) * (re2 * re2 + im2 * im2) * n4 * n8 * n16;
}

// Direct product formulas for the small orders carried by the oracle.
template <class T>
T det2_direct(const T* a) {
    return a[0] * a[0] - a[1] * a[1];
}

template <class T>
T det4_direct(const T* a) {
    T f1 = a[0] + a[1] + a[2] + a[3];
    T fm1 = a[0] - a[1] + a[2] - a[3];
    T n4 = (a[0] - a[2]) * (a[0] - a[2]) + (a[1] - a[3]) * (a[1] - a[3]);
    return f1 * fm1 * n4;
}

template <class T>
T det8_direct(const T* a) {
    T B[4], C[4];
    for (int j = 0; j < 4; ++j) {
        B[j] = a[j] + a[j + 4];
        C[j] = a[j] - a[j + 4];
    }
    T f1 = B[0] + B[1] + B[2] + B[3];
    T fm1 = B[0] - B[1] + B[2] - B[3];
    T n4 = (B[0] - B[2]) * (B[0] - B[2]) + (B[1] - B[3]) * (B[1] - B[3]);
    T re, im;
    alpha2_into(C, re, im);
    return f1 * fm1 * n4 * (re * re + im * im);
}

}  // namespace circ16::detail
