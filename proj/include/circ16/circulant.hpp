#pragma once

#include "circ16/int_types.hpp"

#include <optional>
#include <span>
#include <string>

namespace circ16 {

/// The linear recombinations of a0..a15 through which every norm factor of
/// the order-16 circulant determinant factors:
///   b_k = (a_k + a_{k+8}) + (a_{k+4} + a_{k+12})        0 <= k <= 3
///   c_k = (a_k + a_{k+8}) - (a_{k+4} + a_{k+12})        0 <= k <= 3
///   e_k = a_k - a_{k+8}                                 0 <= k <= 7
///   d_k = e_k + sqrt(-1) e_{k+4}                        0 <= k <= 3
/// d is carried for completeness of the transform family; no norm formula
/// consumes it.
struct Transforms {
    std::array<Int, 4> b;
    std::array<Int, 4> c;
    std::array<GaussianInt, 4> d;
    std::array<Int, 8> e;
};

/// The five integer norm factors of D(a0..a15) together with the Gaussian
/// partial products they come from:
///   n1 = |alpha1|^2,  alpha1 = f(z)f(z^5)f(z^9)f(z^13),   z = zeta_16
///   n2 = |alpha2|^2,  alpha2 = f(z^2)f(z^10)
///   n4 = f(z^4)f(z^12),  n8 = f(-1),  n16 = f(1)
/// and n1*n2*n4*n8*n16 equals the circulant determinant exactly.
struct NormFactorization {
    Int n1, n2, n4, n8, n16;
    GaussianInt alpha1, alpha2;
    Transforms transforms;

    Int product() const { return n1 * n2 * n4 * n8 * n16; }
};

/// Parity report for the three equivalent splitting conditions:
///   (1) D in 64 * Z_odd
///   (2) N1, N2 in 2 Z_odd and N4 N8 N16 in 16 Z_odd
///   (3) N1, N2, N4 in 2 Z_odd and N8 N16 in 8 Z_odd
/// Their mutual equivalence is asserted whenever (1) holds.
struct ParityGate {
    bool all_odd_norms = false;
    bool d_in_64_odd = false;       // condition (1)
    bool split_16 = false;          // condition (2)
    bool split_8 = false;           // condition (3)
    std::optional<std::string> thm31_case;  // "64Zodd-split" when (1) holds
};

/// Exact determinant of the n x n circulant whose first column is v
/// (column k is v rotated down by k), by fraction-free elimination.
Int det_bareiss(std::span<const Int> v);
Int det_bareiss(const Vec16& v);

Transforms transforms(const Vec16& v);

/// alpha1 by literal transcription of its closed-form degree-4 polynomials
/// in e0..e7.
GaussianInt alpha1_formula(const std::array<Int, 8>& e);

/// alpha2 = (c0^2 - c2^2 + 2 c1 c3) + (c3^2 - c1^2 + 2 c0 c2) sqrt(-1).
GaussianInt alpha2_formula(const std::array<Int, 4>& c);

/// alpha1 computed independently inside Z[x]/(x^8+1): the product
/// f(x) f(x^5) f(x^9) f(x^13) reduces to coeff0 + coeff4 * x^4 with
/// x^4 = sqrt(-1). Throws InternalInvariantViolation if any other
/// coefficient of the reduced product is nonzero.
GaussianInt alpha1_exact(const Vec16& v);

/// alpha2 computed independently inside Z[x]/(x^4+1).
GaussianInt alpha2_exact(const Vec16& v);

/// N1 and N2 as full Galois products in their quotient rings; independent
/// cross-oracles for the norm formulas.
Int n1_ring(const Vec16& v);
Int n2_ring(const Vec16& v);

NormFactorization norms(const Vec16& v);

/// n1*n2*n4*n8*n16; agrees with det_bareiss exactly.
Int det_via_norms(const Vec16& v);

ParityGate parity_gate(const Vec16& v);
ParityGate parity_gate(const NormFactorization& nf);

/// (u * w)_j = sum_i u_i w_{(j-i) mod 16}; determinants multiply.
Vec16 cyclic_convolve(const Vec16& u, const Vec16& w);

}  // namespace circ16
