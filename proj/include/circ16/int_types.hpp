#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace circ16 {

/// Exact arbitrary-precision integer. All arithmetic in this library is
/// exact; nothing is ever rounded or truncated.
using Int = mpz_class;

/// Coefficient vector of a circulant of arbitrary order n >= 1.
using CoeffVec = std::vector<Int>;

/// Coefficient vector of the order-16 pipeline.
using Vec16 = std::array<Int, 16>;

inline Vec16 to_vec16(std::span<const Int> v) {
    if (v.size() != 16) throw std::invalid_argument("expected 16 coefficients");
    Vec16 out;
    for (int i = 0; i < 16; ++i) out[i] = v[i];
    return out;
}

inline CoeffVec to_coeff_vec(const Vec16& v) { return CoeffVec(v.begin(), v.end()); }

/// Element of Z[sqrt(-1)].
struct GaussianInt {
    Int re{0};
    Int im{0};

    GaussianInt() = default;
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    Int norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }

    friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(const GaussianInt& x, const GaussianInt& y) = default;
};

// --- error kinds -----------------------------------------------------------

/// A structural identity that is a proved theorem failed to hold; this always
/// signals an implementation bug, never bad input.
struct InternalInvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct InvalidResidue : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotOdd : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotClassPM3 : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FactorizationTimeout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// classify() could not decide because factorization timed out; the verdict
/// is withheld, never guessed.
struct IndeterminateFactorization : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace circ16
