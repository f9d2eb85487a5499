#pragma once

#include "circ16/int_types.hpp"

#include <string>
#include <vector>

namespace circ16 {

/// Construction tree that composes to a 16-coefficient witness vector.
/// Parameter layout per node kind:
///   OddFamily       params = {r, c}    f = (1 + x + ... + x^{r-1}) + c Phi
///   Mult256Family   params = {c}       f = (x - 1) + c Phi, det = -256 c
///   Base128Constant params = {}        the embedded det-128 vector
///   ZeroVector      params = {}        the all-zero vector, det = 0
///   Lemma52_1       params = {k, l}
///   Lemma52_2       params = {k, l}
///   Lemma52_3       params = {k, l, m, n}
///   Convolve        children = {left, right}, det = product
/// Phi denotes 1 + x + ... + x^15. Realizing a plan re-verifies the
/// determinant of every node against its claimed value.
struct WitnessPlan {
    enum class Kind {
        OddFamily,
        Mult256Family,
        Base128Constant,
        ZeroVector,
        Lemma52_1,
        Lemma52_2,
        Lemma52_3,
        Convolve,
    };

    Kind kind = Kind::ZeroVector;
    std::vector<Int> params;
    Int claimed_value = 0;
    std::vector<WitnessPlan> children;  // Convolve: exactly two

    static const char* kind_name(Kind k) {
        switch (k) {
            case Kind::OddFamily: return "odd-family";
            case Kind::Mult256Family: return "mult256-family";
            case Kind::Base128Constant: return "base128-constant";
            case Kind::ZeroVector: return "zero-vector";
            case Kind::Lemma52_1: return "lemma52-1";
            case Kind::Lemma52_2: return "lemma52-2";
            case Kind::Lemma52_3: return "lemma52-3";
            case Kind::Convolve: return "convolve";
        }
        return "?";
    }
};

}  // namespace circ16
