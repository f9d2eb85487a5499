#include "circ16/classifier.hpp"

#include <sstream>

namespace circ16 {

const char* reason_name(ReasonKind k) {
    switch (k) {
        case ReasonKind::Odd: return "Odd";
        case ReasonKind::DivisibleBy128: return "DivisibleBy128";
        case ReasonKind::Prime5Mod8: return "Prime5Mod8";
        case ReasonKind::Prime3Mod8Squared: return "Prime3Mod8Squared";
        case ReasonKind::Prime1Mod8ClassPM3: return "Prime1Mod8ClassPM3";
        case ReasonKind::EvenNotDivisibleBy64: return "EvenNotDivisibleBy64";
        case ReasonKind::Thm41Shape: return "Thm41Shape";
    }
    return "?";
}

MembershipVerdict classify(const Int& v, std::uint64_t seed, const FactorEffort& effort) {
    MembershipVerdict verdict;
    verdict.value = v;

    if (mpz_odd_p(v.get_mpz_t())) {
        verdict.member = true;
        verdict.reason = ReasonKind::Odd;
        return verdict;
    }
    if (mpz_divisible_ui_p(v.get_mpz_t(), 128)) {  // v = 0 falls here
        verdict.member = true;
        verdict.reason = ReasonKind::DivisibleBy128;
        return verdict;
    }
    if (!mpz_divisible_ui_p(v.get_mpz_t(), 64)) {
        verdict.member = false;
        verdict.reason = ReasonKind::EvenNotDivisibleBy64;
        return verdict;
    }

    // v = 64k with k odd.
    Int k = abs(v) / 64;
    Factorization f;
    try {
        f = factorize(k, seed, effort);
    } catch (const FactorizationTimeout& e) {
        throw IndeterminateFactorization(e.what());
    }

    // Cheapest witness construction first: 5 mod 8, then 3 mod 8 squared,
    // then 1 mod 8 of class PM3; smallest prime within a class (factors are
    // already ascending).
    for (const auto& [p, exp] : f.factors) {
        if (mpz_fdiv_ui(p.get_mpz_t(), 8) == 5) {
            verdict.member = true;
            verdict.reason = ReasonKind::Prime5Mod8;
            verdict.reason_prime = p;
            return verdict;
        }
    }
    for (const auto& [p, exp] : f.factors) {
        if (mpz_fdiv_ui(p.get_mpz_t(), 8) == 3 && exp >= 2) {
            verdict.member = true;
            verdict.reason = ReasonKind::Prime3Mod8Squared;
            verdict.reason_prime = p;
            return verdict;
        }
    }
    for (const auto& [p, exp] : f.factors) {
        if (mpz_fdiv_ui(p.get_mpz_t(), 8) == 1 && mod8_class(p) == Mod8Class::PM3) {
            verdict.member = true;
            verdict.reason = ReasonKind::Prime1Mod8ClassPM3;
            verdict.reason_prime = p;
            return verdict;
        }
    }

    // No qualifying prime: |k| has exactly the obstructed shape.
    verdict.member = false;
    verdict.reason = ReasonKind::Thm41Shape;
    for (const auto& [p, exp] : f.factors) {
        DecompositionEntry entry;
        entry.prime = p;
        entry.exponent = exp;
        entry.residue_mod8 = static_cast<unsigned>(mpz_fdiv_ui(p.get_mpz_t(), 8));
        if (entry.residue_mod8 == 1) entry.klass = mod8_class(p);
        verdict.decomposition.push_back(std::move(entry));
    }
    return verdict;
}

namespace {

[[noreturn]] void fail(const MembershipVerdict& verdict, const std::string& what) {
    std::ostringstream os;
    os << "verify_verdict(" << verdict.value << ", " << reason_name(verdict.reason)
       << "): " << what;
    throw InternalInvariantViolation(os.str());
}

void check_member_prime(const MembershipVerdict& verdict, unsigned residue) {
    if (!verdict.reason_prime) fail(verdict, "missing qualifying prime");
    const Int& p = *verdict.reason_prime;
    if (!is_prime(p)) fail(verdict, "qualifying prime is not prime");
    if (mpz_fdiv_ui(p.get_mpz_t(), 8) != residue) fail(verdict, "wrong residue class");
    if (!mpz_divisible_ui_p(verdict.value.get_mpz_t(), 64)) fail(verdict, "value not in 64 Z");
    Int k = abs(verdict.value) / 64;
    if (!mpz_odd_p(k.get_mpz_t())) fail(verdict, "odd part is even");
    if (verdict.reason == ReasonKind::Prime3Mod8Squared) {
        if (!mpz_divisible_p(k.get_mpz_t(), Int(p * p).get_mpz_t()))
            fail(verdict, "square of qualifying prime does not divide the odd part");
    } else {
        if (!mpz_divisible_p(k.get_mpz_t(), p.get_mpz_t()))
            fail(verdict, "qualifying prime does not divide the odd part");
    }
    if (verdict.reason == ReasonKind::Prime1Mod8ClassPM3 && mod8_class(p) != Mod8Class::PM3)
        fail(verdict, "qualifying prime is of class PM1");
}

}  // namespace

void verify_verdict(const MembershipVerdict& verdict) {
    const Int& v = verdict.value;
    switch (verdict.reason) {
        case ReasonKind::Odd:
            if (!verdict.member || !mpz_odd_p(v.get_mpz_t())) fail(verdict, "value is even");
            return;
        case ReasonKind::DivisibleBy128:
            if (!verdict.member || !mpz_divisible_ui_p(v.get_mpz_t(), 128))
                fail(verdict, "128 does not divide value");
            return;
        case ReasonKind::EvenNotDivisibleBy64:
            if (verdict.member || mpz_odd_p(v.get_mpz_t()) ||
                mpz_divisible_ui_p(v.get_mpz_t(), 64))
                fail(verdict, "value is odd or divisible by 64");
            return;
        case ReasonKind::Prime5Mod8: check_member_prime(verdict, 5); return;
        case ReasonKind::Prime3Mod8Squared: check_member_prime(verdict, 3); return;
        case ReasonKind::Prime1Mod8ClassPM3: check_member_prime(verdict, 1); return;
        case ReasonKind::Thm41Shape: break;
    }

    // Non-member decomposition: re-verify every entry and the product.
    if (verdict.member) fail(verdict, "Thm41Shape on a member");
    if (!mpz_divisible_ui_p(v.get_mpz_t(), 64)) fail(verdict, "value not in 64 Z");
    Int k = abs(v) / 64;
    if (!mpz_odd_p(k.get_mpz_t())) fail(verdict, "odd part is even");
    Int prod = 1;
    const Int* prev = nullptr;
    for (const auto& entry : verdict.decomposition) {
        if (prev && !(*prev < entry.prime)) fail(verdict, "primes not strictly increasing");
        prev = &entry.prime;
        if (!is_prime(entry.prime)) fail(verdict, "decomposition entry is not prime");
        unsigned r = static_cast<unsigned>(mpz_fdiv_ui(entry.prime.get_mpz_t(), 8));
        if (r != entry.residue_mod8) fail(verdict, "decomposition residue mismatch");
        switch (r) {
            case 1:
                if (!entry.klass || *entry.klass != Mod8Class::PM1 ||
                    mod8_class(entry.prime) != Mod8Class::PM1)
                    fail(verdict, "1 mod 8 factor must be of class PM1");
                break;
            case 3:
                if (entry.exponent != 1) fail(verdict, "3 mod 8 factor must have exponent 1");
                break;
            case 7: break;
            default: fail(verdict, "factor residue outside {1,3,7} mod 8");
        }
        for (unsigned i = 0; i < entry.exponent; ++i) prod *= entry.prime;
    }
    if (prod != k) fail(verdict, "decomposition does not reproduce the odd part");
}

}  // namespace circ16
