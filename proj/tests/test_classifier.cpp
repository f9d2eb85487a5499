#include "circ16/classifier.hpp"

#include <doctest.h>

#include <random>

using namespace circ16;

namespace {

void expect(const Int& v, bool member, ReasonKind reason,
            std::optional<Int> prime = std::nullopt) {
    CAPTURE(v.get_str());
    MembershipVerdict verdict = classify(v);
    CHECK(verdict.member == member);
    CHECK(verdict.reason == reason);
    if (prime) {
        REQUIRE(verdict.reason_prime.has_value());
        CHECK(*verdict.reason_prime == *prime);
    }
    verify_verdict(verdict);  // certificates must re-verify arithmetically
}

}  // namespace

TEST_SUITE_BEGIN("classifier");

TEST_CASE("boundary table") {
    expect(320, true, ReasonKind::Prime5Mod8, Int(5));
    expect(64, false, ReasonKind::Thm41Shape);
    expect(192, false, ReasonKind::Thm41Shape);
    expect(576, true, ReasonKind::Prime3Mod8Squared, Int(3));
    expect(1088, true, ReasonKind::Prime1Mod8ClassPM3, Int(17));
    expect(7232, false, ReasonKind::Thm41Shape);
    expect(-1, true, ReasonKind::Odd);
    expect(0, true, ReasonKind::DivisibleBy128);
    expect(96, false, ReasonKind::EvenNotDivisibleBy64);
    expect(2, false, ReasonKind::EvenNotDivisibleBy64);
    expect(128, true, ReasonKind::DivisibleBy128);
    expect(-128, true, ReasonKind::DivisibleBy128);
    expect(256, true, ReasonKind::DivisibleBy128);
    expect(448, false, ReasonKind::Thm41Shape);
    expect(64 * 49, false, ReasonKind::Thm41Shape);
    expect(64 * 3 * 7, false, ReasonKind::Thm41Shape);
    expect(64 * 7 * 23, false, ReasonKind::Thm41Shape);
    expect(2880, true, ReasonKind::Prime5Mod8, Int(5));
    expect(64 * 73, true, ReasonKind::Prime1Mod8ClassPM3, Int(73));
    expect(64 * 89, true, ReasonKind::Prime1Mod8ClassPM3, Int(89));
    expect(64 * 97, true, ReasonKind::Prime1Mod8ClassPM3, Int(97));
    expect(-320, true, ReasonKind::Prime5Mod8, Int(5));
    expect(-64, false, ReasonKind::Thm41Shape);
}

TEST_CASE("64 decomposes to the empty obstruction") {
    MembershipVerdict verdict = classify(64);
    CHECK(!verdict.member);
    CHECK(verdict.reason == ReasonKind::Thm41Shape);
    CHECK(verdict.decomposition.empty());
    verify_verdict(verdict);
}

TEST_CASE("qualifying prime priority prefers 5 mod 8, then squared 3 mod 8") {
    // 64 * 5 * 9: both 5 and 3^2 qualify; 5 wins.
    expect(2880, true, ReasonKind::Prime5Mod8, Int(5));
    // 64 * 9 * 17: both 3^2 and PM3 17 qualify; 3^2 wins.
    expect(Int(64) * 9 * 17, true, ReasonKind::Prime3Mod8Squared, Int(3));
}

TEST_CASE("obstruction decompositions are fully certified") {
    MembershipVerdict verdict = classify(Int(64) * 7 * 7 * 113);  // all obstructed factors
    CHECK(!verdict.member);
    REQUIRE(verdict.decomposition.size() == 2);
    CHECK(verdict.decomposition[0].prime == 7);
    CHECK(verdict.decomposition[0].exponent == 2);
    CHECK(verdict.decomposition[0].residue_mod8 == 7);
    CHECK(verdict.decomposition[1].prime == 113);
    REQUIRE(verdict.decomposition[1].klass.has_value());
    CHECK(*verdict.decomposition[1].klass == Mod8Class::PM1);
    verify_verdict(verdict);
}

TEST_CASE("tampered verdicts fail re-verification") {
    MembershipVerdict verdict = classify(320);
    verdict.reason_prime = 13;  // 13 does not divide 5
    CHECK_THROWS_AS(verify_verdict(verdict), InternalInvariantViolation);

    MembershipVerdict v2 = classify(192);
    v2.decomposition[0].exponent = 2;
    CHECK_THROWS_AS(verify_verdict(v2), InternalInvariantViolation);
}

TEST_CASE("membership survives multiplication") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> small(-400, 400);
    std::vector<Int> members;
    while (members.size() < 200) {
        Int v = small(rng);
        if (v == 0) continue;
        if (classify(v).member) members.push_back(v);
    }
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (int rep = 0; rep < 1000; ++rep) {
        const Int& u = members[pick(rng)];
        const Int& w = members[pick(rng)];
        CAPTURE(u.get_str());
        CAPTURE(w.get_str());
        CHECK(classify(u * w).member);
    }
}

TEST_CASE("indeterminate factorization is surfaced, not guessed") {
    FactorEffort tiny;
    tiny.rho_iterations = 4;
    Int hard = Int("2305843009213693951") * Int("618970019642690137449562111");
    CHECK_THROWS_AS(classify(64 * hard, 1, tiny), IndeterminateFactorization);
}

TEST_SUITE_END();
