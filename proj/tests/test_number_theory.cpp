#include "circ16/number_theory.hpp"

#include <doctest.h>

#include <random>

using namespace circ16;

TEST_SUITE_BEGIN("number-theory");

TEST_CASE("primality on pinned values") {
    CHECK(is_prime(2));
    CHECK(!is_prime(1));
    CHECK(!is_prime(0));
    CHECK(is_prime(113));  // 7232 / 64
    CHECK(!is_prime(561));     // Carmichael
    CHECK(!is_prime(341));     // strong pseudoprime to base 2 alone
    CHECK(is_prime(Int("2305843009213693951")));  // 2^61 - 1
    CHECK(!is_prime(Int("2305843009213693953")));
    CHECK(is_prime(Int("170141183460469231731687303715884105727")));  // 2^127 - 1
}

TEST_CASE("primality agrees with the sieve below 10000") {
    auto& primes = small_primes();
    std::size_t idx = 0;
    for (long n = 0; n < 10000; ++n) {
        bool in_sieve = idx < primes.size() && primes[idx] == n;
        if (in_sieve) ++idx;
        CHECK(is_prime(n) == in_sieve);
    }
}

TEST_CASE("factorize pinned examples") {
    Factorization f = factorize(576);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.sign == 1);
    CHECK(f.factors[0] == std::pair<Int, unsigned>(2, 6));
    CHECK(f.factors[1] == std::pair<Int, unsigned>(3, 2));

    Factorization g = factorize(-320);
    CHECK(g.sign == -1);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0] == std::pair<Int, unsigned>(2, 6));
    CHECK(g.factors[1] == std::pair<Int, unsigned>(5, 1));

    Factorization one = factorize(1);
    CHECK(one.sign == 1);
    CHECK(one.factors.empty());

    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize round-trips on random values") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> d(-1'000'000'000'000LL, 1'000'000'000'000LL);
    int done = 0;
    while (done < 1000) {
        long long n = d(rng);
        if (n == 0) continue;
        ++done;
        Factorization f = factorize(Int(std::to_string(n)));
        CHECK(f.value() == Int(std::to_string(n)));
        for (const auto& [p, e] : f.factors) CHECK(is_prime(p));
    }
}

TEST_CASE("factorize beyond trial division uses rho") {
    Int n = Int("1000000007") * Int("1000000009");
    Factorization f = factorize(n, 5);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == Int("1000000007"));
    CHECK(f.factors[1].first == Int("1000000009"));
}

TEST_CASE("factorize times out under a starved budget") {
    FactorEffort tiny;
    tiny.rho_iterations = 4;
    // Product of the Mersenne primes 2^61 - 1 and 2^89 - 1: far beyond both
    // trial division and four rho steps.
    Int n = Int("2305843009213693951") * Int("618970019642690137449562111");
    CHECK_THROWS_AS(factorize(n, 1, tiny), FactorizationTimeout);
}

TEST_CASE("two squares on pinned primes") {
    // 17 = 1 + 16 pinned by the exhaustive search over a, b <= 4.
    {
        bool found = false;
        for (long a = 1; a <= 4 && !found; a += 2)
            for (long b = 2; b <= 4; b += 2)
                if (a * a + b * b == 17) {
                    CHECK(a == 1);
                    CHECK(b == 4);
                    found = true;
                }
        CHECK(found);
    }
    auto s5 = two_squares(5);
    CHECK(s5.a == 1);
    CHECK(s5.b == 2);
    auto s17 = two_squares(17);
    CHECK(s17.a == 1);
    CHECK(s17.b == 4);
    auto s113 = two_squares(113);
    CHECK(s113.a == 7);
    CHECK(s113.b == 8);

    CHECK_THROWS_AS(two_squares(7), InvalidResidue);
    CHECK_THROWS_AS(two_squares(15), InvalidResidue);
}

TEST_CASE("two squares for every 1-mod-4 prime below 10^5") {
    for (std::uint32_t p : small_primes()) {
        if (p >= 100000) break;
        if (p % 4 != 1) continue;
        auto [a, b] = two_squares(p);
        CHECK(a * a + b * b == p);
        CHECK(mpz_odd_p(a.get_mpz_t()));
        CHECK(mpz_even_p(b.get_mpz_t()));
        CHECK(a > 0);
        CHECK(b > 0);
    }
}

TEST_CASE("one plus two squares on pinned primes") {
    auto s3 = one_plus_two_squares(3);
    CHECK(s3.a == 1);
    CHECK(s3.b == 1);
    auto s11 = one_plus_two_squares(11);
    CHECK(s11.a == 3);
    CHECK(s11.b == 1);
    auto s19 = one_plus_two_squares(19);
    CHECK(s19.a == 1);
    CHECK(s19.b == 3);
    CHECK_THROWS_AS(one_plus_two_squares(5), InvalidResidue);
    CHECK_THROWS_AS(one_plus_two_squares(17), InvalidResidue);
}

TEST_CASE("one plus two squares for every 3-mod-8 prime below 10^4") {
    for (std::uint32_t p : small_primes()) {
        if (p >= 10000) break;
        if (p % 8 != 3) continue;
        auto [a, b] = one_plus_two_squares(p);
        CHECK(a * a + 2 * b * b == p);
        CHECK(mpz_odd_p(a.get_mpz_t()));
        CHECK(mpz_odd_p(b.get_mpz_t()));
    }
}

TEST_CASE("mod8 class on pinned primes") {
    CHECK(mod8_class(17) == Mod8Class::PM3);   // 1 + 4 = 5
    CHECK(mod8_class(113) == Mod8Class::PM1);  // 7 + 8 = 15 = 7 (mod 8)
    CHECK(mod8_class(73) == Mod8Class::PM3);   // 3 + 8 = 11 = 3 (mod 8)
    CHECK(mod8_class(337) == Mod8Class::PM1);
    CHECK_THROWS_AS(mod8_class(5), InvalidResidue);
}

TEST_CASE("mod8 class is well defined below 10^5") {
    // With the canonical representation, a+b = a-b (mod 8) because b = 0
    // (mod 4); both residues must land in the same class set.
    auto klass = [](unsigned long r) { return (r == 3 || r == 5) ? Mod8Class::PM3 : Mod8Class::PM1; };
    for (std::uint32_t p : small_primes()) {
        if (p >= 100000) break;
        if (p % 8 != 1) continue;
        auto [a, b] = two_squares(p);
        CHECK(mpz_divisible_ui_p(b.get_mpz_t(), 4));
        unsigned long plus = mpz_fdiv_ui(Int(a + b).get_mpz_t(), 8);
        unsigned long minus = mpz_fdiv_ui(Int(a - b).get_mpz_t(), 8);
        CHECK(klass(plus) == klass(minus));
        CHECK(klass(plus) == mod8_class(p));
    }
}

TEST_SUITE_END();
