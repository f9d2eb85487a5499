#include "circ16/number_theory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace circ16 {

namespace {

constexpr std::uint32_t kSieveBound = 1'000'000;

// Witnesses that make Miller-Rabin exact for every n < 3.3 * 10^24 > 2^64.
constexpr std::uint64_t kFixedWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::vector<std::uint32_t> build_sieve() {
    std::vector<bool> composite(kSieveBound + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= kSieveBound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= kSieveBound; j += i)
            composite[j] = true;
    }
    return primes;
}

bool miller_rabin_round(const Int& n, const Int& n_minus_1, const Int& d, unsigned long s,
                        const Int& base) {
    Int x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n_minus_1) return true;
    }
    return false;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = build_sieve();
    return primes;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (std::uint64_t p : kFixedWitnesses) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
    }
    Int n_minus_1 = n - 1;
    Int d = n_minus_1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    if (mpz_fits_ulong_p(n.get_mpz_t()) || mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        for (std::uint64_t w : kFixedWitnesses)
            if (!miller_rabin_round(n, n_minus_1, d, s, Int(w))) return false;
        return true;
    }
    // Above 2^64: 40 strong-probable-prime rounds with bases derived from n,
    // so repeated queries agree.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ mpz_get_ui(n.get_mpz_t()));
    for (int round = 0; round < 40; ++round) {
        Int base = Int(rng()) % (n - 3) + 2;
        if (!miller_rabin_round(n, n_minus_1, d, s, base)) return false;
    }
    return true;
}

namespace {

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor
// of composite odd n, or nullopt when the iteration budget runs out.
std::optional<Int> brent_rho(const Int& n, std::uint64_t seed, std::uint64_t& budget) {
    std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbull);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Int y = Int(rng()) % (n - 1) + 1;
        Int c = Int(rng()) % (n - 1) + 1;
        Int x, q = 1, g = 1, ys, t;
        std::uint64_t r = 1;
        const std::uint64_t batch = 128;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                std::uint64_t lim = std::min(batch, r - k);
                if (budget < lim) return std::nullopt;
                budget -= lim;
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    t = x - y;
                    q = q * t % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one by one from the last saved point.
            g = 1;
            while (g == 1) {
                if (budget == 0) return std::nullopt;
                --budget;
                ys = (ys * ys + c) % n;
                t = x - ys;
                mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n && g != 1) return g;
        // Cycle degenerated; retry with fresh parameters.
    }
    return std::nullopt;
}

}  // namespace

Factorization factorize(const Int& n, std::uint64_t seed, const FactorEffort& effort) {
    if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    Int m = abs(n);

    std::map<Int, unsigned> found;
    for (std::uint32_t p : small_primes()) {
        if (m == 1) break;
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++found[Int(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }

    std::uint64_t budget = effort.rho_iterations;
    std::vector<Int> pending;
    if (m > 1) pending.push_back(m);
    while (!pending.empty()) {
        Int c = pending.back();
        pending.pop_back();
        if (is_prime(c)) {
            ++found[c];
            continue;
        }
        auto g = brent_rho(c, seed, budget);
        if (!g) {
            std::ostringstream os;
            os << "factorize: composite cofactor " << c << " resisted the effort budget";
            throw FactorizationTimeout(os.str());
        }
        pending.push_back(*g);
        pending.push_back(c / *g);
    }

    f.factors.assign(found.begin(), found.end());
    if (f.value() != n)
        throw InternalInvariantViolation("factorize: re-multiplication check failed");
    return f;
}

namespace {

void require_prime_residue(const Int& p, unsigned mod, unsigned residue, const char* who) {
    std::ostringstream os;
    if (p < 2 || !is_prime(p)) {
        os << who << ": " << p << " is not prime";
        throw InvalidResidue(os.str());
    }
    if (mpz_fdiv_ui(p.get_mpz_t(), mod) != residue) {
        os << who << ": " << p << " != " << residue << " (mod " << mod << ")";
        throw InvalidResidue(os.str());
    }
}

// Euclidean descent from a square root of -d mod p; first remainder at or
// below sqrt(p).
Int cornacchia_descent(const Int& p, const Int& root) {
    Int u = p, v = root;
    while (v * v > p) {
        Int r = u % v;
        u = v;
        v = r;
    }
    return v;
}

}  // namespace

TwoSquares two_squares(const Int& p) {
    require_prime_residue(p, 4, 1, "two_squares");
    // x = q^((p-1)/4) for the least quadratic non-residue q gives x^2 = -1.
    Int q = 2;
    while (mpz_legendre(q.get_mpz_t(), p.get_mpz_t()) != -1) ++q;
    Int x;
    Int exp = (p - 1) / 4;
    mpz_powm(x.get_mpz_t(), q.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    if ((x * x + 1) % p != 0)
        throw InternalInvariantViolation("two_squares: sqrt(-1) construction failed");

    Int a = cornacchia_descent(p, x);
    Int b2 = p - a * a;
    Int b;
    mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
    if (b * b != b2) throw InternalInvariantViolation("two_squares: descent left no square");
    a = abs(a);
    b = abs(b);
    if (mpz_even_p(a.get_mpz_t())) std::swap(a, b);
    if (!(mpz_odd_p(a.get_mpz_t()) && mpz_even_p(b.get_mpz_t()) && a > 0 && b > 0 &&
          a * a + b * b == p))
        throw InternalInvariantViolation("two_squares: canonical form check failed");
    return {a, b};
}

OnePlusTwoSquares one_plus_two_squares(const Int& p) {
    require_prime_residue(p, 8, 3, "one_plus_two_squares");
    // -2 is a square mod p, and p = 3 mod 4 makes the root a direct power.
    Int base = p - 2;
    Int exp = (p + 1) / 4;
    Int x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    if ((x * x + 2) % p != 0)
        throw InternalInvariantViolation("one_plus_two_squares: sqrt(-2) construction failed");

    Int a = cornacchia_descent(p, x);
    Int rem = p - a * a;
    if (mpz_odd_p(rem.get_mpz_t()))
        throw InternalInvariantViolation("one_plus_two_squares: odd residual");
    Int half = rem / 2;
    Int b;
    mpz_sqrt(b.get_mpz_t(), half.get_mpz_t());
    if (b * b != half)
        throw InternalInvariantViolation("one_plus_two_squares: descent left no square");
    a = abs(a);
    b = abs(b);
    if (!(mpz_odd_p(a.get_mpz_t()) && mpz_odd_p(b.get_mpz_t()) && a > 0 && b > 0 &&
          a * a + 2 * b * b == p))
        throw InternalInvariantViolation("one_plus_two_squares: canonical form check failed");
    return {a, b};
}

Mod8Class mod8_class(const Int& p) {
    require_prime_residue(p, 8, 1, "mod8_class");
    auto [a, b] = two_squares(p);
    unsigned long r = mpz_fdiv_ui(Int(a + b).get_mpz_t(), 8);
    return (r == 3 || r == 5) ? Mod8Class::PM3 : Mod8Class::PM1;
}

}  // namespace circ16
