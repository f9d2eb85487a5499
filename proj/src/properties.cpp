#include "circ16/properties.hpp"

#include "circ16/circulant.hpp"
#include "circ16/classifier.hpp"
#include "circ16/number_theory.hpp"
#include "circ16/oracle.hpp"
#include "circ16/witness.hpp"

#include <random>
#include <set>
#include <sstream>

namespace circ16 {

namespace {

unsigned long mod_ui(const Int& x, unsigned long m) { return mpz_fdiv_ui(x.get_mpz_t(), m); }

bool pm1_mod8(const Int& x) {
    unsigned long r = mod_ui(x, 8);
    return r == 1 || r == 7;
}

bool in_2odd(const Int& x) { return mod_ui(x, 4) == 2; }

struct VectorGen {
    std::mt19937_64 rng;
    std::uniform_int_distribution<long> dist;
    std::uint64_t drawn = 0;

    VectorGen(const PropertyOptions& opts)
        : rng(opts.seed), dist(opts.entry_lo, opts.entry_hi) {}

    Vec16 uniform() {
        Vec16 v;
        for (auto& x : v) x = dist(rng);
        return v;
    }

    // Every fourth vector is forced into the all-components-+-1-mod-8
    // stratum of alpha1/alpha2 (see properties.hpp).
    Vec16 next() {
        ++drawn;
        if (drawn % 4 != 0) return uniform();
        for (int attempt = 0; attempt < 1000; ++attempt) {
            Vec16 v = uniform();
            NormFactorization nf = norms(v);
            if (pm1_mod8(nf.alpha1.re) && pm1_mod8(nf.alpha1.im) && pm1_mod8(nf.alpha2.re) &&
                pm1_mod8(nf.alpha2.im))
                return v;
        }
        throw InternalInvariantViolation("vector generator: stratum rejection never hit");
    }
};

void record_violation(SuiteResult& r, const Vec16& v, const std::string& what) {
    ++r.violations;
    if (!r.detail.empty()) return;
    std::ostringstream os;
    os << what << " at (";
    for (int i = 0; i < 16; ++i) os << v[i] << (i < 15 ? "," : ")");
    r.detail = os.str();
}

template <class Check>
SuiteResult run_vectors(const char* name, const PropertyOptions& opts, double min_hit_rate,
                        Check&& check) {
    SuiteResult r;
    r.name = name;
    r.min_hit_rate = min_hit_rate;
    VectorGen gen(opts);
    for (std::uint64_t i = 0; i < opts.vectors; ++i) {
        Vec16 v = gen.next();
        ++r.cases;
        check(v, r);
    }
    return r;
}

bool parity_hypothesis_b(const Transforms& t) {
    return mod_ui(t.b[0] - t.b[2], 2) == 1 && mod_ui(t.b[1] - t.b[3], 2) == 1;
}
bool parity_hypothesis_c(const Transforms& t) {
    return mod_ui(t.c[0] - t.c[2], 2) == 1 && mod_ui(t.c[1] - t.c[3], 2) == 1;
}
bool parity_hypothesis_e(const Transforms& t) {
    return mod_ui(t.e[0] + t.e[4] - t.e[2] - t.e[6], 2) == 1 &&
           mod_ui(t.e[1] + t.e[5] - t.e[3] - t.e[7], 2) == 1;
}

Int pow_sign(const Int& exponent) { return mpz_even_p(exponent.get_mpz_t()) ? 1 : -1; }

}  // namespace

SuiteResult suite_factorization(const PropertyOptions& opts) {
    return run_vectors("factorization-identity", opts, 0.0, [](const Vec16& v, SuiteResult& r) {
        ++r.hypothesis_hits;
        NormFactorization nf = norms(v);
        if (nf.product() != det_bareiss(v))
            record_violation(r, v, "prod N_d != det");
        if (nf.n1 != nf.alpha1.norm() || nf.n2 != nf.alpha2.norm())
            record_violation(r, v, "N1/N2 are not the Gaussian norms");
    });
}

SuiteResult suite_parity_lemma32(const PropertyOptions& opts) {
    return run_vectors("lemma32-shared-parity", opts, 0.0, [](const Vec16& v, SuiteResult& r) {
        ++r.hypothesis_hits;
        NormFactorization nf = norms(v);
        unsigned long p = mod_ui(nf.n1, 2);
        if (mod_ui(nf.n2, 2) != p || mod_ui(nf.n4, 2) != p || mod_ui(nf.n8, 2) != p ||
            mod_ui(nf.n16, 2) != p)
            record_violation(r, v, "norm parities differ");
    });
}

SuiteResult suite_remark21(const PropertyOptions& opts) {
    return run_vectors("remark21-equivalence", opts, 0.0, [](const Vec16& v, SuiteResult& r) {
        ++r.hypothesis_hits;
        Transforms t = transforms(v);
        bool hb = parity_hypothesis_b(t), hc = parity_hypothesis_c(t),
             he = parity_hypothesis_e(t);
        if (hb != hc || hc != he) record_violation(r, v, "(b)/(c)/(e) conditions disagree");
    });
}

SuiteResult suite_lemma33(const PropertyOptions& opts) {
    return run_vectors("lemma33-n4n8n16", opts, 0.0, [](const Vec16& v, SuiteResult& r) {
        ++r.hypothesis_hits;
        NormFactorization nf = norms(v);
        Int prod = nf.n4 * nf.n8 * nf.n16;
        if (!(mpz_odd_p(prod.get_mpz_t()) || mpz_divisible_ui_p(prod.get_mpz_t(), 16)))
            record_violation(r, v, "N4 N8 N16 outside Z_odd and 16Z");
    });
}

SuiteResult suite_lemma34(const PropertyOptions& opts) {
    return run_vectors("lemma34-biconditional", opts, 0.0, [](const Vec16& v, SuiteResult& r) {
        ++r.hypothesis_hits;
        NormFactorization nf = norms(v);
        if (in_2odd(nf.n2) != in_2odd(nf.n4))
            record_violation(r, v, "N2 in 2Z_odd iff N4 in 2Z_odd failed");
    });
}

SuiteResult suite_lemma25(const PropertyOptions& opts) {
    return run_vectors("lemma25-even-multiplicity", opts, 0.0,
                       [](const Vec16& v, SuiteResult& r) {
        ++r.hypothesis_hits;
        NormFactorization nf = norms(v);
        for (const Int* nd : {&nf.n1, &nf.n2, &nf.n4}) {
            if (*nd == 0) continue;  // divisible to every power
            for (std::uint32_t p : small_primes()) {
                if (p >= 1000) break;
                if (p % 4 != 3) continue;
                unsigned mult = 0;
                Int m = *nd;
                while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                    ++mult;
                    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                }
                if (mult % 2 != 0) {
                    record_violation(r, v, "odd multiplicity of a 3-mod-4 prime in N_d");
                    return;
                }
            }
        }
    });
}

SuiteResult suite_thm31(const PropertyOptions& opts) {
    return run_vectors("thm31-equivalence", opts, 0.0, [](const Vec16& v, SuiteResult& r) {
        NormFactorization nf = norms(v);
        try {
            ParityGate g = parity_gate(nf);  // asserts splits whenever (1) holds
            if (g.d_in_64_odd) ++r.hypothesis_hits;
            if (g.d_in_64_odd != g.split_16 || g.split_16 != g.split_8)
                record_violation(r, v, "conditions (1)/(2)/(3) are not equivalent");
        } catch (const InternalInvariantViolation& e) {
            record_violation(r, v, e.what());
        }
    });
}

SuiteResult suite_lemma42(const PropertyOptions& opts) {
    return run_vectors("lemma42-congruence", opts, 0.10, [](const Vec16& v, SuiteResult& r) {
        NormFactorization nf = norms(v);
        if (!parity_hypothesis_b(nf.transforms)) return;
        ++r.hypothesis_hits;
        const auto& b = nf.transforms.b;
        Int rhs = nf.n8 * nf.n16 - 4 * (b[0] * b[2] + b[1] * b[3]) + 2;
        if (mod_ui(nf.n4 - rhs, 16) != 0)
            record_violation(r, v, "N4 != N8 N16 - 4(b0 b2 + b1 b3) + 2 (mod 16)");
    });
}

SuiteResult suite_lemma43(const PropertyOptions& opts) {
    return run_vectors("lemma43-congruence", opts, 0.10, [](const Vec16& v, SuiteResult& r) {
        NormFactorization nf = norms(v);
        if (!parity_hypothesis_c(nf.transforms)) return;
        ++r.hypothesis_hits;
        const auto& c = nf.transforms.c;
        Int x = c[0] * c[2] + c[1] * c[3];
        if (mod_ui(nf.alpha2.re - (pow_sign(c[2]) + 2 * x), 8) != 0 ||
            mod_ui(nf.alpha2.im - (pow_sign(c[1]) + 2 * x), 8) != 0)
            record_violation(r, v, "alpha2 congruences mod 8 failed");
    });
}

SuiteResult suite_lemma44(const PropertyOptions& opts) {
    return run_vectors("lemma44-congruence", opts, 0.10, [](const Vec16& v, SuiteResult& r) {
        Transforms t = transforms(v);
        if (!parity_hypothesis_e(t)) return;
        ++r.hypothesis_hits;
        Int lhs = 2 * (t.e[0] * t.e[4] + t.e[2] * t.e[6] + t.e[1] * t.e[5] + t.e[3] * t.e[7]);
        Int rhs = t.b[0] * t.b[2] + t.b[1] * t.b[3] + t.c[0] * t.c[2] + t.c[1] * t.c[3];
        if (mod_ui(lhs - rhs, 4) != 0)
            record_violation(r, v, "transform congruence mod 4 failed");
    });
}

SuiteResult suite_lemma46(const PropertyOptions& opts) {
    return run_vectors("lemma46-congruence", opts, 0.10, [](const Vec16& v, SuiteResult& r) {
        NormFactorization nf = norms(v);
        const Transforms& t = nf.transforms;
        if (!parity_hypothesis_e(t)) return;
        ++r.hypothesis_hits;
        Int y = t.b[0] * t.b[2] + t.b[1] * t.b[3] + t.c[0] * t.c[2] + t.c[1] * t.c[3];
        if (mod_ui(nf.alpha1.re - (pow_sign(t.b[2]) + 2 * y), 8) != 0 ||
            mod_ui(nf.alpha1.im - (pow_sign(t.b[1]) + 2 * y), 8) != 0)
            record_violation(r, v, "alpha1 congruences mod 8 failed");
    });
}

SuiteResult suite_lemma47(const PropertyOptions& opts) {
    return run_vectors("lemma47-congruence", opts, 0.10, [](const Vec16& v, SuiteResult& r) {
        NormFactorization nf = norms(v);
        if (!(pm1_mod8(nf.alpha1.re) && pm1_mod8(nf.alpha1.im) && pm1_mod8(nf.alpha2.re) &&
              pm1_mod8(nf.alpha2.im)))
            return;
        ++r.hypothesis_hits;
        if (mod_ui(nf.n4 - (nf.n8 * nf.n16 + 2), 16) != 0)
            record_violation(r, v, "N4 != N8 N16 + 2 (mod 16)");
    });
}

SuiteResult suite_cross_oracle(const PropertyOptions& opts) {
    return run_vectors("cross-oracle-algebra", opts, 0.0, [](const Vec16& v, SuiteResult& r) {
        ++r.hypothesis_hits;
        NormFactorization nf = norms(v);
        if (!(nf.alpha1 == alpha1_exact(v)))
            record_violation(r, v, "alpha1 formula disagrees with the quotient ring");
        if (!(nf.alpha2 == alpha2_exact(v)))
            record_violation(r, v, "alpha2 formula disagrees with the quotient ring");
        if (nf.n2 != n2_ring(v))
            record_violation(r, v, "N2 formula disagrees with the four-factor ring product");
        if (nf.product() != det_bareiss(v))
            record_violation(r, v, "norm-product determinant disagrees with elimination");
    });
}

SuiteResult suite_convolution(const PropertyOptions& opts) {
    SuiteResult r;
    r.name = "convolution-multiplicativity";
    PropertyOptions pair_opts = opts;
    VectorGen gen(pair_opts);
    std::uint64_t pairs = std::max<std::uint64_t>(1, opts.vectors / 10);
    for (std::uint64_t i = 0; i < pairs; ++i) {
        Vec16 u = gen.uniform(), w = gen.uniform();
        ++r.cases;
        ++r.hypothesis_hits;
        if (det_bareiss(cyclic_convolve(u, w)) != det_bareiss(u) * det_bareiss(w))
            record_violation(r, u, "det(u * w) != det(u) det(w)");
    }
    return r;
}

SuiteResult suite_remark45_exhaustive() {
    SuiteResult r;
    r.name = "remark45-identities";
    for (long a = -8; a <= 8; ++a)
        for (long b = -8; b <= 8; ++b)
            for (long c = -8; c <= 8; ++c)
                for (long d = -8; d <= 8; ++d) {
                    ++r.cases;
                    ++r.hypothesis_hits;
                    bool ok = true;
                    if (((a + b) & 1) != ((c + d) & 1))
                        ok = ok && (((a * b + c * d) - (a * c + b * d)) % 2 == 0);
                    long t2 = 4 * a * b * (a * a + b * b);
                    ok = ok && (((t2 % 8) + 8) % 8 == 0);
                    long lhs = a * a * a * a + b * b * b * b + 2 * a * a * b * b + 4 * a * b;
                    long rhs = ((a + b) & 1) ? 1 : 0;  // (1 - (-1)^(a+b)) / 2
                    ok = ok && ((((lhs - rhs) % 8) + 8) % 8 == 0);
                    if (!ok) {
                        ++r.violations;
                        if (r.detail.empty()) {
                            std::ostringstream os;
                            os << "identity failed at (" << a << "," << b << "," << c << ","
                               << d << ")";
                            r.detail = os.str();
                        }
                    }
                }
    return r;
}

SuiteResult suite_witness_roundtrip(std::uint64_t seed) {
    SuiteResult r;
    r.name = "witness-roundtrip";
    std::vector<Int> table = {1,   -1,  35,  -99, 0,    128,  -128, 256,  -384, 320,
                              512, 576, 832, 1088, 1856, 2880, -320, 4672, 6208, 64 * 89};
    for (const Int& v : table) {
        ++r.cases;
        MembershipVerdict verdict = classify(v, seed);
        if (!verdict.member) {
            ++r.violations;
            if (r.detail.empty()) {
                std::ostringstream os;
                os << "table value " << v << " classified as non-member";
                r.detail = os.str();
            }
            continue;
        }
        ++r.hypothesis_hits;
        Vec16 w = build_witness(verdict);  // throws on determinant mismatch
        if (det_bareiss(w) != v) record_violation(r, w, "round-trip determinant mismatch");
    }
    return r;
}

SuiteResult suite_base128(const Vec16* override_constant) {
    SuiteResult r;
    r.name = "base128-constant";
    r.cases = 1;
    r.hypothesis_hits = 1;
    const Vec16& v = override_constant ? *override_constant : base128_witness();
    Int d = det_bareiss(v);
    if (d != 128) {
        ++r.violations;
        std::ostringstream os;
        os << "embedded base128 constant has determinant " << d << ", invariant requires 128";
        r.detail = os.str();
    }
    return r;
}

namespace {

SuiteResult suite_enumeration_members(const char* name, const SearchBox& box,
                                      const PropertyOptions& opts,
                                      const std::vector<Int>& must_miss) {
    SuiteResult r;
    r.name = name;
    EnumerateOptions eopts;
    eopts.jobs = opts.jobs;
    SpectrumReport report = spectrum(box, eopts);
    r.cases = report.vectors_visited;
    for (const auto& [value, vec] : report.witnesses) {
        ++r.hypothesis_hits;
        MembershipVerdict verdict = classify(value, opts.seed);
        if (!verdict.member) {
            ++r.violations;
            if (r.detail.empty()) {
                std::ostringstream os;
                os << "attained value " << value << " classified as non-member";
                r.detail = os.str();
            }
        }
    }
    for (const Int& t : must_miss) {
        if (report.witnesses.count(t)) {
            ++r.violations;
            std::ostringstream os;
            os << "excluded value " << t << " was attained";
            r.detail = os.str();
        }
    }
    return r;
}

SuiteResult suite_small_order_spectra(const PropertyOptions& opts) {
    SuiteResult r;
    r.name = "small-order-spectra";
    for (const SearchBox& box : {SearchBox{2, -3, 3}, SearchBox{4, -2, 2}, SearchBox{8, -1, 1}}) {
        EnumerateOptions eopts;
        eopts.jobs = opts.jobs;
        SpectrumReport report = spectrum(box, eopts);
        r.cases += report.vectors_visited;
        for (const auto& [value, vec] : report.witnesses) {
            ++r.hypothesis_hits;
            if (!in_published_spectrum(box.n, value)) {
                ++r.violations;
                if (r.detail.empty()) {
                    std::ostringstream os;
                    os << "order " << box.n << " attained " << value
                       << " outside its published spectrum";
                    r.detail = os.str();
                }
            }
        }
    }
    return r;
}

}  // namespace

std::vector<SuiteResult> selftest_quick(const PropertyOptions& opts) {
    std::vector<SuiteResult> out;
    out.push_back(suite_factorization(opts));
    out.push_back(suite_parity_lemma32(opts));
    out.push_back(suite_remark21(opts));
    out.push_back(suite_lemma33(opts));
    out.push_back(suite_lemma34(opts));
    out.push_back(suite_lemma25(opts));
    out.push_back(suite_thm31(opts));
    out.push_back(suite_lemma42(opts));
    out.push_back(suite_lemma43(opts));
    out.push_back(suite_lemma44(opts));
    out.push_back(suite_lemma46(opts));
    out.push_back(suite_lemma47(opts));
    out.push_back(suite_remark45_exhaustive());
    out.push_back(suite_cross_oracle(opts));
    out.push_back(suite_convolution(opts));
    out.push_back(suite_witness_roundtrip(opts.seed));
    out.push_back(suite_base128());
    return out;
}

std::vector<SuiteResult> selftest_full(const PropertyOptions& opts) {
    std::vector<SuiteResult> out = selftest_quick(opts);
    out.push_back(suite_small_order_spectra(opts));
    out.push_back(
        suite_enumeration_members("enumeration-01-members", SearchBox{16, 0, 1}, opts, {}));
    out.push_back(suite_enumeration_members("enumeration-pm1-members", SearchBox{16, -1, 1},
                                            opts, {64, 192, 448, 7232}));
    return out;
}

}  // namespace circ16
