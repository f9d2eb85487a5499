#include "circ16/properties.hpp"

#include "circ16/witness.hpp"

#include <doctest.h>

using namespace circ16;

TEST_SUITE_BEGIN("properties");

TEST_CASE("quick suites pass on a small budget") {
    PropertyOptions opts;
    opts.vectors = 400;
    for (const SuiteResult& s : selftest_quick(opts)) {
        CAPTURE(s.name);
        CAPTURE(s.detail);
        CHECK(s.violations == 0);
        CHECK(s.passed());
    }
}

TEST_CASE("corrupting the embedded base128 constant is caught by name") {
    Vec16 corrupt = base128_witness();
    corrupt[0] = 1;
    SuiteResult s = suite_base128(&corrupt);
    CHECK(!s.passed());
    CHECK(s.violations == 1);
    CHECK(s.detail.find("base128") != std::string::npos);
    CHECK(s.detail.find("128") != std::string::npos);
}

TEST_CASE("hypothesis gate trips when hits fall below the floor") {
    SuiteResult r;
    r.name = "gate";
    r.min_hit_rate = 0.10;
    r.cases = 1000;
    r.hypothesis_hits = 50;  // 5%
    CHECK(!r.hypothesis_ok());
    CHECK(!r.passed());
    r.hypothesis_hits = 100;
    CHECK(r.hypothesis_ok());
    CHECK(r.passed());
}

TEST_CASE("congruence suites clear the 10% hypothesis floor") {
    PropertyOptions opts;
    opts.vectors = 2000;
    for (SuiteResult s : {suite_lemma42(opts), suite_lemma43(opts), suite_lemma44(opts),
                          suite_lemma46(opts), suite_lemma47(opts)}) {
        CAPTURE(s.name);
        CHECK(s.min_hit_rate == 0.10);
        CHECK(s.hypothesis_ok());
        CHECK(s.violations == 0);
    }
}

TEST_SUITE_END();
