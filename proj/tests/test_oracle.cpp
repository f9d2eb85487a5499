#include "circ16/oracle.hpp"

#include "circ16/circulant.hpp"
#include "circ16/classifier.hpp"

#include <doctest.h>

#include <set>

using namespace circ16;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("alphabet order is by magnitude, positive first") {
    CHECK(box_alphabet(-2, 2) == std::vector<long>{0, 1, -1, 2, -2});
    CHECK(box_alphabet(0, 1) == std::vector<long>{0, 1});
    CHECK(box_alphabet(-1, 1) == std::vector<long>{0, 1, -1});
    CHECK(box_alphabet(-3, 1) == std::vector<long>{0, 1, -1, -2, -3});
    CHECK(box_alphabet(2, 3) == std::vector<long>{2, 3});
}

TEST_CASE("order-2 box visits every vector once with the right determinant") {
    std::set<std::pair<long, long>> seen;
    std::vector<Int> values;
    enumerate(SearchBox{2, -1, 1}, [&](std::span<const long> a, const Int& det) {
        CHECK(a.size() == 2);
        CHECK(seen.insert({a[0], a[1]}).second);
        CHECK(det == Int(a[0]) * a[0] - Int(a[1]) * a[1]);
        values.push_back(det);
    });
    CHECK(seen.size() == 9);
    std::set<Int> distinct(values.begin(), values.end());
    CHECK(distinct == std::set<Int>{-1, 0, 1});
}

TEST_CASE("enumeration agrees with elimination on every order") {
    // [-1,1] for the small orders, {0,1} at order 16 (the full [-1,1]^16
    // sweep belongs to the acceptance run).
    for (SearchBox box : {SearchBox{2, -1, 1}, SearchBox{4, -1, 1}, SearchBox{8, -1, 1},
                          SearchBox{16, 0, 1}}) {
        std::uint64_t count = 0, expected = 1;
        for (int i = 0; i < box.n; ++i) expected *= (box.n == 16 ? 2 : 3);
        enumerate(box, [&](std::span<const long> a, const Int& det) {
            if (++count % 97 != 1) return;  // sampled; the stride check covers the rest
            CoeffVec v(a.begin(), a.end());
            CHECK(det_bareiss(v) == det);
        });
        CHECK(count == expected);
    }
}

TEST_CASE("find walks the documented order") {
    // First determinant-1 vector in the [0,1] box: the shift-by-14
    // permutation matrix (the two earlier vectors have det 0 and -1).
    auto hit = find_value(1, SearchBox{16, 0, 1});
    REQUIRE(hit.has_value());
    std::vector<long> expected(16, 0);
    expected[14] = 1;
    CHECK(*hit == expected);

    auto none = find_value(64, SearchBox{16, 0, 1});
    CHECK(!none.has_value());
}

TEST_CASE("find honours the work cap") {
    EnumerateOptions opts;
    opts.max_work = 100;
    CHECK_THROWS_AS(find_value(9999, SearchBox{16, 0, 1}, opts), BudgetExceeded);
}

TEST_CASE("oversized boxes are rejected up front") {
    CHECK_THROWS_AS(spectrum(SearchBox{16, -2, 2}), BudgetExceeded);
    // Bounds beyond [-2,2] at order 16 need the override flag regardless.
    CHECK_THROWS_AS(spectrum(SearchBox{16, -3, 3}), std::invalid_argument);
}

TEST_CASE("spectrum of the order-4 box stays inside the published set") {
    SpectrumReport report = spectrum(SearchBox{4, -2, 2});
    CHECK(report.vectors_visited == 625);
    for (const auto& [value, vec] : report.witnesses) {
        CHECK(in_published_spectrum(4, value));
        CoeffVec v(vec.begin(), vec.end());
        CHECK(det_bareiss(v) == value);
    }
}

TEST_CASE("spectrum is identical for any worker count") {
    SpectrumReport seq = spectrum(SearchBox{8, -1, 1});
    EnumerateOptions par;
    par.jobs = 4;
    SpectrumReport parallel = spectrum(SearchBox{8, -1, 1}, par);
    CHECK(seq.vectors_visited == parallel.vectors_visited);
    REQUIRE(seq.witnesses.size() == parallel.witnesses.size());
    CHECK(seq.witnesses == parallel.witnesses);
}

TEST_CASE("base128 discovery run reproduces the embedded constant") {
    auto hit = find_value(128, SearchBox{16, -2, 2});
    REQUIRE(hit.has_value());
    std::vector<long> expected = {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1};
    CHECK(*hit == expected);
}

TEST_CASE("published spectra membership helper") {
    CHECK(in_published_spectrum(2, 7));
    CHECK(in_published_spectrum(2, 4));
    CHECK(!in_published_spectrum(2, 2));
    CHECK(in_published_spectrum(4, 16));
    CHECK(!in_published_spectrum(4, 8));
    CHECK(in_published_spectrum(8, -32));
    CHECK(!in_published_spectrum(8, 16));
}

TEST_SUITE_END();
