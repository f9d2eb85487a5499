#include "circ16/oracle.hpp"

#include "circ16/circulant.hpp"
#include "circ16/detail/norm_kernel.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

namespace circ16 {

namespace {

using i128 = __int128;

void set_from_i128(Int& z, i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::uint64_t limbs[2] = {static_cast<std::uint64_t>(u),
                              static_cast<std::uint64_t>(u >> 64)};
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
    if (neg) mpz_neg(z.get_mpz_t(), z.get_mpz_t());
}

void validate(const SearchBox& box, const EnumerateOptions& opts) {
    if (box.n != 2 && box.n != 4 && box.n != 8 && box.n != 16)
        throw std::invalid_argument("search box order must be 2, 4, 8 or 16");
    if (box.lo > box.hi) throw std::invalid_argument("search box needs lo <= hi");
    if (box.n == 16 && (box.lo < -2 || box.hi > 2) && !opts.allow_large)
        throw std::invalid_argument(
            "entry bounds beyond [-2,2] at order 16 require the explicit override");
}

std::uint64_t box_size_capped(const SearchBox& box) {
    unsigned __int128 total = 1;
    std::size_t width = box_alphabet(box.lo, box.hi).size();
    for (int i = 0; i < box.n; ++i) {
        total *= width;
        if (total > (static_cast<unsigned __int128>(1) << 100)) return UINT64_MAX;
    }
    return total > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(total);
}

// The int128 route is exact as long as every intermediate stays below
// 2^127; (n * M)^n bounds the determinant and all partial norm products.
bool i128_route_safe(const SearchBox& box) {
    long m = std::max(std::labs(box.lo), std::labs(box.hi));
    switch (box.n) {
        case 16: return m <= 15;
        case 8: return m <= 4096;
        case 4: return m <= 1'000'000;
        default: return m <= 1'000'000'000;
    }
}

template <class T>
T det_by_order(const T* a, int n) {
    switch (n) {
        case 2: return detail::det2_direct(a);
        case 4: return detail::det4_direct(a);
        case 8: return detail::det8_direct(a);
        default: return detail::det16_by_norms(a);
    }
}

Int det_reference(std::span<const long> a) {
    CoeffVec v(a.begin(), a.end());
    return det_bareiss(v);
}

// Odometer over the trailing coordinates [first, n); returns false once the
// span of positions wraps around (innermost coordinate varies fastest).
struct Odometer {
    const std::vector<long>& alpha;
    std::vector<int> idx;
    std::vector<long> value;
    int first;

    Odometer(const std::vector<long>& alphabet, int n, int first_coord)
        : alpha(alphabet), idx(n, 0), value(n, alphabet[0]), first(first_coord) {}

    bool step() {
        for (int pos = static_cast<int>(idx.size()) - 1; pos >= first; --pos) {
            if (++idx[pos] < static_cast<int>(alpha.size())) {
                value[pos] = alpha[idx[pos]];
                return true;
            }
            idx[pos] = 0;
            value[pos] = alpha[0];
        }
        return false;
    }
};

struct CrossChecker {
    std::uint64_t stride;
    std::uint64_t countdown;

    explicit CrossChecker(std::uint64_t s) : stride(s), countdown(s) {}

    void check(std::span<const long> a, const Int& det) {
        if (stride == 0) return;
        if (--countdown > 0) return;
        countdown = stride;
        Int ref = det_reference(a);
        if (ref != det) {
            std::ostringstream os;
            os << "oracle: norm-route determinant " << det
               << " disagrees with elimination (" << ref << ")";
            throw InternalInvariantViolation(os.str());
        }
    }
};

// Scan one (a0, a1) partition of the box, calling sink(vector, det) for every
// vector in order. Fast path in int128 when the bounds admit it.
template <class Sink>
void scan_partition(const SearchBox& box, const std::vector<long>& alpha, int i0, int i1,
                    bool fast, CrossChecker& crosscheck, Sink&& sink) {
    const int n = box.n;
    // At order 2 the partition key is a0 alone and the odometer spins a1.
    Odometer od(alpha, n, n == 2 ? 1 : 2);
    od.idx[0] = i0;
    od.value[0] = alpha[i0];
    if (n > 2) {
        od.idx[1] = i1;
        od.value[1] = alpha[i1];
    }

    Int det;
    if (fast) {
        std::array<i128, 16> a{};
        do {
            for (int i = 0; i < n; ++i) a[i] = od.value[i];
            i128 d = det_by_order(a.data(), n);
            set_from_i128(det, d);
            crosscheck.check(std::span<const long>(od.value.data(), n), det);
            sink(std::span<const long>(od.value.data(), n), det);
        } while (od.step());
    } else {
        std::array<Int, 16> a{};
        do {
            for (int i = 0; i < n; ++i) a[i] = od.value[i];
            det = det_by_order(a.data(), n);
            crosscheck.check(std::span<const long>(od.value.data(), n), det);
            sink(std::span<const long>(od.value.data(), n), det);
        } while (od.step());
    }
}

struct PartitionIndex {
    int i0, i1;
};

std::vector<PartitionIndex> partitions_of(const SearchBox& box, std::size_t width) {
    std::vector<PartitionIndex> parts;
    if (box.n == 2) {
        // a1 is part of the partition key only for n > 2.
        for (std::size_t i = 0; i < width; ++i) parts.push_back({static_cast<int>(i), 0});
        return parts;
    }
    for (std::size_t i = 0; i < width; ++i)
        for (std::size_t j = 0; j < width; ++j)
            parts.push_back({static_cast<int>(i), static_cast<int>(j)});
    return parts;
}

}  // namespace

std::uint64_t default_max_work() {
    if (const char* env = std::getenv("CIRC16_MAX_WORK")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 50'000'000ull;
}

std::vector<long> box_alphabet(long lo, long hi) {
    std::vector<long> alpha;
    long top = std::max(std::labs(lo), std::labs(hi));
    for (long m = 0; m <= top; ++m) {
        if (m == 0) {
            if (lo <= 0 && 0 <= hi) alpha.push_back(0);
            continue;
        }
        if (m <= hi && m >= lo) alpha.push_back(m);
        if (-m >= lo && -m <= hi) alpha.push_back(-m);
    }
    return alpha;
}

void enumerate(const SearchBox& box,
               const std::function<void(std::span<const long>, const Int&)>& visitor,
               const EnumerateOptions& opts) {
    validate(box, opts);
    std::uint64_t cap = opts.max_work ? opts.max_work : default_max_work();
    std::uint64_t total = box_size_capped(box);
    if (total > cap) {
        std::ostringstream os;
        os << "enumerate: box holds " << total << " vectors, above the work cap " << cap;
        throw BudgetExceeded(os.str());
    }

    const auto alpha = box_alphabet(box.lo, box.hi);
    const auto parts = partitions_of(box, alpha.size());
    const int jobs = std::max(1, opts.jobs);

    if (jobs == 1) {
        CrossChecker crosscheck(opts.crosscheck_stride);
        bool fast = i128_route_safe(box);
        for (const auto& part : parts)
            scan_partition(box, alpha, part.i0, part.i1, fast, crosscheck, visitor);
        return;
    }

    std::mutex sink_mutex;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        CrossChecker crosscheck(opts.crosscheck_stride);
        bool fast = i128_route_safe(box);
        try {
            while (!failed) {
                std::size_t mine = next.fetch_add(1);
                if (mine >= parts.size()) break;
                scan_partition(box, alpha, parts[mine].i0, parts[mine].i1, fast, crosscheck,
                               [&](std::span<const long> a, const Int& det) {
                                   std::scoped_lock lock(sink_mutex);
                                   visitor(a, det);
                               });
            }
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
            failed = true;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::optional<std::vector<long>> find_value(const Int& target, const SearchBox& box,
                                            const EnumerateOptions& opts) {
    validate(box, opts);
    std::uint64_t cap = opts.max_work ? opts.max_work : default_max_work();

    // Early-exit scan in global enumeration order; the budget counts visited
    // vectors, not the box size, so a hit inside the cap is always reported.
    const auto alpha = box_alphabet(box.lo, box.hi);
    const bool fast = i128_route_safe(box);
    CrossChecker crosscheck(opts.crosscheck_stride);
    Odometer od(alpha, box.n, 0);
    std::uint64_t visited = 0;
    Int det;
    std::array<i128, 16> fast_a{};
    std::array<Int, 16> slow_a{};
    do {
        if (visited >= cap) {
            std::ostringstream os;
            os << "find_value: visited " << visited << " vectors without a hit, cap " << cap;
            throw BudgetExceeded(os.str());
        }
        ++visited;
        if (fast) {
            for (int i = 0; i < box.n; ++i) fast_a[i] = od.value[i];
            set_from_i128(det, det_by_order(fast_a.data(), box.n));
        } else {
            for (int i = 0; i < box.n; ++i) slow_a[i] = od.value[i];
            det = det_by_order(slow_a.data(), box.n);
        }
        crosscheck.check(std::span<const long>(od.value.data(), box.n), det);
        if (det == target)
            return std::vector<long>(od.value.begin(), od.value.begin() + box.n);
    } while (od.step());
    return std::nullopt;
}

SpectrumReport spectrum(const SearchBox& box, const EnumerateOptions& opts) {
    validate(box, opts);
    std::uint64_t cap = opts.max_work ? opts.max_work : default_max_work();
    std::uint64_t total = box_size_capped(box);
    if (total > cap) {
        std::ostringstream os;
        os << "spectrum: box holds " << total << " vectors, above the work cap " << cap;
        throw BudgetExceeded(os.str());
    }

    const auto alpha = box_alphabet(box.lo, box.hi);
    const auto parts = partitions_of(box, alpha.size());
    const int jobs = std::max(1, opts.jobs);
    const bool fast = i128_route_safe(box);

    using PartMap = std::map<Int, std::vector<long>>;
    std::vector<PartMap> results(parts.size());
    std::vector<std::uint64_t> counts(parts.size(), 0);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        CrossChecker crosscheck(opts.crosscheck_stride);
        try {
            while (!failed) {
                std::size_t mine = next.fetch_add(1);
                if (mine >= parts.size()) break;
                PartMap& local = results[mine];
                std::uint64_t seen = 0;
                scan_partition(box, alpha, parts[mine].i0, parts[mine].i1, fast, crosscheck,
                               [&](std::span<const long> a, const Int& det) {
                                   ++seen;
                                   auto [it, inserted] = local.try_emplace(det);
                                   if (inserted)
                                       it->second.assign(a.begin(), a.end());
                               });
                counts[mine] = seen;
            }
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
            failed = true;
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    // Merge in partition order: the first witness of a value overall is the
    // first one in the earliest partition that attains it.
    SpectrumReport report;
    report.box = box;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        report.vectors_visited += counts[i];
        for (auto& [value, vec] : results[i]) report.witnesses.try_emplace(value, std::move(vec));
    }
    return report;
}

bool in_published_spectrum(int n, const Int& value) {
    if (mpz_odd_p(value.get_mpz_t())) return true;
    switch (n) {
        case 2: return mpz_divisible_ui_p(value.get_mpz_t(), 4);
        case 4: return mpz_divisible_ui_p(value.get_mpz_t(), 16);
        case 8: return mpz_divisible_ui_p(value.get_mpz_t(), 32);
        default: throw std::invalid_argument("published spectra cover n in {2,4,8}");
    }
}

}  // namespace circ16
