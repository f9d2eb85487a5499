#pragma once

#include "circ16/int_types.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace circ16 {

/// Bounded enumeration box. Entries beyond [-2,2] at order 16 need the
/// explicit allow_large override (5^16 vectors already exceed desk scale).
struct SearchBox {
    int n = 16;       // 2, 4, 8 or 16
    long lo = 0;
    long hi = 0;
};

struct EnumerateOptions {
    int jobs = 1;
    /// Vector-count budget; 0 means "read CIRC16_MAX_WORK or the 5*10^7
    /// default". enumerate/spectrum check the full box size up front;
    /// find_value counts visited vectors and stops when the cap is crossed.
    std::uint64_t max_work = 0;
    bool allow_large = false;
    /// One det_bareiss cross-check per this many visited vectors (0 = off).
    std::uint64_t crosscheck_stride = 100000;
};

struct SpectrumReport {
    SearchBox box;
    /// value -> first attaining vector in enumeration order.
    std::map<Int, std::vector<long>> witnesses;
    std::uint64_t vectors_visited = 0;
};

std::uint64_t default_max_work();

/// The per-coordinate alphabet of the documented enumeration order: values
/// of [lo,hi] sorted by |x| ascending, positive before negative at equal
/// magnitude (0, 1, -1, 2, -2, ...). Enumeration is lexicographic over this
/// alphabet with a0 most significant and a15 varying fastest.
std::vector<long> box_alphabet(long lo, long hi);

/// Visit every vector of the box exactly once in the documented order with
/// its exact determinant. With jobs > 1 the box is partitioned on (a0, a1)
/// and partitions run concurrently; the visitor is then invoked under a lock,
/// in order within each partition. Throws BudgetExceeded when the box size
/// exceeds the work cap.
void enumerate(const SearchBox& box,
               const std::function<void(std::span<const long>, const Int&)>& visitor,
               const EnumerateOptions& opts = {});

/// First vector in enumeration order with determinant target, or nullopt
/// (evidence, not proof, of non-membership). Runs sequentially with early
/// exit; BudgetExceeded when the cap is crossed before a hit.
std::optional<std::vector<long>> find_value(const Int& target, const SearchBox& box,
                                            const EnumerateOptions& opts = {});

/// Exhaustive value set with first witnesses; deterministic for any job
/// count (partition results merge in partition order).
SpectrumReport spectrum(const SearchBox& box, const EnumerateOptions& opts = {});

/// The published spectrum of small orders: Z_odd union 4Z / 16Z / 32Z for
/// n = 2 / 4 / 8.
bool in_published_spectrum(int n, const Int& value);

}  // namespace circ16
