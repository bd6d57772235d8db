#pragma once

// Exhaustive enumeration helpers for prime-field vector spaces, with the
// shared budget convention: a pass over F_p^m is allowed iff p^m <= budget.

#include <cstdint>
#include <string>

#include "zadkit/error.hpp"
#include "zadkit/field.hpp"

namespace zadkit {

struct Options {
    std::uint64_t budget = std::uint64_t{1} << 16; // max enumerated vectors per exhaustive pass
    std::uint64_t seed = 0;                        // candidate streams and probes
    int probe_trials = 64;                         // zero-divisor probe attempts over Q
    std::int64_t max_root_scan = 200000;           // residue/divisor scan bound for root extraction
};

// p^m if it fits below limit, otherwise nullopt.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t p, int m, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (int i = 0; i < m; ++i) {
        if (r > limit / p) return std::nullopt;
        r *= p;
    }
    return r;
}

inline bool within_budget(const PrimeField& k, int m, const Options& opts) {
    return checked_pow(static_cast<std::uint64_t>(k.characteristic()), m, opts.budget).has_value();
}

inline void require_budget(const PrimeField& k, int m, const Options& opts, const std::string& what) {
    if (!within_budget(k, m, opts))
        fail(Errc::OverBudget, what + ": enumeration of " + std::to_string(k.characteristic()) + "^" +
                                   std::to_string(m) + " vectors exceeds budget " + std::to_string(opts.budget));
}

// Visits every vector of F_p^m (including zero) in lexicographic order, least
// significant coordinate first. Fn returning false stops early.
template <class Fn>
void for_each_vector(const PrimeField& k, int m, Fn&& fn) {
    Vec<PrimeField> v(m, 0);
    const std::int64_t p = k.characteristic();
    while (true) {
        if constexpr (requires { { fn(v) } -> std::convertible_to<bool>; }) {
            if (!fn(v)) return;
        } else {
            fn(v);
        }
        int i = 0;
        while (i < m) {
            if (++v[i] < p) break;
            v[i] = 0;
            ++i;
        }
        if (i == m) return;
    }
}

} // namespace zadkit
