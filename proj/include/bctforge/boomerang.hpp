// SPDX-License-Identifier: Apache-2.0
//
// Boomerang connectivity rows beta(1,b) and the boomerang uniformity of a
// power map. The fast path buckets x by the derivative value c = D(x): the
// defining system
//     F(x) - F(y) = b,  F(x+1) - F(y+1) = b
// is equivalent to F(x) - F(y) = b together with D(x) = D(y), so ordered
// pairs inside one bucket are the only candidates. Cost O(q^2 + sum s_c^2)
// against the O(q^4) exhaustive oracle kept alongside for cross-checks.

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bctforge/power_map.hpp"

namespace bctforge {

struct BctReport {
    std::map<std::uint32_t, std::uint32_t> per_b;  // b -> beta(1,b), zero entries omitted
    std::uint32_t beta = 0;                        // max over per_b, 0 if empty
    std::map<std::uint32_t, std::uint64_t> spectrum;      // beta value -> #b, implied zeros included
    std::map<std::uint32_t, std::uint64_t> omega_classes; // i -> #c with delta(c) = i
};

namespace detail {

inline std::map<std::uint32_t, std::vector<std::uint32_t>> derivative_buckets(const PowerMap& f) {
    std::map<std::uint32_t, std::vector<std::uint32_t>> buckets;
    for (std::uint32_t x = 0; x < f.ctx->order(); ++x)
        buckets[derivative_at(f, Elem{x}).v].push_back(x);
    return buckets;
}

} // namespace detail

// Exhaustive count of ordered pairs (x, y) solving the system for one b.
inline std::uint32_t bct_row_naive(const PowerMap& f, Elem b) {
    if (b.v == 0) throw Error(Errc::ZeroB, "boomerang rows are defined for b != 0");
    const FieldCtx& ctx = *f.ctx;
    const std::uint32_t n = ctx.order();
    std::uint32_t count = 0;
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            if (ctx.sub(eval(f, Elem{x}), eval(f, Elem{y})) != b) continue;
            const Elem x1 = ctx.add(Elem{x}, ctx.one());
            const Elem y1 = ctx.add(Elem{y}, ctx.one());
            if (ctx.sub(eval(f, x1), eval(f, y1)) == b) ++count;
        }
    return count;
}

inline BctReport bct_rows_fast(const PowerMap& f) {
    const FieldCtx& ctx = *f.ctx;
    const std::uint32_t n = ctx.order();

    std::vector<std::uint32_t> fx(n);
    for (std::uint32_t x = 0; x < n; ++x) fx[x] = eval(f, Elem{x}).v;

    BctReport rep;
    const auto buckets = detail::derivative_buckets(f);
    for (const auto& [c, xs] : buckets) {
        ++rep.omega_classes[static_cast<std::uint32_t>(xs.size())];
        if (xs.size() < 2) continue;
        for (std::uint32_t x : xs)
            for (std::uint32_t y : xs) {
                if (x == y) continue;
                const Elem b = ctx.sub(Elem{fx[x]}, Elem{fx[y]});
                if (b.v != 0) ++rep.per_b[b.v];
            }
    }
    const std::uint64_t empty_classes = n - buckets.size();
    if (empty_classes > 0) rep.omega_classes[0] = empty_classes;

    for (const auto& [b, cnt] : rep.per_b) {
        rep.beta = std::max(rep.beta, cnt);
        ++rep.spectrum[cnt];
    }
    rep.spectrum[0] = n - 1 - rep.per_b.size();
    return rep;
}

inline std::uint32_t boomerang_uniformity(const PowerMap& f) { return bct_rows_fast(f).beta; }

// Explicit ordered solutions (x, y) of the system for one b, from the
// bucketing pass, ascending by bucket key then by (x, y).
inline std::vector<std::pair<Elem, Elem>> solution_pairs(const PowerMap& f, Elem b) {
    if (b.v == 0) throw Error(Errc::ZeroB, "boomerang rows are defined for b != 0");
    const FieldCtx& ctx = *f.ctx;
    std::vector<std::pair<Elem, Elem>> out;
    for (const auto& [c, xs] : detail::derivative_buckets(f)) {
        if (xs.size() < 2) continue;
        for (std::uint32_t x : xs)
            for (std::uint32_t y : xs)
                if (x != y && ctx.sub(eval(f, Elem{x}), eval(f, Elem{y})) == b)
                    out.emplace_back(Elem{x}, Elem{y});
    }
    return out;
}

} // namespace bctforge
