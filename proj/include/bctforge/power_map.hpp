// SPDX-License-Identifier: Apache-2.0
//
// Power mappings F(x) = x^d over GF(q^2), their derivative maps
// D(x) = F(x+1) - F(x), exhaustive preimage enumeration, differential
// spectra and DDT access through the power-map reduction
// delta(a,b) = delta(1, b/a^d).

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bctforge/field.hpp"

namespace bctforge {

// An exponent d in [1, q^2-1) bound to a field whose order is a square q^2.
// The context must outlive the map.
struct PowerMap {
    const FieldCtx* ctx = nullptr;
    std::uint32_t q = 0;
    std::uint64_t d = 0;
};

struct SpectrumReport {
    std::map<std::uint32_t, std::uint64_t> omega;   // multiplicity i -> #b with delta(b) = i
    std::uint32_t max_delta = 0;                    // differential uniformity
    std::optional<std::vector<std::uint32_t>> per_b; // delta(b) indexed by b, on request
};

namespace detail {

inline std::uint32_t square_root_of_order(const FieldCtx& ctx) {
    if (ctx.degree() % 2 != 0)
        throw Error(Errc::NotSquareField, "field order is not a square");
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < ctx.degree() / 2; ++i) q *= ctx.characteristic();
    return q;
}

} // namespace detail

inline PowerMap make_power(const FieldCtx& ctx, std::int64_t d) {
    const std::uint32_t q = detail::square_root_of_order(ctx);
    const std::int64_t group = std::int64_t{q} * q - 1;
    if (d <= 0) throw Error(Errc::InvalidExponent, "exponent must be positive");
    const std::int64_t r = d % group;
    if (r == 0) throw Error(Errc::InvalidExponent, "exponent vanishes modulo q^2-1");
    return PowerMap{&ctx, q, static_cast<std::uint64_t>(r)};
}

// d = q - 1
inline PowerMap make_f1(const FieldCtx& ctx) {
    const std::uint32_t q = detail::square_root_of_order(ctx);
    return make_power(ctx, std::int64_t{q} - 1);
}

// d = (q-1) + (q^2-1)/2 = (q-1)(q+3)/2
inline PowerMap make_f2(const FieldCtx& ctx) {
    const std::uint32_t q = detail::square_root_of_order(ctx);
    return make_power(ctx, std::int64_t{q - 1} * (q + 3) / 2);
}

inline Elem eval(const PowerMap& f, Elem x) { return f.ctx->pow(x, f.d); }

// D(x) = F(x+1) - F(x)
inline Elem derivative_at(const PowerMap& f, Elem x) {
    const FieldCtx& ctx = *f.ctx;
    return ctx.sub(eval(f, ctx.add(x, ctx.one())), eval(f, x));
}

// Exhaustive scan: every x with D(x) = b, ascending by index. This is the
// brute-force oracle the analytic counters are checked against.
inline std::vector<Elem> delta_preimage(const PowerMap& f, Elem b) {
    std::vector<Elem> out;
    for (std::uint32_t x = 0; x < f.ctx->order(); ++x)
        if (derivative_at(f, Elem{x}) == b) out.push_back(Elem{x});
    return out;
}

inline SpectrumReport differential_spectrum(const PowerMap& f, bool include_per_b = false) {
    const std::uint32_t n = f.ctx->order();
    std::vector<std::uint32_t> count(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) ++count[derivative_at(f, Elem{x}).v];

    SpectrumReport rep;
    for (std::uint32_t b = 0; b < n; ++b) {
        ++rep.omega[count[b]];
        rep.max_delta = std::max(rep.max_delta, count[b]);
    }
    if (include_per_b) rep.per_b = std::move(count);
    return rep;
}

// delta(a,b) for arbitrary nonzero a, through the reduction to the a = 1 row:
// x -> x/a turns F(x+a) - F(x) = b into D(u) = b/a^d.
inline std::uint32_t ddt_entry(const PowerMap& f, Elem a, Elem b) {
    if (a.v == 0) throw Error(Errc::ZeroDifference, "DDT row requires a != 0");
    const FieldCtx& ctx = *f.ctx;
    const Elem reduced = ctx.div(b, ctx.pow(a, f.d));
    return static_cast<std::uint32_t>(delta_preimage(f, reduced).size());
}

} // namespace bctforge
