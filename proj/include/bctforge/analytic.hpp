// SPDX-License-Identifier: Apache-2.0
//
// Closed-form preimage construction for the derivative maps of
// F1(x) = x^(q-1) and F2(x) = x^((q-1)(q+3)/2) over GF(q^2).
//
// D1(x) = b reduces, for b outside {0, +1, -1}, to the quadratic
//     x^2 + (1 - 2/b) x + (b^(q-1) + 1 - b^q) / b^(q+1) = 0.
// The reduction applies the q-power map, which is not reversible, so every
// candidate is checked back against the derivative equation before being
// accepted. D2 splits on the quadratic character: chi(x+1) = chi(x) folds
// into the D1 quadratic with b replaced by b*chi(x), and chi(x+1) = -chi(x)
// gives x^2 + x + (b^(q+1) + chi(x)(b^q + b)) / (-chi(x) b (b^(q+1) - 4)) = 0.
//
// delta1_analytic requires q != 2 (mod 3); delta2_analytic additionally
// requires q = 3 (mod 4). Outside those hypotheses the formulas are
// meaningless and a typed error is raised.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bctforge/field.hpp"
#include "bctforge/power_map.hpp"

namespace bctforge {

enum class PreimageMethod {
    SpecialZero,     // b = 0: the base-field elements minus {0, -1}
    SpecialOne,      // b = +1 or -1: the single endpoint root
    QuadraticCase,   // D1, generic b
    CharacterCaseI,  // D2, chi(b) = +1
    CharacterCaseII, // D2, chi(b) = -1
};

struct AnalyticPreimage {
    Elem b;
    std::vector<Elem> roots;   // ascending by index
    PreimageMethod method = PreimageMethod::QuadraticCase;
    bool validated = false;    // every root rechecked against the derivative equation
    std::uint32_t rejected_candidates = 0;  // quadratic candidates the recheck discarded
};

// Roots of A x^2 + B x + C over an odd-characteristic field, ascending.
// Root count is 2, 1 or 0 as the discriminant is a nonzero square, zero,
// or a nonsquare.
inline std::vector<Elem> solve_quadratic(const FieldCtx& ctx, Elem a, Elem b, Elem c) {
    if (a.v == 0)
        throw Error(Errc::DegenerateLeadingCoefficient, "leading coefficient must be nonzero");
    const Elem disc = ctx.sub(ctx.mul(b, b), ctx.mul(ctx.from_int(4), ctx.mul(a, c)));
    const Elem two_a = ctx.mul(ctx.from_int(2), a);
    if (disc.v == 0) return {ctx.div(ctx.neg(b), two_a)};
    if (ctx.chi(disc) < 0) return {};
    const Elem r = *ctx.sqrt(disc);
    Elem x1 = ctx.div(ctx.sub(r, b), two_a);
    Elem x2 = ctx.div(ctx.sub(ctx.neg(r), b), two_a);
    if (x2 < x1) std::swap(x1, x2);
    return {x1, x2};
}

namespace detail {

// Quadratic from the D1 reduction with right-hand side t != 0:
// x^2 + (1 - 2/t) x + (t^(q-1) + 1 - t^q) / t^(q+1) = 0.
inline std::vector<Elem> d1_candidates(const FieldCtx& ctx, std::uint32_t q, Elem t) {
    const Elem one = ctx.one();
    const Elem lin = ctx.sub(one, ctx.div(ctx.from_int(2), t));
    const Elem num = ctx.sub(ctx.add(ctx.pow(t, q - 1), one), ctx.pow(t, q));
    const Elem cst = ctx.div(num, ctx.pow(t, std::uint64_t{q} + 1));
    return solve_quadratic(ctx, one, lin, cst);
}

inline std::vector<Elem> base_field_minus_endpoints(const FieldCtx& ctx) {
    std::vector<Elem> out = ctx.subfield_elements(ctx.degree() / 2);
    std::erase(out, ctx.zero());
    std::erase(out, ctx.from_int(-1));
    return out;
}

} // namespace detail

// Preimage of b under D1(x) = (x+1)^(q-1) - x^(q-1), built from the closed
// form. Requires q != 2 (mod 3).
inline AnalyticPreimage delta1_analytic(const FieldCtx& ctx, Elem b) {
    const std::uint32_t q = detail::square_root_of_order(ctx);
    if (q % 3 == 2)
        throw Error(Errc::HypothesisViolated, "delta1 closed form requires q != 2 (mod 3)");

    AnalyticPreimage out;
    out.b = b;
    out.validated = true;

    const Elem minus_one = ctx.from_int(-1);
    if (b.v == 0) {
        out.method = PreimageMethod::SpecialZero;
        out.roots = detail::base_field_minus_endpoints(ctx);
        return out;
    }
    if (b == ctx.one()) {
        out.method = PreimageMethod::SpecialOne;
        out.roots = {ctx.zero()};
        return out;
    }
    if (b == minus_one) {
        out.method = PreimageMethod::SpecialOne;
        out.roots = {minus_one};
        return out;
    }

    out.method = PreimageMethod::QuadraticCase;
    const PowerMap f1 = make_f1(ctx);
    for (Elem x : detail::d1_candidates(ctx, q, b)) {
        if (derivative_at(f1, x) == b)
            out.roots.push_back(x);
        else
            ++out.rejected_candidates;
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

// Preimage of b under D2(x) = (x+1)^d2 - x^d2, d2 = (q-1)(q+3)/2, built from
// the character case split. Requires q != 2 (mod 3) and q = 3 (mod 4).
inline AnalyticPreimage delta2_analytic(const FieldCtx& ctx, Elem b) {
    const std::uint32_t q = detail::square_root_of_order(ctx);
    if (q % 3 == 2)
        throw Error(Errc::HypothesisViolated, "delta2 closed form requires q != 2 (mod 3)");
    if (q % 4 != 3)
        throw Error(Errc::HypothesisViolated, "delta2 closed form requires q = 3 (mod 4)");

    AnalyticPreimage out;
    out.b = b;
    out.validated = true;

    const Elem one = ctx.one();
    const Elem minus_one = ctx.from_int(-1);
    if (b.v == 0) {
        out.method = PreimageMethod::SpecialZero;
        out.roots = detail::base_field_minus_endpoints(ctx);
        return out;
    }
    if (b == one) {
        out.method = PreimageMethod::SpecialOne;
        out.roots = {ctx.zero()};
        return out;
    }
    if (b == minus_one) {
        out.method = PreimageMethod::SpecialOne;
        out.roots = {minus_one};
        return out;
    }

    const PowerMap f2 = make_f2(ctx);
    const auto accept = [&](Elem x, int sign, int sign_x_plus_1) {
        if (x.v == 0 || x == minus_one) return false;
        if (ctx.chi(x) != sign) return false;
        if (ctx.chi(ctx.add(x, one)) != sign_x_plus_1) return false;
        return derivative_at(f2, x) == b;
    };

    if (ctx.chi(b) > 0) {
        // chi(x+1) = chi(x) = s: D2(x) = b becomes the D1 equation with
        // right-hand side b*s
        out.method = PreimageMethod::CharacterCaseI;
        for (int s : {+1, -1}) {
            const Elem rhs = s > 0 ? b : ctx.neg(b);
            for (Elem x : detail::d1_candidates(ctx, q, rhs)) {
                if (accept(x, s, s))
                    out.roots.push_back(x);
                else
                    ++out.rejected_candidates;
            }
        }
    } else {
        // chi(x+1) = -chi(x) = -s: quadratic x^2 + x + C_s with
        // C_s = (b^(q+1) + s(b^q + b)) / (-s b (b^(q+1) - 4))
        out.method = PreimageMethod::CharacterCaseII;
        const Elem norm = ctx.pow(b, std::uint64_t{q} + 1);
        const Elem gap = ctx.sub(norm, ctx.from_int(4));
        for (int s : {+1, -1}) {
            const Elem trace_term = ctx.add(ctx.pow(b, q), b);
            const Elem num = s > 0 ? ctx.add(norm, trace_term) : ctx.sub(norm, trace_term);
            Elem den = ctx.mul(b, gap);
            if (s > 0) den = ctx.neg(den);
            const Elem cst = ctx.div(num, den);
            for (Elem x : solve_quadratic(ctx, one, one, cst)) {
                if (accept(x, s, -s))
                    out.roots.push_back(x);
                else
                    ++out.rejected_candidates;
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
}

// The compatibility relation between an output difference b and a derivative
// value c: (b/c)^(q-1) = -1 and (b/c)^2 = 1 - 4/c^(q+1).
inline bool bc_relation_holds(const FieldCtx& ctx, Elem b, Elem c) {
    const std::uint32_t q = detail::square_root_of_order(ctx);
    if (b.v == 0 || c.v == 0) return false;
    const Elem ratio = ctx.div(b, c);
    if (ctx.pow(ratio, q - 1) != ctx.from_int(-1)) return false;
    const Elem rhs = ctx.sub(ctx.one(), ctx.div(ctx.from_int(4), ctx.pow(c, std::uint64_t{q} + 1)));
    return ctx.mul(ratio, ratio) == rhs;
}

// The four sign choices of
//   z1 = (-1 +- (c-2) c^((q-1)/2) / sqrt(c^(q+1) - 4)) / 2
//   z2 = (-1 +- (c+2) c^((q-1)/2) / sqrt(c^(q+1) - 4)) / 2
// in the order (+,+), (+,-), (-,+), (-,-). Empty when c = 0 or when
// c^(q+1) - 4 is zero or a nonsquare. Requires q = 3 (mod 4).
inline std::vector<std::pair<Elem, Elem>> case2_root_pairs(const FieldCtx& ctx, Elem c) {
    const std::uint32_t q = detail::square_root_of_order(ctx);
    if (q % 4 != 3)
        throw Error(Errc::HypothesisViolated, "case II root pairs require q = 3 (mod 4)");
    if (c.v == 0) return {};

    const Elem radicand = ctx.sub(ctx.pow(c, std::uint64_t{q} + 1), ctx.from_int(4));
    if (radicand.v == 0 || ctx.chi(radicand) < 0) return {};

    const Elem root = *ctx.sqrt(radicand);
    const Elem scale = ctx.pow(c, (q - 1) / 2);
    const Elem half = ctx.inv(ctx.from_int(2));
    const Elem one = ctx.one();
    const Elem two = ctx.from_int(2);

    const Elem off1 = ctx.div(ctx.mul(ctx.sub(c, two), scale), root);
    const Elem off2 = ctx.div(ctx.mul(ctx.add(c, two), scale), root);
    const Elem z1p = ctx.mul(half, ctx.sub(off1, one));
    const Elem z1m = ctx.mul(half, ctx.sub(ctx.neg(off1), one));
    const Elem z2p = ctx.mul(half, ctx.sub(off2, one));
    const Elem z2m = ctx.mul(half, ctx.sub(ctx.neg(off2), one));
    return {{z1p, z2p}, {z1p, z2m}, {z1m, z2p}, {z1m, z2m}};
}

// b = -z1^(q-1) - z2^(q-1) reconstructed from a candidate pair through the
// per-root identities z1^(q-1) = (c(z1+1)-1)/(1+2z1) and
// z2^(q-1) = (-c(z2+1)-1)/(1+2z2), which collapse to
// b = (c (z1 - z2) + 2 (1 + z1 + z2)) / ((1 + 2 z1)(1 + 2 z2)).
inline Elem case2_b_from_pair(const FieldCtx& ctx, Elem c, Elem z1, Elem z2) {
    const Elem one = ctx.one();
    const Elem two = ctx.from_int(2);
    const Elem num = ctx.add(ctx.mul(c, ctx.sub(z1, z2)),
                             ctx.mul(two, ctx.add(one, ctx.add(z1, z2))));
    const Elem den = ctx.mul(ctx.add(one, ctx.mul(two, z1)), ctx.add(one, ctx.mul(two, z2)));
    return ctx.div(num, den);
}

} // namespace bctforge
