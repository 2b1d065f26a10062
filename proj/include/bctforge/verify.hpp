// SPDX-License-Identifier: Apache-2.0
//
// Claim-by-claim verification of the differential and boomerang statements
// for F1 and F2 at a concrete q. Every claim is checked exhaustively over
// GF(q^2) and reported with a witness; the statement-level hypotheses
// (q != 2 mod 3, and q = 3 mod 4 where it applies) gate the run. Theorem
// checks split "is 2" into a bound and an attainment claim so that a q
// where the bound holds vacuously surfaces as its own status.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bctforge/analytic.hpp"
#include "bctforge/boomerang.hpp"
#include "bctforge/field.hpp"
#include "bctforge/power_map.hpp"

namespace bctforge {

enum class Subject { Lemma1, Lemma2, Theorem1, Theorem2 };
enum class Overall { Pass, Fail, HypothesesNotMet, BoundHoldsNotAttained };

struct Hypothesis {
    std::string condition;
    bool holds = false;
};

struct Claim {
    std::string id;
    bool pass = false;
    std::string witness;
};

struct VerificationReport {
    std::uint64_t q = 0;
    Subject subject = Subject::Lemma1;
    std::vector<Hypothesis> hypotheses;
    std::vector<Claim> claims;
    Overall overall = Overall::Fail;
    std::string error;  // set when the field itself could not be built
};

inline const char* subject_name(Subject s) {
    switch (s) {
        case Subject::Lemma1: return "lemma1";
        case Subject::Lemma2: return "lemma2";
        case Subject::Theorem1: return "theorem1";
        case Subject::Theorem2: return "theorem2";
    }
    return "?";
}

inline std::optional<Subject> parse_subject(const std::string& name) {
    if (name == "lemma1") return Subject::Lemma1;
    if (name == "lemma2") return Subject::Lemma2;
    if (name == "theorem1") return Subject::Theorem1;
    if (name == "theorem2") return Subject::Theorem2;
    return std::nullopt;
}

inline const char* overall_name(Overall o) {
    switch (o) {
        case Overall::Pass: return "pass";
        case Overall::Fail: return "fail";
        case Overall::HypothesesNotMet: return "hypotheses_not_met";
        case Overall::BoundHoldsNotAttained: return "bound_holds_not_attained";
    }
    return "?";
}

namespace detail {

inline FieldCtx build_quadratic_extension(std::uint64_t q, std::uint64_t size_cap) {
    const auto [p, k] = factor_prime_power(q);
    return build_field(p, 2 * k, size_cap);
}

inline std::string elem_str(Elem e) { return std::to_string(e.v); }

// The three statement claims shared by both derivative lemmas, plus the
// closed-form equivalence check.
inline void append_delta_claims(VerificationReport& rep, const FieldCtx& ctx, const PowerMap& f,
                                const std::string& prefix, bool with_symmetry,
                                AnalyticPreimage (*analytic)(const FieldCtx&, Elem)) {
    const std::uint32_t n = ctx.order();
    const Elem one = ctx.one();
    const Elem minus_one = ctx.from_int(-1);

    std::vector<std::vector<Elem>> pre(n);
    for (std::uint32_t b = 0; b < n; ++b) pre[b] = delta_preimage(f, Elem{b});

    {
        Claim c{prefix + ".delta0", pre[0] == base_field_minus_endpoints(ctx),
                "delta(0)=" + std::to_string(pre[0].size())};
        rep.claims.push_back(c);
    }
    {
        const bool ok = pre[one.v] == std::vector<Elem>{ctx.zero()} &&
                        pre[minus_one.v] == std::vector<Elem>{minus_one};
        rep.claims.push_back(Claim{prefix + ".delta_pm1", ok,
                                   "delta(1)=" + std::to_string(pre[one.v].size()) +
                                       " delta(-1)=" + std::to_string(pre[minus_one.v].size())});
    }
    {
        Claim c{prefix + ".bound", true, ""};
        std::size_t worst = 0;
        for (std::uint32_t b = 0; b < n; ++b) {
            if (b == 0 || Elem{b} == one || Elem{b} == minus_one) continue;
            worst = std::max(worst, pre[b].size());
            if (pre[b].size() > 2 && c.pass) {
                c.pass = false;
                c.witness = "b=" + std::to_string(b) + " has delta=" + std::to_string(pre[b].size());
            }
        }
        if (c.pass) c.witness = "max delta over b outside {0,1,-1} is " + std::to_string(worst);
        rep.claims.push_back(c);
    }
    if (with_symmetry) {
        Claim c{prefix + ".symmetry", true, "delta(b)=delta(-b) for all " + std::to_string(n) + " b"};
        for (std::uint32_t b = 0; b < n && c.pass; ++b) {
            const std::uint32_t nb = ctx.neg(Elem{b}).v;
            if (pre[b].size() != pre[nb].size()) {
                c.pass = false;
                c.witness = "b=" + std::to_string(b) + ": delta(b)=" + std::to_string(pre[b].size()) +
                            " delta(-b)=" + std::to_string(pre[nb].size());
            }
        }
        rep.claims.push_back(c);
    }
    {
        Claim c{prefix + ".analytic_equiv", true,
                "closed form matches the exhaustive scan for all " + std::to_string(n) + " b"};
        std::uint64_t rejected = 0;
        for (std::uint32_t b = 0; b < n && c.pass; ++b) {
            const AnalyticPreimage ap = analytic(ctx, Elem{b});
            rejected += ap.rejected_candidates;
            if (ap.roots != pre[b]) {
                c.pass = false;
                c.witness = "mismatch at b=" + std::to_string(b) + ": closed form gives " +
                            std::to_string(ap.roots.size()) + " roots, scan gives " +
                            std::to_string(pre[b].size());
            }
        }
        if (c.pass && rejected > 0)
            c.witness += " (" + std::to_string(rejected) + " extraneous candidates filtered)";
        rep.claims.push_back(c);
    }
}

// Proof-level facts behind the character case split of D2.
inline void append_lemma2_proof_claims(VerificationReport& rep, const FieldCtx& ctx,
                                       const PowerMap& f2, std::uint32_t q) {
    const Elem four = ctx.from_int(4);
    const Elem one = ctx.one();
    const Elem minus_one = ctx.from_int(-1);
    const std::uint32_t n = ctx.order();

    std::uint64_t nonsquare_b = 0;
    {
        Claim c{"L2.b_norm_ne_4", true, ""};
        for (std::uint32_t b = 1; b < n; ++b) {
            if (ctx.chi(Elem{b}) != -1) continue;
            ++nonsquare_b;
            if (ctx.pow(Elem{b}, std::uint64_t{q} + 1) == four && c.pass) {
                c.pass = false;
                c.witness = "b=" + std::to_string(b) + " has norm 4";
            }
        }
        if (c.pass) c.witness = "norm != 4 for all " + std::to_string(nonsquare_b) + " nonsquare b";
        rep.claims.push_back(c);
    }
    {
        // discriminant of the case-II quadratic: (b + 2s)^2 b^(q-1) / (b^(q+1) - 4)
        Claim c{"L2.disc_square", true, ""};
        for (std::uint32_t b = 1; b < n && c.pass; ++b) {
            if (ctx.chi(Elem{b}) != -1) continue;
            const Elem gap = ctx.sub(ctx.pow(Elem{b}, std::uint64_t{q} + 1), four);
            for (int s : {+1, -1}) {
                const Elem shifted = ctx.add(Elem{b}, ctx.from_int(2 * s));
                const Elem disc = ctx.div(ctx.mul(ctx.mul(shifted, shifted), ctx.pow(Elem{b}, q - 1)), gap);
                if (ctx.chi(disc) < 0) {
                    c.pass = false;
                    c.witness = "b=" + std::to_string(b) + " s=" + std::to_string(s) +
                                " gives a nonsquare discriminant";
                    break;
                }
            }
        }
        if (c.pass)
            c.witness = "discriminant is a square for both signs at all " +
                        std::to_string(nonsquare_b) + " nonsquare b";
        rep.claims.push_back(c);
    }
    {
        // roots with chi(x+1) = chi(x) require chi(b) = +1, the flipped
        // pattern requires chi(b) = -1
        Claim c{"L2.case_gating", true, ""};
        std::uint64_t roots_seen = 0;
        for (std::uint32_t b = 1; b < n && c.pass; ++b) {
            const Elem be{b};
            if (be == one || be == minus_one) continue;
            for (Elem x : delta_preimage(f2, be)) {
                if (x.v == 0 || x == minus_one) continue;
                ++roots_seen;
                const bool same = ctx.chi(ctx.add(x, one)) == ctx.chi(x);
                const int required = same ? +1 : -1;
                if (ctx.chi(be) != required) {
                    c.pass = false;
                    c.witness = "b=" + std::to_string(b) + " x=" + std::to_string(x.v) +
                                " violates the character gate";
                    break;
                }
            }
        }
        if (c.pass) c.witness = "all " + std::to_string(roots_seen) + " roots match the gate";
        rep.claims.push_back(c);
    }
    {
        // when the case-II quadratic has two roots, exactly one is a square
        Claim c{"L2.case2_split", true, ""};
        std::uint64_t pairs_seen = 0;
        for (std::uint32_t b = 1; b < n && c.pass; ++b) {
            if (ctx.chi(Elem{b}) != -1) continue;
            const Elem norm = ctx.pow(Elem{b}, std::uint64_t{q} + 1);
            const Elem gap = ctx.sub(norm, four);
            for (int s : {+1, -1}) {
                const Elem trace_term = ctx.add(ctx.pow(Elem{b}, q), Elem{b});
                const Elem num = s > 0 ? ctx.add(norm, trace_term) : ctx.sub(norm, trace_term);
                Elem den = ctx.mul(Elem{b}, gap);
                if (s > 0) den = ctx.neg(den);
                const Elem cst = ctx.div(num, den);
                // cst = 0 puts the roots at {0, -1}, outside the case domain
                if (cst.v == 0) continue;
                const auto roots = solve_quadratic(ctx, one, one, cst);
                if (roots.size() != 2) continue;
                ++pairs_seen;
                if (ctx.chi(roots[0]) * ctx.chi(roots[1]) != -1) {
                    c.pass = false;
                    c.witness = "b=" + std::to_string(b) + " s=" + std::to_string(s) +
                                ": both roots have the same character";
                    break;
                }
            }
        }
        if (c.pass) c.witness = std::to_string(pairs_seen) + " two-root quadratics split correctly";
        rep.claims.push_back(c);
    }
}

struct TheoremOptions {
    bool pairing_claim = false;    // (x,y) -> (-y-1, -x-1) carries solutions across buckets
    bool b2_identity = false;      // b^2 = c^2 - 4/c^(q-1) at every attaining b
    bool case2_pairs = false;      // explicit radical pairs for case-II classes
};

inline void append_theorem_claims(VerificationReport& rep, const FieldCtx& ctx, const PowerMap& f,
                                  const std::string& prefix, const TheoremOptions& opt) {
    const std::uint32_t q = f.q;
    const std::uint32_t n = ctx.order();
    const Elem one = ctx.one();
    const BctReport bct = bct_rows_fast(f);

    {
        rep.claims.push_back(Claim{prefix + ".bound", bct.beta <= 2,
                                   "beta=" + std::to_string(bct.beta)});
    }
    std::vector<std::uint32_t> attaining;
    for (const auto& [b, cnt] : bct.per_b)
        if (cnt == 2) attaining.push_back(b);
    {
        Claim c{prefix + ".attain", !attaining.empty(),
                attaining.empty() ? "beta=" + std::to_string(bct.beta) + ", no b attains 2"
                                  : "b=" + std::to_string(attaining.front()) + " attains 2"};
        rep.claims.push_back(c);
    }
    if (q <= 9) {
        Claim c{prefix + ".oracle", true, ""};
        for (std::uint32_t b = 1; b < n && c.pass; ++b) {
            const std::uint32_t naive = bct_row_naive(f, Elem{b});
            const auto it = bct.per_b.find(b);
            const std::uint32_t fast = it == bct.per_b.end() ? 0 : it->second;
            if (naive != fast) {
                c.pass = false;
                c.witness = "b=" + std::to_string(b) + ": fast=" + std::to_string(fast) +
                            " naive=" + std::to_string(naive);
            }
        }
        if (c.pass) c.witness = "fast rows equal naive rows for all " + std::to_string(n - 1) + " b";
        rep.claims.push_back(c);
    }

    Claim bc{prefix + ".bc_relation", true, ""};
    Claim pairing{prefix + ".pairing", true, ""};
    Claim b2{prefix + ".b2_identity", true, ""};
    for (std::uint32_t b : attaining) {
        const auto sols = solution_pairs(f, Elem{b});
        if (sols.size() != 2) {
            bc.pass = false;
            bc.witness = "b=" + std::to_string(b) + " has " + std::to_string(sols.size()) + " solutions";
            break;
        }
        const auto [x1, y1] = sols[0];
        const auto [x2, y2] = sols[1];
        const Elem c1 = derivative_at(f, x1);
        const Elem c2 = derivative_at(f, x2);
        if (bc.pass &&
            (derivative_at(f, y1) != c1 || c2 != ctx.neg(c1) || !bc_relation_holds(ctx, Elem{b}, c1) ||
             !bc_relation_holds(ctx, Elem{b}, c2))) {
            bc.pass = false;
            bc.witness = "b=" + std::to_string(b) + " c=" + elem_str(c1) +
                         ": bucket structure or relation fails";
        }
        if (opt.pairing_claim && pairing.pass) {
            // z -> -z-1 carries the solution across to the opposite bucket
            // within the same row; the component-swapped image lands in the
            // row of -b instead
            const Elem mx = ctx.neg(ctx.add(x1, one));
            const Elem my = ctx.neg(ctx.add(y1, one));
            if (x2 != mx || y2 != my) {
                pairing.pass = false;
                pairing.witness = "b=" + std::to_string(b) + ": second solution is not (-x-1, -y-1)";
            } else {
                const auto mirror = solution_pairs(f, ctx.neg(Elem{b}));
                const bool swapped_in_mirror =
                    std::find(mirror.begin(), mirror.end(), std::pair<Elem, Elem>{my, mx}) != mirror.end();
                if (!swapped_in_mirror) {
                    pairing.pass = false;
                    pairing.witness = "b=" + std::to_string(b) + ": (-y-1, -x-1) missing from the -b row";
                }
            }
        }
        if (opt.b2_identity && b2.pass) {
            const Elem lhs = ctx.mul(Elem{b}, Elem{b});
            const Elem rhs = ctx.sub(ctx.mul(c1, c1), ctx.div(ctx.from_int(4), ctx.pow(c1, q - 1)));
            if (lhs != rhs) {
                b2.pass = false;
                b2.witness = "b=" + std::to_string(b) + " c=" + elem_str(c1) +
                             ": b^2 != c^2 - 4/c^(q-1)";
            }
        }
    }
    const std::string tail = attaining.empty() ? "no b attains 2"
                                               : std::to_string(attaining.size()) + " attaining b";
    if (bc.pass) bc.witness = "buckets are {c,-c} with the relation satisfied; " + tail;
    rep.claims.push_back(bc);
    if (opt.pairing_claim) {
        if (pairing.pass)
            pairing.witness = "second solution is (-x-1, -y-1), swapped image sits in the -b row; " + tail;
        rep.claims.push_back(pairing);
    }
    if (opt.b2_identity) {
        if (b2.pass) b2.witness = "identity holds; " + tail;
        rep.claims.push_back(b2);
    }

    if (opt.case2_pairs) {
        Claim c{prefix + ".case2_pairs", true, ""};
        std::uint64_t classes = 0;
        for (const auto& [cv, xs] : derivative_buckets(f)) {
            if (!c.pass) break;
            if (xs.size() != 2 || cv == 0 || ctx.chi(Elem{cv}) != -1) continue;
            ++classes;
            const Elem ce{cv};
            const auto pairs = case2_root_pairs(ctx, ce);
            if (pairs.size() != 4) {
                c.pass = false;
                c.witness = "c=" + std::to_string(cv) + ": expected 4 radical pairs, got " +
                            std::to_string(pairs.size());
                break;
            }
            // the actual class roots, ordered (chi = -1 first) as in the radicals
            Elem za{xs[0]}, zb{xs[1]};
            if (ctx.chi(za) != -1) std::swap(za, zb);
            bool found = false;
            for (const auto& [p1, p2] : pairs) found = found || (p1 == za && p2 == zb);
            if (!found) {
                c.pass = false;
                c.witness = "c=" + std::to_string(cv) + ": class roots missing from the radical pairs";
                break;
            }
            std::uint32_t nonzero = 0;
            for (const auto& [z1, z2] : pairs) {
                const Elem bb = case2_b_from_pair(ctx, ce, z1, z2);
                if (bb.v == 0) continue;
                ++nonzero;
                const Elem rhs = ctx.sub(ctx.mul(ce, ce), ctx.div(ctx.from_int(4), ctx.pow(ce, q - 1)));
                if (ctx.mul(bb, bb) != rhs) {
                    c.pass = false;
                    c.witness = "c=" + std::to_string(cv) + ": reconstructed b fails the identity";
                    break;
                }
            }
            if (c.pass && nonzero != 2) {
                c.pass = false;
                c.witness = "c=" + std::to_string(cv) + ": " + std::to_string(nonzero) +
                            " pairs give nonzero b, expected 2";
            }
        }
        if (c.pass) c.witness = std::to_string(classes) + " case-II classes verified";
        rep.claims.push_back(c);
    }
}

inline Overall combine(const VerificationReport& rep, const std::string& attain_id) {
    for (const auto& h : rep.hypotheses)
        if (!h.holds) return Overall::HypothesesNotMet;
    bool all = true, only_attain_fails = true;
    for (const auto& c : rep.claims) {
        if (c.pass) continue;
        all = false;
        if (c.id != attain_id) only_attain_fails = false;
    }
    if (all) return Overall::Pass;
    if (!attain_id.empty() && only_attain_fails) return Overall::BoundHoldsNotAttained;
    return Overall::Fail;
}

} // namespace detail

inline VerificationReport verify_lemma1(std::uint64_t q, std::uint64_t size_cap = kDefaultSizeCap) {
    VerificationReport rep;
    rep.q = q;
    rep.subject = Subject::Lemma1;
    rep.hypotheses.push_back({"q % 3 != 2", q % 3 != 2});
    if (!rep.hypotheses[0].holds) {
        rep.overall = Overall::HypothesesNotMet;
        return rep;
    }
    const FieldCtx ctx = detail::build_quadratic_extension(q, size_cap);
    detail::append_delta_claims(rep, ctx, make_f1(ctx), "L1", true, &delta1_analytic);
    rep.overall = detail::combine(rep, "");
    return rep;
}

inline VerificationReport verify_lemma2(std::uint64_t q, std::uint64_t size_cap = kDefaultSizeCap) {
    VerificationReport rep;
    rep.q = q;
    rep.subject = Subject::Lemma2;
    rep.hypotheses.push_back({"q % 3 != 2", q % 3 != 2});
    rep.hypotheses.push_back({"q % 4 == 3", q % 4 == 3});
    if (!rep.hypotheses[0].holds || !rep.hypotheses[1].holds) {
        rep.overall = Overall::HypothesesNotMet;
        return rep;
    }
    const FieldCtx ctx = detail::build_quadratic_extension(q, size_cap);
    const PowerMap f2 = make_f2(ctx);
    detail::append_delta_claims(rep, ctx, f2, "L2", false, &delta2_analytic);
    detail::append_lemma2_proof_claims(rep, ctx, f2, static_cast<std::uint32_t>(q));
    rep.overall = detail::combine(rep, "");
    return rep;
}

inline VerificationReport verify_theorem1(std::uint64_t q, std::uint64_t size_cap = kDefaultSizeCap) {
    VerificationReport rep;
    rep.q = q;
    rep.subject = Subject::Theorem1;
    rep.hypotheses.push_back({"q % 3 != 2", q % 3 != 2});
    if (!rep.hypotheses[0].holds) {
        rep.overall = Overall::HypothesesNotMet;
        return rep;
    }
    const FieldCtx ctx = detail::build_quadratic_extension(q, size_cap);
    detail::TheoremOptions opt;
    opt.pairing_claim = true;
    detail::append_theorem_claims(rep, ctx, make_f1(ctx), "T1", opt);
    rep.overall = detail::combine(rep, "T1.attain");
    return rep;
}

inline VerificationReport verify_theorem2(std::uint64_t q, std::uint64_t size_cap = kDefaultSizeCap) {
    VerificationReport rep;
    rep.q = q;
    rep.subject = Subject::Theorem2;
    rep.hypotheses.push_back({"q % 3 != 2", q % 3 != 2});
    rep.hypotheses.push_back({"q % 4 == 3", q % 4 == 3});
    if (!rep.hypotheses[0].holds || !rep.hypotheses[1].holds) {
        rep.overall = Overall::HypothesesNotMet;
        return rep;
    }
    const FieldCtx ctx = detail::build_quadratic_extension(q, size_cap);
    detail::TheoremOptions opt;
    opt.b2_identity = true;
    opt.case2_pairs = true;
    detail::append_theorem_claims(rep, ctx, make_f2(ctx), "T2", opt);
    rep.overall = detail::combine(rep, "T2.attain");
    return rep;
}

inline VerificationReport verify_subject(Subject s, std::uint64_t q,
                                         std::uint64_t size_cap = kDefaultSizeCap) {
    switch (s) {
        case Subject::Lemma1: return verify_lemma1(q, size_cap);
        case Subject::Lemma2: return verify_lemma2(q, size_cap);
        case Subject::Theorem1: return verify_theorem1(q, size_cap);
        case Subject::Theorem2: return verify_theorem2(q, size_cap);
    }
    throw Error(Errc::NotPrimePower, "unreachable");
}

// One report per (q, subject), q-major, in input order. A q whose field
// cannot be built yields a failed report with the error embedded; the scan
// itself never aborts.
inline std::vector<VerificationReport> scan(const std::vector<std::uint64_t>& q_values,
                                            const std::vector<Subject>& subjects,
                                            std::uint64_t size_cap = kDefaultSizeCap) {
    std::vector<VerificationReport> out;
    for (std::uint64_t q : q_values)
        for (Subject s : subjects) {
            try {
                out.push_back(verify_subject(s, q, size_cap));
            } catch (const Error& e) {
                VerificationReport rep;
                rep.q = q;
                rep.subject = s;
                rep.overall = Overall::Fail;
                rep.error = e.what();
                out.push_back(rep);
            }
        }
    return out;
}

} // namespace bctforge
