// SPDX-License-Identifier: Apache-2.0
//
// Deterministic construction of GF(p^m) for odd prime p, with table-based
// arithmetic: one discrete-log/exp table pair drives mul, inv, pow, the
// quadratic character and square roots. Contexts are immutable after
// construction and safe for concurrent reads.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bctforge {

enum class Errc {
    NotPrime,
    EvenCharacteristic,
    FieldTooLarge,
    DivisionByZero,
    InvalidSubfieldDegree,
    NotSquareField,
    InvalidExponent,
    ZeroDifference,
    ZeroB,
    DegenerateLeadingCoefficient,
    HypothesisViolated,
    NotPrimePower,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

// Field element, named by its index in [0, p^m): the base-p encoding of the
// coefficient vector, coefficient of x^0 in the least significant digit.
// Index 0 is the additive identity, index 1 the multiplicative identity.
struct Elem {
    std::uint32_t v = 0;
    friend constexpr bool operator==(Elem a, Elem b) noexcept { return a.v == b.v; }
    friend constexpr auto operator<=>(Elem a, Elem b) noexcept { return a.v <=> b.v; }
};

inline constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 22;

struct FieldSpec {
    std::uint32_t p = 0;                  // odd prime characteristic
    std::uint32_t m = 0;                  // extension degree
    std::vector<std::uint32_t> modulus;   // monic, degree m, constant coefficient first
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense coefficient vectors over GF(p), constant term first. Leading zeros
// are allowed; degree is tracked by scanning.
using Poly = std::vector<std::uint32_t>;

inline int poly_degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
    return r;
}

// In-place remainder of a modulo the monic polynomial mod.
inline void poly_reduce(Poly& a, const Poly& mod, std::uint32_t p) {
    const int dm = poly_degree(mod);
    for (int i = poly_degree(a); i >= dm && i >= 0; i = poly_degree(a)) {
        const std::uint32_t c = a[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const int shift = i - dm;
        for (int j = 0; j <= dm; ++j) {
            const std::uint64_t sub = std::uint64_t{c} * mod[static_cast<std::size_t>(j)] % p;
            std::uint32_t& slot = a[static_cast<std::size_t>(j + shift)];
            slot = static_cast<std::uint32_t>((slot + p - sub) % p);
        }
    }
}

inline bool poly_divides(const Poly& d, const Poly& a, std::uint32_t p) {
    Poly r = a;
    poly_reduce(r, d, p);
    return poly_degree(r) < 0;
}

// All monic irreducible polynomials of degree exactly deg, built degree by
// degree: a candidate is irreducible iff no irreducible of degree <= deg/2
// divides it.
inline std::vector<Poly> monic_irreducibles(std::uint32_t p, std::uint32_t deg,
                                            const std::vector<std::vector<Poly>>& lower) {
    std::vector<Poly> out;
    Poly cand(deg + 1, 0);
    cand[deg] = 1;
    while (true) {
        bool reducible = false;
        for (std::uint32_t d = 1; d <= deg / 2 && !reducible; ++d)
            for (const Poly& irr : lower[d])
                if (poly_divides(irr, cand, p)) { reducible = true; break; }
        if (!reducible) out.push_back(cand);
        // odometer over (c_{deg-1}, ..., c_0): highest-index coefficient fastest,
        // so successive candidates ascend in constant-first lexicographic order
        std::uint32_t i = deg;
        while (i > 0) {
            --i;
            if (++cand[i] < p) break;
            cand[i] = 0;
        }
        if (i == 0 && cand[0] == 0) break;
    }
    return out;
}

} // namespace detail

// Immutable GF(p^m). All arithmetic after construction is table lookups and
// base-p digit manipulation; no operation mutates the context.
class FieldCtx {
  public:
    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t characteristic() const noexcept { return spec_.p; }
    std::uint32_t degree() const noexcept { return spec_.m; }
    std::uint32_t order() const noexcept { return n_; }
    Elem generator() const noexcept { return gen_; }
    const std::vector<std::uint32_t>& exp_table() const noexcept { return exp_; }

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }

    // Embedding of the integers: n mod p as a constant polynomial.
    Elem from_int(std::int64_t n) const noexcept {
        std::int64_t r = n % static_cast<std::int64_t>(spec_.p);
        if (r < 0) r += spec_.p;
        return Elem{static_cast<std::uint32_t>(r)};
    }

    Elem add(Elem a, Elem b) const noexcept {
        std::uint32_t r = 0, x = a.v, y = b.v, scale = 1;
        for (std::uint32_t i = 0; i < spec_.m; ++i) {
            std::uint32_t d = x % spec_.p + y % spec_.p;
            if (d >= spec_.p) d -= spec_.p;
            r += d * scale;
            scale *= spec_.p;
            x /= spec_.p;
            y /= spec_.p;
        }
        return Elem{r};
    }

    Elem neg(Elem a) const noexcept {
        std::uint32_t r = 0, x = a.v, scale = 1;
        for (std::uint32_t i = 0; i < spec_.m; ++i) {
            std::uint32_t d = x % spec_.p;
            r += (d == 0 ? 0 : spec_.p - d) * scale;
            scale *= spec_.p;
            x /= spec_.p;
        }
        return Elem{r};
    }

    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const noexcept {
        if (a.v == 0 || b.v == 0) return Elem{0};
        return Elem{exp_[(std::uint64_t{log_[a.v]} + log_[b.v]) % (n_ - 1)]};
    }

    Elem inv(Elem a) const {
        if (a.v == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
        return Elem{exp_[(n_ - 1 - log_[a.v]) % (n_ - 1)]};
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    // pow(0,0) = 1 by convention; pow(0,e) = 0 for e > 0.
    Elem pow(Elem a, std::uint64_t e) const noexcept {
        if (a.v == 0) return e == 0 ? Elem{1} : Elem{0};
        return Elem{exp_[std::uint64_t{log_[a.v]} * (e % (n_ - 1)) % (n_ - 1)]};
    }

    // x^(p^k)
    Elem frobenius(Elem x, std::uint32_t k) const noexcept {
        std::uint64_t e = 1;
        const std::uint64_t mod = n_ - 1;
        for (std::uint32_t i = 0; i < k; ++i) e = e * spec_.p % mod;
        return pow(x, e);
    }

    bool is_in_subfield(Elem x, std::uint32_t k) const {
        if (k == 0 || spec_.m % k != 0)
            throw Error(Errc::InvalidSubfieldDegree, "subfield degree must divide " + std::to_string(spec_.m));
        return frobenius(x, k) == x;
    }

    // Quadratic character extended by chi(0) = 0: +1 on nonzero squares
    // (even discrete log), -1 on nonsquares.
    int chi(Elem x) const noexcept {
        if (x.v == 0) return 0;
        return (log_[x.v] & 1u) ? -1 : +1;
    }

    // Canonical square root: the one of {r, -r} with the smaller index.
    // Absent exactly when chi(x) = -1.
    std::optional<Elem> sqrt(Elem x) const noexcept {
        if (x.v == 0) return Elem{0};
        const std::uint32_t lg = log_[x.v];
        if (lg & 1u) return std::nullopt;
        Elem r{exp_[lg / 2]};
        return std::min(r, neg(r));
    }

    std::uint32_t log_of(Elem x) const {
        if (x.v == 0) throw Error(Errc::DivisionByZero, "discrete log of zero");
        return log_[x.v];
    }

    Elem exp_at(std::uint64_t k) const noexcept { return Elem{exp_[k % (n_ - 1)]}; }

    // The subfield GF(p^k) as sorted element indices: zero plus the powers of
    // generator^((p^m-1)/(p^k-1)).
    std::vector<Elem> subfield_elements(std::uint32_t k) const {
        if (k == 0 || spec_.m % k != 0)
            throw Error(Errc::InvalidSubfieldDegree, "subfield degree must divide " + std::to_string(spec_.m));
        std::uint64_t sub = 1;
        for (std::uint32_t i = 0; i < k; ++i) sub *= spec_.p;
        const std::uint64_t stride = (n_ - 1) / (sub - 1);
        std::vector<Elem> out;
        out.reserve(sub);
        out.push_back(Elem{0});
        for (std::uint64_t j = 0; j < sub - 1; ++j) out.push_back(Elem{exp_[j * stride]});
        std::sort(out.begin(), out.end());
        return out;
    }

    friend FieldCtx build_field(std::uint32_t p, std::uint32_t m, std::uint64_t size_cap);

  private:
    FieldSpec spec_;
    std::uint32_t n_ = 0;   // p^m
    Elem gen_{0};
    std::vector<std::uint32_t> exp_;   // exp_[k] = generator^k, k in [0, n-1)
    std::vector<std::uint32_t> log_;   // inverse of exp_ on nonzero indices
};

// Deterministic field constructor. The modulus is the monic irreducible
// degree-m polynomial with the lexicographically smallest coefficient vector
// (constant term first); the generator is the smallest nonzero index of full
// multiplicative order. Two builds with equal (p, m) are identical.
inline FieldCtx build_field(std::uint32_t p, std::uint32_t m,
                            std::uint64_t size_cap = kDefaultSizeCap) {
    if (p == 2) throw Error(Errc::EvenCharacteristic, "characteristic must be odd");
    if (!detail::is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m == 0) throw Error(Errc::InvalidExponent, "extension degree must be positive");

    std::uint64_t n = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        n *= p;
        if (n > size_cap)
            throw Error(Errc::FieldTooLarge,
                        "field order exceeds size cap " + std::to_string(size_cap));
    }

    FieldCtx ctx;
    ctx.spec_.p = p;
    ctx.spec_.m = m;
    ctx.n_ = static_cast<std::uint32_t>(n);

    // Irreducibles of degree <= m/2, needed for trial division.
    std::vector<std::vector<detail::Poly>> irr(m / 2 + 1);
    for (std::uint32_t d = 1; d <= m / 2; ++d) irr[d] = detail::monic_irreducibles(p, d, irr);

    detail::Poly mod(m + 1, 0);
    mod[m] = 1;
    while (true) {
        bool reducible = false;
        for (std::uint32_t d = 1; d <= m / 2 && !reducible; ++d)
            for (const detail::Poly& f : irr[d])
                if (detail::poly_divides(f, mod, p)) { reducible = true; break; }
        if (!reducible) break;
        std::uint32_t i = m;
        while (i > 0) {
            --i;
            if (++mod[i] < p) break;
            mod[i] = 0;
        }
    }
    ctx.spec_.modulus = mod;

    const auto poly_of_index = [&](std::uint32_t idx) {
        detail::Poly f(m, 0);
        for (std::uint32_t i = 0; i < m; ++i) { f[i] = idx % p; idx /= p; }
        return f;
    };
    const auto index_of_poly = [&](const detail::Poly& f) {
        std::uint32_t idx = 0, scale = 1;
        for (std::uint32_t i = 0; i < m; ++i) { idx += f[i] * scale; scale *= p; }
        return idx;
    };
    const auto mulmod = [&](const detail::Poly& a, const detail::Poly& b) {
        detail::Poly r = detail::poly_mul(a, b, p);
        detail::poly_reduce(r, mod, p);
        r.resize(m, 0);
        return r;
    };
    const auto powmod = [&](detail::Poly base, std::uint64_t e) {
        detail::Poly r(m, 0);
        r[0] = 1;
        while (e) {
            if (e & 1) r = mulmod(r, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return r;
    };

    const std::uint64_t group = n - 1;
    const auto factors = detail::distinct_prime_factors(group);
    std::uint32_t gen_idx = 0;
    for (std::uint32_t cand = 2; cand < n; ++cand) {
        const detail::Poly f = poly_of_index(cand);
        bool full_order = true;
        for (std::uint64_t r : factors) {
            if (index_of_poly(powmod(f, group / r)) == 1) { full_order = false; break; }
        }
        if (full_order) { gen_idx = cand; break; }
    }
    ctx.gen_ = Elem{gen_idx};

    ctx.exp_.assign(group, 0);
    ctx.log_.assign(n, 0);
    detail::Poly cur(m, 0);
    cur[0] = 1;
    const detail::Poly genp = poly_of_index(gen_idx);
    for (std::uint64_t k = 0; k < group; ++k) {
        const std::uint32_t idx = index_of_poly(cur);
        ctx.exp_[k] = idx;
        ctx.log_[idx] = static_cast<std::uint32_t>(k);
        cur = mulmod(cur, genp);
    }
    return ctx;
}

// Factor q as p^k for prime p; rejects anything that is not a prime power.
inline std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    std::uint32_t k = 0;
    std::uint64_t r = q;
    while (r % p == 0) { r /= p; ++k; }
    if (r != 1) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint32_t>(p), k};
}

} // namespace bctforge
