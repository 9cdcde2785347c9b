#pragma once

// Prime-field scalars and binomial-coefficient machinery modulo a prime:
// Lucas evaluation, the inversion symmetry of binomials, and the
// constant-proportionality trichotomy for rows of Pascal's triangle.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace diamondlab::modp {

using i64 = std::int64_t;

inline bool is_prime(i64 p)
{
    if (p < 2)
        return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline void require_prime(i64 p)
{
    if (!is_prime(p))
        throw std::domain_error("modulus " + std::to_string(p) + " is not prime");
}

/// Residue in [0, p). Keeps arithmetic reduced; p is assumed prime by callers.
inline i64 reduce(i64 v, i64 p)
{
    i64 r = v % p;
    return r < 0 ? r + p : r;
}

inline i64 add(i64 a, i64 b, i64 p) { return reduce(a + b, p); }
inline i64 sub(i64 a, i64 b, i64 p) { return reduce(a - b, p); }
inline i64 mul(i64 a, i64 b, i64 p) { return reduce(a * b, p); }
inline i64 neg(i64 a, i64 p) { return reduce(-a, p); }

inline i64 pow_mod(i64 x, i64 e, i64 p)
{
    i64 r = 1;
    x = reduce(x, p);
    while (e > 0) {
        if (e & 1)
            r = mul(r, x, p);
        x = mul(x, x, p);
        e >>= 1;
    }
    return r;
}

/// Multiplicative inverse via Fermat; a must be nonzero mod p.
inline i64 inv(i64 a, i64 p)
{
    a = reduce(a, p);
    if (a == 0)
        throw std::domain_error("inverse of zero in F_p");
    return pow_mod(a, p - 2, p);
}

/// A prime power q = p^n, with p > 3 and q > 5 in the Nottingham regime.
struct PrimePower {
    i64 p;
    int n;
    i64 q;

    PrimePower(i64 p_, int n_) : p(p_), n(n_)
    {
        require_prime(p);
        if (n <= 0)
            throw std::domain_error("prime-power exponent must be positive");
        q = 1;
        for (int i = 0; i < n; ++i)
            q *= p;
    }
};

namespace detail {

// C(a, b) mod p for 0 <= a, b < p, by factorials.
inline i64 small_binom(i64 a, i64 b, i64 p)
{
    if (b < 0 || b > a)
        return 0;
    i64 num = 1, den = 1;
    for (i64 i = 1; i <= b; ++i) {
        num = mul(num, a + 1 - i, p);
        den = mul(den, i, p);
    }
    return mul(num, inv(den, p), p);
}

} // namespace detail

/// Binomial coefficient C(top, bottom) mod p, digit-wise in base p (Lucas).
/// bottom may be any integer; out-of-range values give 0.
inline i64 fp_binom(i64 top, i64 bottom, i64 p)
{
    require_prime(p);
    if (top < 0)
        throw std::domain_error("fp_binom: negative top index");
    if (bottom < 0 || bottom > top)
        return 0;
    i64 r = 1;
    while (top > 0 || bottom > 0) {
        i64 td = top % p, bd = bottom % p;
        if (bd > td)
            return 0;
        r = mul(r, detail::small_binom(td, bd, p), p);
        top /= p;
        bottom /= p;
    }
    return r;
}

struct SymmetryCounterexample {
    i64 a, b, lhs, rhs;
};

struct SymmetryReport {
    bool pass = true;
    std::vector<SymmetryCounterexample> counterexamples;
};

/// Exhaustive check of (-1)^a C(a,b) = (-1)^b C(q-1-b, q-1-a) mod p
/// over all 0 <= b <= a < q.
inline SymmetryReport check_invert_symmetry(const PrimePower& qp)
{
    SymmetryReport rep;
    const i64 p = qp.p, q = qp.q;
    for (i64 a = 0; a < q; ++a)
        for (i64 b = 0; b <= a; ++b) {
            i64 lhs = mul(a % 2 ? p - 1 : 1, fp_binom(a, b, p), p);
            i64 rhs = mul(b % 2 ? p - 1 : 1, fp_binom(q - 1 - b, q - 1 - a, p), p);
            if (lhs != rhs) {
                rep.pass = false;
                rep.counterexamples.push_back({a, b, lhs, rhs});
            }
        }
    return rep;
}

enum class LemmaCase { none, power_of_p, a1_n_plus_1_power, a_minus1_n3 };

struct LemmaClassification {
    bool hypothesis_holds = false;
    LemmaCase which = LemmaCase::none;
};

inline bool is_power_of(i64 m, i64 p)
{
    if (m < 1)
        return false;
    while (m % p == 0)
        m /= p;
    return m == 1;
}

/// Hypothesis: C(n,j-1) + a*C(n,j) = 0 mod p for all 1 < j < n.
/// When it holds, the trichotomy names the branch: n a power of p,
/// or a = 1 and n+1 a power of p, or a = -1 and n = 3.
inline LemmaClassification binomial_lemma_classify(i64 n, i64 a, const PrimePower& qp)
{
    if (n <= 2)
        throw std::domain_error("binomial_lemma_classify requires n > 2");
    const i64 p = qp.p;
    a = reduce(a, p);
    LemmaClassification c;
    for (i64 j = 2; j < n; ++j)
        if (add(fp_binom(n, j - 1, p), mul(a, fp_binom(n, j, p), p), p) != 0)
            return c;
    c.hypothesis_holds = true;
    if (is_power_of(n, p))
        c.which = LemmaCase::power_of_p;
    else if (a == 1 && is_power_of(n + 1, p))
        c.which = LemmaCase::a1_n_plus_1_power;
    else if (a == p - 1 && n == 3)
        c.which = LemmaCase::a_minus1_n3;
    return c;
}

/// True iff (x+a)(x+1)^n equals x^{n+1} + (a+n)x^n + (an+1)x + a in F_p[x].
/// Agrees with binomial_lemma_classify on hypothesis_holds everywhere.
inline bool poly_condition_equivalent(i64 n, i64 a, i64 p)
{
    if (n <= 2)
        throw std::domain_error("poly_condition_equivalent requires n > 2");
    require_prime(p);
    a = reduce(a, p);
    // coefficient of x^j in (x+a)(x+1)^n is C(n,j-1) + a*C(n,j)
    for (i64 j = 0; j <= n + 1; ++j) {
        i64 lhs = add(fp_binom(n, j - 1, p), mul(a, fp_binom(n, j, p), p), p);
        i64 rhs;
        if (j == 0)
            rhs = a;
        else if (j == 1)
            rhs = reduce(a * reduce(n, p) + 1, p);
        else if (j == n)
            rhs = add(a, reduce(n, p), p);
        else if (j == n + 1)
            rhs = 1;
        else
            rhs = 0;
        if (lhs != rhs)
            return false;
    }
    return true;
}

} // namespace diamondlab::modp
