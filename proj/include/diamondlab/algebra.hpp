#pragma once

// Truncated N-graded Lie algebra over F_p: per-degree dimensions plus a
// sparse table of structure constants, bracket evaluation by bilinearity,
// left-normed word calculus, and whole-algebra consistency audits.

#include "diamondlab/modp.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace diamondlab::liecore {

using modp::i64;

/// Coordinate vector over F_p; all-zero means the zero element.
using FpVec = std::vector<i64>;

inline bool is_zero(const FpVec& v)
{
    return std::all_of(v.begin(), v.end(), [](i64 c) { return c == 0; });
}

/// A degree together with coordinates in that degree's basis.
struct HomogeneousElement {
    int degree;
    FpVec coords;

    bool zero() const { return is_zero(coords); }
};

/// [seed l1 l2 ...] left-normed; exponent k on a letter means k repetitions.
struct WordLetter {
    std::string generator;
    int exponent = 1;
};

struct LeftNormedWord {
    // Exactly one of seed_name / seed_element is used.
    std::string seed_name;
    std::optional<HomogeneousElement> seed_element;
    std::vector<WordLetter> letters;

    int total_degree() const
    {
        int d = seed_element ? seed_element->degree : 1;
        for (const auto& l : letters)
            d += l.exponent;
        return d;
    }
};

struct BracketKey {
    int i, j, a, b;
    bool operator<(const BracketKey& o) const
    {
        return std::tie(i, j, a, b) < std::tie(o.i, o.j, o.a, o.b);
    }
};

class GradedLieAlgebra {
public:
    GradedLieAlgebra(i64 p, int max_degree, std::vector<int> dims)
        : p_(p), max_degree_(max_degree), dims_(std::move(dims))
    {
        modp::require_prime(p_);
        if (max_degree_ < 2)
            throw std::domain_error("max_degree must be at least 2");
        if ((int)dims_.size() != max_degree_)
            throw std::domain_error("dims length must equal max_degree");
    }

    i64 p() const { return p_; }
    int max_degree() const { return max_degree_; }
    int dim(int m) const { return (m >= 1 && m <= max_degree_) ? dims_[m - 1] : 0; }
    const std::vector<int>& dims() const { return dims_; }

    std::optional<i64> q() const { return q_; }
    void set_q(i64 q) { q_ = q; }

    const std::map<std::string, FpVec>& generators() const { return generators_; }
    void set_generator(const std::string& name, FpVec coords)
    {
        if ((int)coords.size() != dim(1))
            throw std::domain_error("generator coordinate length mismatch");
        generators_[name] = std::move(coords);
    }

    HomogeneousElement generator(const std::string& name) const
    {
        auto it = generators_.find(name);
        if (it == generators_.end())
            throw std::domain_error("unknown generator '" + name + "'");
        return {1, it->second};
    }

    /// Structure constants for basis pair (a in L_i, b in L_j), stored with
    /// i <= j canonical ordering (i == j requires a < b); the mirror entry is
    /// implied by antisymmetry.
    void set_bracket(int i, int j, int a, int b, FpVec out)
    {
        if (i > j || (i == j && a >= b))
            throw std::domain_error("bracket entries are stored for i <= j only");
        check_indices(i, j, a, b);
        if ((int)out.size() != dim(i + j))
            throw std::domain_error("bracket output length must equal dim(i+j)");
        for (auto& c : out)
            c = modp::reduce(c, p_);
        if (is_zero(out))
            brackets_.erase(BracketKey{i, j, a, b});
        else
            brackets_[BracketKey{i, j, a, b}] = std::move(out);
    }

    /// Basis bracket [e_a@i, e_b@j], resolving antisymmetry for i > j.
    FpVec basis_bracket(int i, int j, int a, int b) const
    {
        check_indices(i, j, a, b);
        bool flip = (i > j) || (i == j && a > b);
        if (i == j && a == b)
            return FpVec(dim(i + j), 0);
        const BracketKey key = flip ? BracketKey{j, i, b, a} : BracketKey{i, j, a, b};
        auto it = brackets_.find(key);
        if (it == brackets_.end())
            return FpVec(dim(i + j), 0);
        FpVec v = it->second;
        if (flip)
            for (auto& c : v)
                c = modp::neg(c, p_);
        return v;
    }

    const std::map<BracketKey, FpVec>& stored_brackets() const { return brackets_; }

    HomogeneousElement zero_element(int degree) const
    {
        return {degree, FpVec(dim(degree), 0)};
    }

    HomogeneousElement basis_element(int degree, int index) const
    {
        FpVec v(dim(degree), 0);
        v.at(index) = 1;
        return {degree, v};
    }

private:
    void check_indices(int i, int j, int a, int b) const
    {
        if (i < 1 || j < 1 || i + j > max_degree_)
            throw std::domain_error("bracket degree out of range");
        if (a < 0 || a >= dim(i) || b < 0 || b >= dim(j))
            throw std::domain_error("bracket basis index out of range");
    }

    i64 p_;
    int max_degree_;
    std::vector<int> dims_;
    std::map<BracketKey, FpVec> brackets_;
    std::map<std::string, FpVec> generators_;
    std::optional<i64> q_;
};

inline void axpy(FpVec& acc, i64 c, const FpVec& v, i64 p)
{
    for (size_t k = 0; k < acc.size(); ++k)
        acc[k] = modp::add(acc[k], modp::mul(c, v[k], p), p);
}

/// Bilinear extension of the structure constants. Degrees must stay within
/// the truncation window; overflow is an error, never a silent zero.
inline HomogeneousElement bracket(const GradedLieAlgebra& alg,
                                  const HomogeneousElement& u,
                                  const HomogeneousElement& v)
{
    const int m = u.degree + v.degree;
    if (m > alg.max_degree())
        throw std::domain_error("bracket degree " + std::to_string(m) +
                                " exceeds truncation " + std::to_string(alg.max_degree()));
    HomogeneousElement out = alg.zero_element(m);
    for (int a = 0; a < alg.dim(u.degree); ++a) {
        if (u.coords[a] == 0)
            continue;
        for (int b = 0; b < alg.dim(v.degree); ++b) {
            if (v.coords[b] == 0)
                continue;
            i64 c = modp::mul(u.coords[a], v.coords[b], alg.p());
            axpy(out.coords, c, alg.basis_bracket(u.degree, v.degree, a, b), alg.p());
        }
    }
    return out;
}

inline HomogeneousElement scale(const GradedLieAlgebra& alg, i64 c,
                                HomogeneousElement e)
{
    c = modp::reduce(c, alg.p());
    for (auto& x : e.coords)
        x = modp::mul(x, c, alg.p());
    return e;
}

inline HomogeneousElement add(const GradedLieAlgebra& alg, HomogeneousElement u,
                              const HomogeneousElement& v)
{
    if (u.degree != v.degree)
        throw std::domain_error("adding elements of different degrees");
    axpy(u.coords, 1, v.coords, alg.p());
    return u;
}

/// Left-to-right fold of the word's letters; [a b^k] is k iterated brackets.
inline HomogeneousElement eval_word(const GradedLieAlgebra& alg,
                                    const LeftNormedWord& word)
{
    HomogeneousElement acc =
        word.seed_element ? *word.seed_element : alg.generator(word.seed_name);
    for (const auto& letter : word.letters) {
        const HomogeneousElement g = alg.generator(letter.generator);
        for (int k = 0; k < letter.exponent; ++k)
            acc = bracket(alg, acc, g);
    }
    return acc;
}

/// Convenience: [seed letters...] with single-character generator names.
inline HomogeneousElement eval_word(const GradedLieAlgebra& alg,
                                    const HomogeneousElement& seed,
                                    const std::vector<WordLetter>& letters)
{
    LeftNormedWord w;
    w.seed_element = seed;
    w.letters = letters;
    return eval_word(alg, w);
}

struct GenJacobiResult {
    HomogeneousElement lhs;
    HomogeneousElement rhs;
    bool equal;
};

/// Generalized Jacobi identity:
///   [a [b c^n]] = sum_{i=0..n} (-1)^i C(n,i) [a c^i b c^{n-i}].
inline GenJacobiResult gen_jacobi_expand(const GradedLieAlgebra& alg,
                                         const HomogeneousElement& a,
                                         const HomogeneousElement& b,
                                         const std::string& c, int n)
{
    if (n < 1)
        throw std::domain_error("gen_jacobi_expand requires n >= 1");
    LeftNormedWord inner;
    inner.seed_element = b;
    inner.letters = {{c, n}};
    HomogeneousElement lhs = bracket(alg, a, eval_word(alg, inner));

    HomogeneousElement rhs = alg.zero_element(lhs.degree);
    const HomogeneousElement bb = b;
    for (int i = 0; i <= n; ++i) {
        HomogeneousElement term = a;
        if (i > 0)
            term = eval_word(alg, term, {{c, i}});
        term = bracket(alg, term, bb);
        if (n - i > 0)
            term = eval_word(alg, term, {{c, n - i}});
        i64 coeff = modp::fp_binom(n, i, alg.p());
        if (i % 2 == 1)
            coeff = modp::neg(coeff, alg.p());
        rhs = add(alg, rhs, scale(alg, coeff, term));
    }
    return {lhs, rhs, lhs.coords == rhs.coords};
}

struct JacobiViolation {
    int i, j, k;
    int a, b, c;
};

/// Empty iff the Jacobi identity holds on every basis triple of total
/// degree <= up_to. Violations come out in deterministic (degree, index) order.
inline std::vector<JacobiViolation> jacobi_audit(const GradedLieAlgebra& alg,
                                                 int up_to)
{
    if (up_to > alg.max_degree())
        throw std::domain_error("jacobi_audit range exceeds truncation");
    std::vector<JacobiViolation> out;
    for (int i = 1; i <= up_to - 2; ++i)
        for (int j = i; i + j <= up_to - 1; ++j)
            for (int k = j; i + j + k <= up_to; ++k)
                for (int a = 0; a < alg.dim(i); ++a)
                    for (int b = 0; b < alg.dim(j); ++b)
                        for (int c = 0; c < alg.dim(k); ++c) {
                            const int m = i + j + k;
                            FpVec acc(alg.dim(m), 0);
                            auto term = [&](int di, int ai, int dj, int bj, int dk,
                                            int ck) {
                                HomogeneousElement ab{di + dj,
                                                      alg.basis_bracket(di, dj, ai, bj)};
                                HomogeneousElement e = bracket(
                                    alg, ab, alg.basis_element(dk, ck));
                                axpy(acc, 1, e.coords, alg.p());
                            };
                            term(i, a, j, b, k, c);
                            term(j, b, k, c, i, a);
                            term(k, c, i, a, j, b);
                            if (!is_zero(acc))
                                out.push_back({i, j, k, a, b, c});
                        }
    return out;
}

/// True iff [b, y] = 0 for every basis element b of L_m.
inline bool centralizes(const GradedLieAlgebra& alg, const HomogeneousElement& y,
                        int m)
{
    if (y.degree != 1)
        throw std::domain_error("centralizes expects a degree-1 element");
    if (m + 1 > alg.max_degree())
        throw std::domain_error("centralizes range exceeds truncation");
    for (int b = 0; b < alg.dim(m); ++b)
        if (!bracket(alg, alg.basis_element(m, b), y).zero())
            return false;
    return true;
}

} // namespace diamondlab::liecore
