#pragma once

// Explicit builders: the finite Zassenhaus algebra W(1;n) in its
// divided-power basis, its cyclic grading of period q-1, and the loop
// construction producing an N-graded thin algebra whose diamonds all have
// type -1.

#include "diamondlab/algebra.hpp"
#include "diamondlab/modp.hpp"

#include <stdexcept>
#include <vector>

namespace diamondlab::construct {

using modp::i64;
using modp::PrimePower;

/// W(1;n): basis e_i for -1 <= i <= q-2 with [e_i, e_j] = c(i,j) e_{i+j},
/// c(i,j) = C(i+j+1, j) - C(i+j+1, i) mod p; zero outside -1 <= i+j <= q-2.
struct ZassenhausAlgebra {
    PrimePower qp;

    explicit ZassenhausAlgebra(const PrimePower& qp_) : qp(qp_)
    {
        if (qp.p <= 3 || qp.q <= 5)
            throw std::domain_error(
                "Zassenhaus construction requires p > 3 and q > 5");
    }

    i64 c(i64 i, i64 j) const
    {
        if (i < -1 || i > qp.q - 2 || j < -1 || j > qp.q - 2)
            throw std::domain_error("Zassenhaus index out of range");
        if (i + j < -1 || i + j > qp.q - 2)
            return 0;
        return modp::sub(modp::fp_binom(i + j + 1, j, qp.p),
                         modp::fp_binom(i + j + 1, i, qp.p), qp.p);
    }

    /// Jacobi on all index triples; returns true iff no violation.
    bool jacobi_ok() const
    {
        const i64 q = qp.q, p = qp.p;
        for (i64 i = -1; i <= q - 2; ++i)
            for (i64 j = i; j <= q - 2; ++j)
                for (i64 k = j; k <= q - 2; ++k) {
                    if (i + j + k < -1 || i + j + k > q - 2)
                        continue;
                    i64 acc = 0;
                    auto term = [&](i64 a, i64 b, i64 cc) {
                        if (a + b >= -1 && a + b <= q - 2)
                            acc = modp::add(acc, modp::mul(c(a, b), c(a + b, cc), p), p);
                    };
                    term(i, j, k);
                    term(j, k, i);
                    term(k, i, j);
                    if (acc != 0)
                        return false;
                }
        return true;
    }
};

inline ZassenhausAlgebra zassenhaus(i64 p, int n)
{
    return ZassenhausAlgebra(PrimePower(p, n));
}

/// Residue map for the cyclic grading of period q-1.
struct CyclicGrading {
    i64 period;
    std::vector<i64> residue; // residue[i+1] = r(e_i) for i in [-1, q-2]

    static CyclicGrading standard(const PrimePower& qp)
    {
        CyclicGrading g;
        g.period = qp.q - 1;
        g.residue.resize(qp.q);
        for (i64 i = -1; i <= qp.q - 2; ++i)
            g.residue[i + 1] = ((i % g.period) + g.period) % g.period;
        return g;
    }

    i64 r(i64 i) const { return residue.at(i + 1); }
};

/// Exhaustive check that the residue map is additive on nonzero brackets.
inline bool grading_audit(const ZassenhausAlgebra& z, const CyclicGrading& g)
{
    const i64 q = z.qp.q;
    for (i64 i = -1; i <= q - 2; ++i)
        for (i64 j = -1; j <= q - 2; ++j) {
            if (i + j < -1 || i + j > q - 2 || z.c(i, j) == 0)
                continue;
            if (g.r(i + j) != (g.r(i) + g.r(j)) % g.period)
                return false;
        }
    return true;
}

namespace detail {

// Zassenhaus indices populating degree m, in stored basis order.
// Degree m holds {e_i : i = -m mod (q-1)}; the class of residue -1 contains
// both e_{-1} and e_{q-2}, listed in that order so that x = e_{-1} gets
// coordinate (1,0) and y = e_{q-2} gets (0,1) in degree 1.
inline std::vector<i64> degree_indices(i64 q, int m)
{
    const i64 period = q - 1;
    const i64 res = ((-(i64)m) % period + period) % period;
    std::vector<i64> idx;
    if (res == period - 1) {
        idx.push_back(-1);
        idx.push_back(q - 2);
    } else {
        idx.push_back(res);
    }
    return idx;
}

} // namespace detail

/// Loop algebra of the cyclically graded Zassenhaus algebra: degree m is a
/// copy of the residue class of -m mod (q-1), with bracket inherited from
/// the constants table. Realizes the Nottingham diamond pattern with all
/// diamonds of type -1 and designated standard generators x, y.
inline liecore::GradedLieAlgebra loop_nottingham(i64 p, int n, int max_degree)
{
    ZassenhausAlgebra z{PrimePower(p, n)};
    const i64 q = z.qp.q;
    if (max_degree < 2 * q)
        throw std::domain_error("loop construction needs max_degree >= 2q");

    std::vector<int> dims(max_degree);
    for (int m = 1; m <= max_degree; ++m)
        dims[m - 1] = (int)detail::degree_indices(q, m).size();

    liecore::GradedLieAlgebra alg(p, max_degree, std::move(dims));
    alg.set_q(q);
    alg.set_generator("x", {1, 0});
    alg.set_generator("y", {0, 1});

    for (int i = 1; i <= max_degree / 2; ++i) {
        const auto bi = detail::degree_indices(q, i);
        for (int j = i; i + j <= max_degree; ++j) {
            const auto bj = detail::degree_indices(q, j);
            const auto bo = detail::degree_indices(q, i + j);
            for (int a = 0; a < (int)bi.size(); ++a)
                for (int b = 0; b < (int)bj.size(); ++b) {
                    if (i == j && a >= b)
                        continue;
                    const i64 ii = bi[a], jj = bj[b];
                    if (ii + jj < -1 || ii + jj > q - 2)
                        continue;
                    const i64 coeff = z.c(ii, jj);
                    if (coeff == 0)
                        continue;
                    liecore::FpVec out(bo.size(), 0);
                    for (int k = 0; k < (int)bo.size(); ++k)
                        if (bo[k] == ii + jj)
                            out[k] = coeff;
                    alg.set_bracket(i, j, a, b, std::move(out));
                }
        }
    }
    return alg;
}

} // namespace diamondlab::construct
