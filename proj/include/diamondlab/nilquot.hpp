#pragma once

// Presentation DSL parser and the degree-by-degree graded nilpotent-quotient
// engine: from generators of degree 1 and homogeneous relators, compute the
// largest N-graded Lie algebra quotient over F_p up to a cutoff.
//
// Degree m is built as the span of symbols [b, g] (b a basis element of
// L_{m-1}, g a generator), quotiented by anticommutativity rows, Jacobi rows,
// and degree-m relator instances, via row reduction with first-nonzero
// pivoting in spanning-symbol order.

#include "diamondlab/algebra.hpp"
#include "diamondlab/modp.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace diamondlab::nilquot {

using modp::i64;
using liecore::FpVec;
using liecore::HomogeneousElement;
using liecore::LeftNormedWord;

struct Relator {
    std::vector<std::pair<i64, LeftNormedWord>> terms;

    int degree() const { return terms.empty() ? 0 : terms.front().second.total_degree(); }
};

struct Presentation {
    i64 p = 0;
    std::vector<std::string> generators;
    std::vector<Relator> relators;
};

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int line_, int column_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + what_),
          line(line_), column(column_)
    {
    }
};

namespace detail {

// Character-level cursor over one line of the DSL.
struct LineCursor {
    const std::string& s;
    int line;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
            ++pos;
    }
    bool done()
    {
        skip_ws();
        return pos >= s.size();
    }
    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() { return s[pos++]; }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(line, (int)pos + 1, msg);
    }

    std::string ident()
    {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
            ++pos;
        if (pos == start)
            fail("expected identifier");
        return s.substr(start, pos - start);
    }

    i64 integer()
    {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
            ++pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
            ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit((unsigned char)s[start])))
            fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }
};

inline LeftNormedWord parse_word(LineCursor& c, const Presentation& pres)
{
    if (c.peek() != '[')
        c.fail("expected '[' starting a left-normed word");
    c.take();
    LeftNormedWord w;
    bool first = true;
    while (true) {
        std::string name = c.ident();
        bool known = false;
        for (const auto& g : pres.generators)
            if (g == name)
                known = true;
        if (!known)
            c.fail("unknown generator '" + name + "'");
        int exponent = 1;
        if (c.peek() == '^') {
            c.take();
            i64 e = c.integer();
            if (e < 1)
                c.fail("exponent must be >= 1");
            exponent = (int)e;
        }
        if (first) {
            w.seed_name = name;
            if (exponent > 1)
                w.letters.push_back({name, exponent - 1});
            first = false;
        } else {
            w.letters.push_back({name, exponent});
        }
        char ch = c.peek();
        if (ch == ',') {
            c.take();
            continue;
        }
        if (ch == ']') {
            c.take();
            break;
        }
        c.fail("expected ',' or ']' in word");
    }
    if (w.total_degree() < 2)
        c.fail("relator words must have degree >= 2");
    return w;
}

inline Relator parse_relator(LineCursor& c, const Presentation& pres)
{
    Relator r;
    bool first = true;
    while (!c.done()) {
        i64 sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            c.take();
            sign = (ch == '-') ? -1 : 1;
        } else if (!first) {
            c.fail("expected '+' or '-' between relator terms");
        }
        i64 coeff = 1;
        if (std::isdigit((unsigned char)c.peek())) {
            coeff = c.integer();
            if (c.peek() == '*')
                c.take();
        }
        LeftNormedWord w = parse_word(c, pres);
        if (!first && w.total_degree() != r.degree())
            c.fail("inhomogeneous relator: degree " + std::to_string(w.total_degree()) +
                   " term in a degree " + std::to_string(r.degree()) + " relator");
        r.terms.emplace_back(sign * coeff, std::move(w));
        first = false;
    }
    if (r.terms.empty())
        c.fail("empty relator");
    return r;
}

} // namespace detail

/// Line-oriented DSL: `p = <prime>`, `generators = <names>`, one
/// `relator = <combination>` per line; `#` starts a comment.
inline Presentation parse_presentation(const std::string& text)
{
    Presentation pres;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string lineStr = raw.substr(0, raw.find('#'));
        detail::LineCursor c{lineStr, lineno};
        if (c.done())
            continue;
        std::string key = c.ident();
        if (c.peek() != '=')
            c.fail("expected '=' after '" + key + "'");
        c.take();
        if (key == "p") {
            pres.p = c.integer();
            if (!modp::is_prime(pres.p))
                c.fail("p must be prime");
        } else if (key == "generators") {
            if (!pres.generators.empty())
                c.fail("duplicate generators line");
            while (!c.done()) {
                std::string name = c.ident();
                for (const auto& g : pres.generators)
                    if (g == name)
                        c.fail("duplicate generator '" + name + "'");
                pres.generators.push_back(name);
            }
            if (pres.generators.empty())
                c.fail("empty generator list");
        } else if (key == "relator") {
            if (pres.generators.empty())
                c.fail("relator before generators line");
            pres.relators.push_back(detail::parse_relator(c, pres));
        } else {
            c.fail("unknown key '" + key + "'");
        }
    }
    if (pres.p == 0)
        throw ParseError(lineno, 1, "missing 'p = <prime>' line");
    if (pres.generators.empty())
        throw ParseError(lineno, 1, "missing 'generators =' line");
    return pres;
}

namespace detail {

// Working state of the quotient computation. Bracket tables are stored in
// the same (i <= j) canonical form the final algebra uses.
struct Engine {
    const Presentation& pres;
    i64 p;
    int ngens;
    int cutoff;
    std::vector<int> dims;                               // dims[m-1]
    std::map<liecore::BracketKey, FpVec> table;          // i <= j only
    std::vector<std::vector<std::pair<int, int>>> defs;  // defs[m-1][k] = (b, g)

    Engine(const Presentation& pr, int N)
        : pres(pr), p(pr.p), ngens((int)pr.generators.size()), cutoff(N)
    {
        dims.assign(N, 0);
        defs.resize(N);
        dims[0] = ngens;
    }

    FpVec table_bracket(int i, int j, int a, int b) const
    {
        bool flip = (i > j) || (i == j && a > b);
        if (i == j && a == b)
            return FpVec(dims[i + j - 1], 0);
        auto it = table.find(flip ? liecore::BracketKey{j, i, b, a}
                                  : liecore::BracketKey{i, j, a, b});
        if (it == table.end())
            return FpVec(dims[i + j - 1], 0);
        FpVec v = it->second;
        if (flip)
            for (auto& c : v)
                c = modp::neg(c, p);
        return v;
    }

    // Bilinear bracket via the tables built so far (total degree < current m).
    HomogeneousElement quot_bracket(const HomogeneousElement& u,
                                    const HomogeneousElement& v) const
    {
        const int m = u.degree + v.degree;
        HomogeneousElement out{m, FpVec(dims[m - 1], 0)};
        for (int a = 0; a < (int)u.coords.size(); ++a) {
            if (u.coords[a] == 0)
                continue;
            for (int b = 0; b < (int)v.coords.size(); ++b) {
                if (v.coords[b] == 0)
                    continue;
                liecore::axpy(out.coords,
                              modp::mul(u.coords[a], v.coords[b], p),
                              table_bracket(u.degree, v.degree, a, b), p);
            }
        }
        return out;
    }

    // [w, c] expressed over the degree-m spanning symbols, where
    // deg w + deg c = m. Recursion peels the defining pair of each basis
    // element of c: [w, [b, g]] = [[w, b], g] - [[w, g], b].
    FpVec cover_bracket(const HomogeneousElement& w, const HomogeneousElement& c,
                        int m) const
    {
        FpVec out((size_t)dims[m - 2] * ngens, 0);
        if (c.degree == 1) {
            for (int b = 0; b < (int)w.coords.size(); ++b) {
                if (w.coords[b] == 0)
                    continue;
                for (int g = 0; g < ngens; ++g)
                    if (c.coords[g] != 0)
                        out[(size_t)b * ngens + g] = modp::add(
                            out[(size_t)b * ngens + g],
                            modp::mul(w.coords[b], c.coords[g], p), p);
            }
            return out;
        }
        for (int k = 0; k < (int)c.coords.size(); ++k) {
            if (c.coords[k] == 0)
                continue;
            const auto [bk, gk] = defs[c.degree - 1][k];
            HomogeneousElement B{c.degree - 1, FpVec(dims[c.degree - 2], 0)};
            B.coords[bk] = 1;
            HomogeneousElement G{1, FpVec(ngens, 0)};
            G.coords[gk] = 1;
            FpVec t1 = cover_bracket(quot_bracket(w, B), G, m);
            FpVec t2 = cover_bracket(quot_bracket(w, G), B, m);
            for (size_t s = 0; s < out.size(); ++s)
                out[s] = modp::add(out[s],
                                   modp::mul(c.coords[k],
                                             modp::sub(t1[s], t2[s], p), p),
                                   p);
        }
        return out;
    }

    HomogeneousElement basis_elem(int degree, int index) const
    {
        HomogeneousElement e{degree, FpVec(dims[degree - 1], 0)};
        e.coords[index] = 1;
        return e;
    }

    // Word evaluation in the quotient; if the word's degree equals m, the
    // final letter is applied through the spanning-symbol cover instead.
    FpVec cover_word(const LeftNormedWord& word, int m) const
    {
        std::vector<int> flat; // generator indices after the seed
        for (const auto& l : word.letters)
            for (int k = 0; k < l.exponent; ++k)
                flat.push_back(gen_index(l.generator));
        HomogeneousElement acc{1, FpVec(ngens, 0)};
        acc.coords[gen_index(word.seed_name)] = 1;
        for (size_t t = 0; t + 1 < flat.size(); ++t)
            acc = quot_bracket(acc, gen_elem(flat[t]));
        return cover_bracket(acc, gen_elem(flat.back()), m);
    }

    int gen_index(const std::string& name) const
    {
        for (int g = 0; g < ngens; ++g)
            if (pres.generators[g] == name)
                return g;
        throw std::domain_error("unknown generator '" + name + "'");
    }

    HomogeneousElement gen_elem(int g) const
    {
        HomogeneousElement e{1, FpVec(ngens, 0)};
        e.coords[g] = 1;
        return e;
    }

    // Reduced row echelon form with first-nonzero pivoting; rows are over
    // the degree-m symbol space.
    static void rref(std::vector<FpVec>& rows, std::vector<int>& pivots, i64 p)
    {
        size_t ncols = rows.empty() ? 0 : rows.front().size();
        std::vector<FpVec> echelon;
        std::vector<int> pivot_col;
        for (auto& row : rows) {
            for (size_t e = 0; e < echelon.size(); ++e) {
                i64 c = row[pivot_col[e]];
                if (c != 0)
                    for (size_t k = 0; k < ncols; ++k)
                        row[k] = modp::sub(row[k], modp::mul(c, echelon[e][k], p), p);
            }
            int pc = -1;
            for (size_t k = 0; k < ncols; ++k)
                if (row[k] != 0) {
                    pc = (int)k;
                    break;
                }
            if (pc < 0)
                continue;
            i64 inv = modp::inv(row[pc], p);
            for (size_t k = 0; k < ncols; ++k)
                row[k] = modp::mul(row[k], inv, p);
            // back-substitute into existing rows
            for (size_t e = 0; e < echelon.size(); ++e) {
                i64 c = echelon[e][pc];
                if (c != 0)
                    for (size_t k = 0; k < ncols; ++k)
                        echelon[e][k] =
                            modp::sub(echelon[e][k], modp::mul(c, row[k], p), p);
            }
            echelon.push_back(row);
            pivot_col.push_back(pc);
        }
        // sort rows by pivot column for determinism
        std::vector<size_t> order(echelon.size());
        for (size_t e = 0; e < order.size(); ++e)
            order[e] = e;
        std::sort(order.begin(), order.end(),
                  [&](size_t l, size_t r) { return pivot_col[l] < pivot_col[r]; });
        std::vector<FpVec> sorted;
        pivots.clear();
        for (size_t e : order) {
            sorted.push_back(std::move(echelon[e]));
            pivots.push_back(pivot_col[e]);
        }
        rows = std::move(sorted);
    }

    void compute_degree(int m)
    {
        const int nsym = dims[m - 2] * ngens;
        std::vector<FpVec> rows;

        auto add_row = [&](FpVec r) {
            if (!liecore::is_zero(r))
                rows.push_back(std::move(r));
        };

        // anticommutativity rows
        for (int i = 1; 2 * i <= m; ++i) {
            const int j = m - i;
            for (int a = 0; a < dims[i - 1]; ++a)
                for (int b = (i == j ? a : 0); b < dims[j - 1]; ++b) {
                    FpVec r1 = cover_bracket(basis_elem(i, a), basis_elem(j, b), m);
                    FpVec r2 = cover_bracket(basis_elem(j, b), basis_elem(i, a), m);
                    for (int s = 0; s < nsym; ++s)
                        r1[s] = modp::add(r1[s], r2[s], p);
                    if (i == j && a == b) {
                        // alternating: [a, a] = 0, not just 2[a, a] = 0
                        r1 = cover_bracket(basis_elem(i, a), basis_elem(j, b), m);
                    }
                    add_row(std::move(r1));
                }
        }

        // Jacobi rows: triples (a, b, g) with deg a + deg b = m - 1
        for (int i = 1; 2 * i <= m - 1; ++i) {
            const int j = m - 1 - i;
            for (int a = 0; a < dims[i - 1]; ++a)
                for (int b = (i == j ? a + 1 : 0); b < dims[j - 1]; ++b)
                    for (int g = 0; g < ngens; ++g) {
                        const auto A = basis_elem(i, a);
                        const auto B = basis_elem(j, b);
                        const auto G = gen_elem(g);
                        FpVec r = cover_bracket(quot_bracket(A, B), G, m);
                        FpVec r2 = cover_bracket(quot_bracket(B, G), A, m);
                        FpVec r3 = cover_bracket(quot_bracket(G, A), B, m);
                        for (int s = 0; s < nsym; ++s)
                            r[s] = modp::add(r[s], modp::add(r2[s], r3[s], p), p);
                        add_row(std::move(r));
                    }
        }

        // degree-m relator instances
        for (const auto& rel : pres.relators) {
            if (rel.degree() != m)
                continue;
            FpVec r(nsym, 0);
            for (const auto& [coeff, word] : rel.terms) {
                FpVec t = cover_word(word, m);
                for (int s = 0; s < nsym; ++s)
                    r[s] = modp::add(r[s], modp::mul(modp::reduce(coeff, p), t[s], p), p);
            }
            add_row(std::move(r));
        }

        std::vector<int> pivots;
        rref(rows, pivots, p);

        // quotient basis = non-pivot symbols in symbol order
        std::vector<int> symbol_to_basis(nsym, -1);
        {
            size_t pi = 0;
            int next = 0;
            for (int s = 0; s < nsym; ++s) {
                if (pi < pivots.size() && pivots[pi] == s) {
                    ++pi;
                    continue;
                }
                symbol_to_basis[s] = next++;
            }
            dims[m - 1] = next;
        }
        defs[m - 1].resize(dims[m - 1]);
        for (int s = 0; s < nsym; ++s)
            if (symbol_to_basis[s] >= 0)
                defs[m - 1][symbol_to_basis[s]] = {s / ngens, s % ngens};

        // phi: symbol -> coordinates over the quotient basis
        std::vector<FpVec> phi(nsym, FpVec(dims[m - 1], 0));
        for (int s = 0; s < nsym; ++s)
            if (symbol_to_basis[s] >= 0)
                phi[s][symbol_to_basis[s]] = 1;
        for (size_t e = 0; e < pivots.size(); ++e)
            for (int s = pivots[e] + 1; s < nsym; ++s)
                if (rows[e][s] != 0 && symbol_to_basis[s] >= 0)
                    phi[pivots[e]][symbol_to_basis[s]] = modp::neg(rows[e][s], p);

        // structure constants for total degree m
        for (int i = 1; 2 * i <= m; ++i) {
            const int j = m - i;
            for (int a = 0; a < dims[i - 1]; ++a)
                for (int b = (i == j ? a + 1 : 0); b < dims[j - 1]; ++b) {
                    FpVec sym = cover_bracket(basis_elem(i, a), basis_elem(j, b), m);
                    FpVec out(dims[m - 1], 0);
                    for (int s = 0; s < nsym; ++s)
                        if (sym[s] != 0)
                            liecore::axpy(out, sym[s], phi[s], p);
                    if (!liecore::is_zero(out))
                        table[liecore::BracketKey{i, j, a, b}] = std::move(out);
                }
        }
    }
};

} // namespace detail

/// The unique maximal N-graded Lie algebra over F_p generated in degree 1 by
/// the presentation's generators and satisfying its relators, truncated at N.
inline liecore::GradedLieAlgebra graded_quotient(const Presentation& pres, int N)
{
    if (N < 2)
        throw std::domain_error("cutoff must be at least 2");
    if (pres.generators.empty())
        throw std::domain_error("empty generator list");
    modp::require_prime(pres.p);
    for (const auto& r : pres.relators)
        if (r.degree() > N)
            throw std::domain_error("relator degree exceeds cutoff");

    detail::Engine eng(pres, N);
    for (int m = 2; m <= N; ++m)
        eng.compute_degree(m);

    liecore::GradedLieAlgebra alg(pres.p, N, eng.dims);
    for (int g = 0; g < eng.ngens; ++g) {
        FpVec v(eng.ngens, 0);
        v[g] = 1;
        alg.set_generator(pres.generators[g], std::move(v));
    }
    for (const auto& [key, vec] : eng.table)
        alg.set_bracket(key.i, key.j, key.a, key.b, vec);
    return alg;
}

/// Integer combination of left-normed words, evaluated via eval_word with
/// coefficients reduced mod p.
inline HomogeneousElement evaluate_relator(const liecore::GradedLieAlgebra& alg,
                                           const Relator& r)
{
    if (r.terms.empty())
        throw std::domain_error("empty relator");
    HomogeneousElement acc = alg.zero_element(r.degree());
    for (const auto& [coeff, word] : r.terms)
        acc = liecore::add(alg, acc, liecore::scale(alg, coeff, eval_word(alg, word)));
    return acc;
}

} // namespace diamondlab::nilquot
