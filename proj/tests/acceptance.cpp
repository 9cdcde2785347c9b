// Acceptance suite: one line per criterion, "criterion N: PASS/FAIL (t s)".
// Exits nonzero if any criterion fails or exceeds its time budget.

#include "diamondlab/construct.hpp"
#include "diamondlab/diamond.hpp"
#include "diamondlab/modp.hpp"
#include "diamondlab/nilquot.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace dd = diamondlab::diamond;
namespace cn = diamondlab::construct;
namespace nq = diamondlab::nilquot;
namespace mp = diamondlab::modp;
namespace lc = diamondlab::liecore;
using mp::i64;

namespace {

struct Criterion {
    int number;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, const std::string& why, std::string& detail)
{
    if (!cond && detail.empty())
        detail = why;
    return cond;
}

// Mirror of [e_b@m, g] = out through the canonical (1, m) slot.
void set_ad(lc::GradedLieAlgebra& alg, int m, int bidx, int gidx, lc::FpVec out)
{
    for (auto& c : out)
        c = mp::neg(mp::reduce(c, alg.p()), alg.p());
    alg.set_bracket(1, m, gidx, bidx, std::move(out));
}

bool loop_diamond_criterion(i64 p, int n, int N, std::string& detail)
{
    auto alg = cn::loop_nottingham(p, n, N);
    const i64 q = *alg.q();
    const i64 period = q - 1;
    bool ok = true;
    for (int m = 1; m <= N; ++m) {
        const int expected = (m % period == 1) ? 2 : 1;
        ok &= expect(alg.dim(m) == expected,
                     "dimension pattern breaks at degree " + std::to_string(m), detail);
    }
    auto rep = dd::analyze(alg);
    ok &= expect(rep.q == q, "wrong q in the report", detail);
    ok &= expect(rep.violations.empty(), "analysis reported violations", detail);
    int diamonds = 0;
    for (const auto& r : rep.components) {
        if (!r.is_diamond())
            continue;
        ++diamonds;
        if (r.degree == 1)
            continue;
        ok &= expect(r.cls == dd::ComponentClass::genuine &&
                         r.type.kind == dd::DiamondType::Kind::finite &&
                         r.type.value == p - 1,
                     "diamond at " + std::to_string(r.degree) + " is not of type -1",
                     detail);
    }
    ok &= expect(diamonds == (rep.horizon - 1) / (int)period + 1,
                 "diamond count mismatch within the horizon", detail);
    ok &= expect(!rep.distances.empty(), "no diamond distances recorded", detail);
    for (int d : rep.distances)
        ok &= expect(d == (int)period, "a diamond distance differs from q-1", detail);
    // the full dimension table has a diamond at every degree 1 mod (q-1)
    int total = 0;
    for (int m = 1; m <= N; ++m)
        if (alg.dim(m) == 2)
            ++total;
    ok &= expect(total == (N - 1) / (int)period + 1, "total diamond count mismatch",
                 detail);
    return ok;
}

bool criterion1(std::string& detail) { return loop_diamond_criterion(7, 1, 300, detail); }
bool criterion2(std::string& detail) { return loop_diamond_criterion(5, 2, 200, detail); }

bool criterion3(std::string& detail)
{
    auto alg = cn::loop_nottingham(7, 1, 30);
    auto y = dd::find_sandwich_y(alg);
    auto [x, y2] = dd::normalize_generators(alg, y);
    bool ok = true;
    // (ad y)^2 = 0 and (ad x)^7 = 0 on every graded piece in range
    for (int m = 1; m <= 28; ++m)
        for (int b = 0; b < alg.dim(m); ++b) {
            auto e = alg.basis_element(m, b);
            ok &= expect(eval_word(alg, e, {{"y", 2}}).zero(), "(ad y)^2 != 0", detail);
            if (m + 7 <= 30)
                ok &= expect(eval_word(alg, e, {{"x", 7}}).zero(), "(ad x)^7 != 0",
                             detail);
        }
    auto v1 = eval_word(alg, y, {{"x", 5}});
    ok &= expect(!v1.zero(), "[y x^5] vanishes", detail);
    ok &= expect(eval_word(alg, v1, {{"x", 2}}).zero(), "[v1 x x] != 0", detail);
    ok &= expect(eval_word(alg, v1, {{"y", 2}}).zero(), "[v1 y y] != 0", detail);
    auto vyx = eval_word(alg, v1, {{"y", 1}, {"x", 1}});
    auto vxy = eval_word(alg, v1, {{"x", 1}, {"y", 1}});
    ok &= expect(vyx.coords == scale(alg, -2, vxy).coords,
                 "[v1 y x] != -2 [v1 x y]", detail);
    // y centralizes exactly L_2 .. L_5
    for (int m = 2; m <= 5; ++m)
        ok &= expect(centralizes(alg, y, m),
                     "y fails to centralize L_" + std::to_string(m), detail);
    ok &= expect(!centralizes(alg, y, 6), "y unexpectedly centralizes L_6", detail);
    ok &= expect(!centralizes(alg, y, 1), "y unexpectedly centralizes L_1", detail);
    return ok;
}

bool criterion4(std::string& detail)
{
    bool ok = true;
    for (auto [p, n, N] : {std::tuple<i64, int, int>{7, 1, 120}, {5, 2, 120}}) {
        auto alg = cn::loop_nottingham(p, n, N);
        auto rep = dd::analyze(alg);
        auto thm = dd::verify_main_theorem(alg, rep);
        ok &= expect(thm.all_pass() && rep.violations.empty(),
                     "theorem clauses fail on the clean loop algebra p=" +
                         std::to_string(p),
                     detail);
    }
    // corrupted variant A: spurious [L_4, y] != 0 breaks the fake-pair clause
    {
        auto bad = cn::loop_nottingham(7, 1, 120);
        set_ad(bad, 4, 0, 1, {1});
        auto rep = dd::analyze(bad);
        auto thm = dd::verify_main_theorem(bad, rep);
        ok &= expect(!thm.all_pass() || !rep.violations.empty(),
                     "corrupted centralizer pattern not detected", detail);
    }
    // corrupted variant B: [w x x] != 0 above a diamond
    {
        auto bad = cn::loop_nottingham(7, 1, 120);
        set_ad(bad, 13, 0, 0, {1});
        auto rep = dd::analyze(bad);
        ok &= expect(!rep.violations.empty(),
                     "corrupted diamond relation not detected", detail);
    }
    return ok;
}

bool criterion5(std::string& detail)
{
    auto alg = cn::loop_nottingham(7, 1, 100);
    auto rep = dd::analyze(alg);
    bool ok = expect(!rep.runs.empty(), "no centralizer runs found", detail);
    for (const auto& run : rep.runs) {
        const bool interior = run.start > 1 && run.start + run.length <= rep.horizon;
        if (interior)
            ok &= expect(run.length == 4,
                         "interior run at " + std::to_string(run.start) +
                             " has length " + std::to_string(run.length),
                         detail);
    }
    for (int m = 1; m <= rep.horizon; ++m) {
        const bool uncent = (m % 6 == 0) || (m % 6 == 1);
        ok &= expect(rep.centralized[m] == !uncent,
                     "centralizer pattern breaks at degree " + std::to_string(m),
                     detail);
    }
    return ok;
}

bool criterion6(std::string& detail)
{
    auto alg = cn::loop_nottingham(7, 1, 100);
    auto rep = dd::analyze(alg);
    bool ok = true;
    for (int m = 13; m + 7 <= 100 && m <= rep.horizon; m += 6) {
        auto checks = dd::replay_chain_identities(alg, rep, m);
        ok &= expect(!checks.empty(), "no identities replayed", detail);
        for (const auto& c : checks)
            ok &= expect(c.verified,
                         "identity fails at m=" + std::to_string(m) + ": " + c.name,
                         detail);
    }
    return ok;
}

bool criterion7(std::string& detail)
{
    bool ok = true;
    for (auto [p, n] : {std::pair<i64, int>{7, 1}, {5, 2}, {7, 2}, {11, 2}, {5, 3}, {7, 3}}) {
        auto rep = mp::check_invert_symmetry(mp::PrimePower(p, n));
        ok &= expect(rep.pass && rep.counterexamples.empty(),
                     "inversion symmetry fails for q=" +
                         std::to_string(mp::PrimePower(p, n).q),
                     detail);
    }
    return ok;
}

bool criterion8(std::string& detail)
{
    bool ok = true;
    for (i64 p : {5, 7}) {
        mp::PrimePower qp(p, 1);
        for (i64 n = 3; n <= 600; ++n)
            for (i64 a = 0; a < p; ++a) {
                auto c = mp::binomial_lemma_classify(n, a, qp);
                const bool branch = c.which != mp::LemmaCase::none;
                ok &= expect(c.hypothesis_holds == branch,
                             "trichotomy fails at p=" + std::to_string(p) +
                                 " n=" + std::to_string(n) + " a=" + std::to_string(a),
                             detail);
                ok &= expect(mp::poly_condition_equivalent(n, a, p) ==
                                 c.hypothesis_holds,
                             "polynomial reformulation disagrees at p=" +
                                 std::to_string(p) + " n=" + std::to_string(n) +
                                 " a=" + std::to_string(a),
                             detail);
            }
    }
    return ok;
}

bool criterion9(std::string& detail)
{
    auto free2 = nq::parse_presentation("p = 7\ngenerators = x y\n");
    auto alg = nq::graded_quotient(free2, 8);
    const std::vector<int> expected = {2, 1, 2, 3, 6, 9, 18, 30};
    bool ok = true;
    for (int m = 1; m <= 8; ++m)
        ok &= expect(alg.dim(m) == expected[m - 1],
                     "free rank differs at degree " + std::to_string(m), detail);

    auto abelian = nq::parse_presentation("p = 7\ngenerators = x y\nrelator = [x, y]\n");
    auto ab = nq::graded_quotient(abelian, 6);
    ok &= expect(ab.dim(1) == 2, "abelian quotient loses degree 1", detail);
    for (int m = 2; m <= 6; ++m)
        ok &= expect(ab.dim(m) == 0,
                     "abelian quotient keeps degree " + std::to_string(m), detail);
    return ok;
}

bool criterion10(std::string& detail)
{
    const std::vector<std::pair<std::string, int>> cases = {
        {"p = 5\ngenerators = x y\n", 10},
        {"p = 7\ngenerators = x y\nrelator = [x, y]\n", 12},
        {"p = 7\ngenerators = x y\nrelator = [y, x, y]\nrelator = [y, x, x, x]\n", 12},
        {"p = 5\ngenerators = x y\nrelator = [y, x, y]\n", 10},
        {"p = 7\ngenerators = x y\nrelator = [y, x, x, x] + 2*[x, y, x, x]\n", 9},
        {"p = 11\ngenerators = x y z\nrelator = [x, z]\nrelator = [y, z, y]\n", 7},
    };
    bool ok = true;
    for (size_t k = 0; k < cases.size(); ++k) {
        auto pres = nq::parse_presentation(cases[k].first);
        auto alg = nq::graded_quotient(pres, cases[k].second);
        ok &= expect(jacobi_audit(alg, cases[k].second).empty(),
                     "Jacobi audit fails on presentation " + std::to_string(k + 1),
                     detail);
        for (const auto& r : pres.relators)
            ok &= expect(nq::evaluate_relator(alg, r).zero(),
                         "a relator survives in presentation " + std::to_string(k + 1),
                         detail);
    }
    return ok;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, 10.0, criterion1},  {2, 10.0, criterion2}, {3, 5.0, criterion3},
        {4, 10.0, criterion4},  {5, 5.0, criterion5},  {6, 10.0, criterion6},
        {7, 5.0, criterion7},   {8, 30.0, criterion8}, {9, 10.0, criterion9},
        {10, 60.0, criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (ok && secs > c.budget_seconds) {
            ok = false;
            detail = "time budget exceeded (" + std::to_string(c.budget_seconds) +
                     "s allowed)";
        }
        std::printf("criterion %2d: %s (%.2fs)%s%s\n", c.number,
                    ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : " -- ",
                    detail.c_str());
        if (!ok)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
