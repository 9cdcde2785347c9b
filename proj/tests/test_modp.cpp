#include "diamondlab/modp.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <vector>

namespace mp = diamondlab::modp;
using mp::i64;
using boost::multiprecision::cpp_int;

// Independent oracle: exact big-integer binomials by Pascal's rule, reduced
// mod p only at the end. Deliberately avoids base-p digit arithmetic.
namespace {

class PascalOracle {
public:
    i64 binom_mod(i64 top, i64 bottom, i64 p)
    {
        if (bottom < 0 || bottom > top)
            return 0;
        while ((i64)rows_.size() <= top) {
            size_t r = rows_.size();
            std::vector<cpp_int> row(r + 1, 1);
            for (size_t k = 1; k < r; ++k)
                row[k] = rows_[r - 1][k - 1] + rows_[r - 1][k];
            rows_.push_back(std::move(row));
        }
        return (i64)(rows_[(size_t)top][(size_t)bottom] % p);
    }

private:
    std::vector<std::vector<cpp_int>> rows_;
};

} // namespace

TEST_CASE("fp_binom examples")
{
    CHECK(mp::fp_binom(10, 4, 7) == 0); // C(10,4) = 210 = 0 mod 7
    for (i64 n : {0, 1, 5, 100, 48})
        CHECK(mp::fp_binom(n, 0, 7) == 1);
    CHECK(mp::fp_binom(47, 6, 7) == 0); // C(q-2, p^t - 1) with q = 49
    CHECK(mp::fp_binom(5, -1, 7) == 0);
    CHECK(mp::fp_binom(4, 6, 7) == 0);
    CHECK_THROWS_AS(mp::fp_binom(5, 2, 4), std::domain_error);
}

TEST_CASE("fp_binom agrees with the exact big-integer oracle")
{
    PascalOracle oracle;
    for (i64 p : {5, 7, 11, 13})
        for (i64 top = 0; top < p * p; ++top)
            for (i64 bottom = 0; bottom <= top; ++bottom)
                REQUIRE(mp::fp_binom(top, bottom, p) == oracle.binom_mod(top, bottom, p));
}

TEST_CASE("inversion symmetry of binomials")
{
    SECTION("hand instances for q = 7")
    {
        // (a,b) = (5,2): (-1)^5 C(5,2) = -10 = 4 mod 7; (-1)^2 C(4,1) = 4
        CHECK(mp::mul(mp::neg(1, 7), mp::fp_binom(5, 2, 7), 7) == 4);
        CHECK(mp::fp_binom(4, 1, 7) == 4);
    }
    SECTION("diagonal b = a is trivially symmetric")
    {
        for (i64 a = 0; a < 7; ++a) {
            i64 lhs = mp::mul(a % 2 ? 6 : 1, mp::fp_binom(a, a, 7), 7);
            i64 rhs = mp::mul(a % 2 ? 6 : 1, mp::fp_binom(6 - a, 6 - a, 7), 7);
            CHECK(lhs == rhs);
        }
    }
    SECTION("exhaustive pass for prime powers up to 343")
    {
        for (auto [p, n] : std::vector<std::pair<i64, int>>{
                 {7, 1}, {5, 2}, {7, 2}, {11, 2}, {5, 3}, {7, 3}}) {
            auto rep = mp::check_invert_symmetry(mp::PrimePower(p, n));
            INFO("q = " << mp::PrimePower(p, n).q);
            CHECK(rep.pass);
            CHECK(rep.counterexamples.empty());
        }
    }
}

TEST_CASE("binomial lemma classification examples")
{
    mp::PrimePower p7(7, 1);
    auto c = mp::binomial_lemma_classify(49, 3, p7);
    CHECK(c.hypothesis_holds);
    CHECK(c.which == mp::LemmaCase::power_of_p);

    c = mp::binomial_lemma_classify(48, 1, p7);
    CHECK(c.hypothesis_holds);
    CHECK(c.which == mp::LemmaCase::a1_n_plus_1_power);

    c = mp::binomial_lemma_classify(3, 6, p7);
    CHECK(c.hypothesis_holds);
    CHECK(c.which == mp::LemmaCase::a_minus1_n3);

    c = mp::binomial_lemma_classify(10, 2, p7);
    CHECK_FALSE(c.hypothesis_holds);
    CHECK(c.which == mp::LemmaCase::none);

    CHECK_THROWS_AS(mp::binomial_lemma_classify(2, 1, p7), std::domain_error);
}

TEST_CASE("polynomial condition examples")
{
    CHECK(mp::poly_condition_equivalent(49, 3, 7));
    CHECK_FALSE(mp::poly_condition_equivalent(10, 2, 7));
    for (i64 p : {5, 7, 11, 13})
        CHECK(mp::poly_condition_equivalent(3, p - 1, p));
}

TEST_CASE("trichotomy equivalence and auxiliary congruences on the grid")
{
    // Brute-force both directions for p in {5,7}, 3 <= n <= 600, 0 <= a < p,
    // with hypothesis evaluated directly from Pascal-row proportionality.
    PascalOracle oracle;
    for (i64 p : {5, 7}) {
        mp::PrimePower qp(p, 1);
        for (i64 n = 3; n <= 600; ++n)
            for (i64 a = 0; a < p; ++a) {
                bool direct = true;
                for (i64 j = 2; j < n && direct; ++j)
                    direct = (oracle.binom_mod(n, j - 1, p) +
                              a * oracle.binom_mod(n, j, p)) % p == 0;
                auto c = mp::binomial_lemma_classify(n, a, qp);
                REQUIRE(c.hypothesis_holds == direct);
                bool branch = mp::is_power_of(n, p) ||
                              (a == 1 && mp::is_power_of(n + 1, p)) ||
                              (a == p - 1 && n == 3);
                REQUIRE(c.hypothesis_holds == branch);
                REQUIRE(mp::poly_condition_equivalent(n, a, p) == direct);
                if (direct && n % p != 0) {
                    // (a - (-1)^n)(n - 1 - (-1)^n) = 0 and a(n-1) + 2 = 0
                    i64 sgn = (n % 2 == 0) ? 1 : p - 1;
                    i64 first = mp::mul(mp::sub(a, sgn, p),
                                        mp::sub(mp::reduce(n - 1, p), sgn, p), p);
                    REQUIRE(first == 0);
                    REQUIRE(mp::reduce(a * (n - 1) + 2, p) == 0);
                }
            }
    }
}
