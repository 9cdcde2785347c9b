// diamondlab: construct, analyze and check N-graded modular Lie algebras.
//
// Exit codes: 0 success / all checks pass, 1 at least one mathematical
// violation found, 2 usage / IO / schema error.

#include "diamondlab/algebra_io.hpp"
#include "diamondlab/construct.hpp"
#include "diamondlab/diamond.hpp"
#include "diamondlab/modp.hpp"
#include "diamondlab/nilquot.hpp"
#include "diamondlab/report_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace dl = diamondlab;
using dl::modp::i64;

namespace {

int cmd_construct(const std::string& kind, i64 p, int n, int max_degree,
                  const std::string& out)
{
    if (kind != "zassenhaus-loop") {
        std::cerr << "unknown construction '" << kind << "'\n";
        return 2;
    }
    auto alg = dl::construct::loop_nottingham(p, n, max_degree);
    dl::liecore::save(alg, out);
    return 0;
}

int cmd_nq(const std::string& path, int max_degree, const std::string& out)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    auto pres = dl::nilquot::parse_presentation(text);
    auto alg = dl::nilquot::graded_quotient(pres, max_degree);
    dl::liecore::save(alg, out);
    return 0;
}

int cmd_analyze(const std::string& path, const std::string& report_path,
                const std::string& format)
{
    auto alg = dl::liecore::load(path);
    auto rep = dl::diamond::analyze(alg);
    if (format == "table") {
        std::cout << dl::diamond::render_table(rep, alg.p());
    } else {
        auto j = dl::diamond::report_to_json(rep, alg.p());
        if (report_path.empty())
            std::cout << j.dump(1) << "\n";
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out)
            throw std::runtime_error("cannot open '" + report_path + "' for writing");
        out << dl::diamond::report_to_json(rep, alg.p()).dump(1) << "\n";
    }
    return rep.violations.empty() ? 0 : 1;
}

int cmd_check(const std::string& path)
{
    auto alg = dl::liecore::load(path);
    auto verdict = dl::diamond::is_nottingham(alg);
    std::cout << "nottingham-shape: " << (verdict.pass ? "pass" : "FAIL") << "\n";
    for (const auto& f : verdict.failures)
        std::cout << "  " << f << "\n";
    if (!verdict.pass)
        return 1;
    auto rep = dl::diamond::analyze(alg);
    auto thm = dl::diamond::verify_main_theorem(alg, rep);
    std::cout << "clause (a): " << (thm.a ? "pass" : "FAIL") << "\n"
              << "clause (b): " << (thm.b ? "pass" : "FAIL") << "\n"
              << "clause (c): " << (thm.c ? "pass" : "FAIL") << "\n"
              << "clause (d): " << (thm.d ? "pass" : "FAIL") << "\n";
    for (const auto& v : thm.violations)
        std::cout << "  degree " << v.degree << ": " << v.what << "\n";
    for (const auto& v : rep.violations)
        std::cout << "  degree " << v.degree << ": " << v.what << "\n";
    return (thm.all_pass() && rep.violations.empty()) ? 0 : 1;
}

int cmd_lemmas_invert(const std::vector<i64>& qs)
{
    bool all = true;
    for (i64 q : qs) {
        i64 p = q;
        for (i64 d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        int n = 0;
        for (i64 t = q; t > 1; t /= p)
            ++n;
        auto rep = dl::modp::check_invert_symmetry(dl::modp::PrimePower(p, n));
        std::cout << "invert symmetry q=" << q << ": "
                  << (rep.pass ? "pass" : "FAIL") << " ("
                  << rep.counterexamples.size() << " counterexamples)\n";
        all = all && rep.pass;
    }
    return all ? 0 : 1;
}

int cmd_lemmas_binomial(i64 p, i64 n_max)
{
    dl::modp::PrimePower qp(p, 1);
    for (i64 n = 3; n <= n_max; ++n)
        for (i64 a = 0; a < p; ++a) {
            auto c = dl::modp::binomial_lemma_classify(n, a, qp);
            bool branch = c.which != dl::modp::LemmaCase::none;
            if (c.hypothesis_holds != branch ||
                dl::modp::poly_condition_equivalent(n, a, p) != c.hypothesis_holds) {
                std::cout << "binomial lemma FAILS at n=" << n << " a=" << a << "\n";
                return 1;
            }
        }
    std::cout << "binomial lemma: pass on p=" << p << ", 3 <= n <= " << n_max << "\n";
    return 0;
}

int cmd_expand(const std::string& path, const std::string& word_text)
{
    auto alg = dl::liecore::load(path);
    dl::nilquot::Presentation pres;
    pres.p = alg.p();
    for (const auto& [name, coords] : alg.generators())
        pres.generators.push_back(name);
    dl::nilquot::detail::LineCursor c{word_text, 1};
    auto word = dl::nilquot::detail::parse_word(c, pres);
    auto e = eval_word(alg, word);
    std::cout << "degree " << e.degree << ": [";
    for (size_t k = 0; k < e.coords.size(); ++k)
        std::cout << (k ? ", " : "") << e.coords[k];
    std::cout << "]\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graded modular Lie algebra construction and diamond analysis"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a named algebra");
    std::string kind, out_path;
    i64 p = 7;
    int n = 1, max_degree = 50;
    construct->add_option("kind", kind, "construction name (zassenhaus-loop)")->required();
    construct->add_option("--p", p, "characteristic")->required();
    construct->add_option("--n", n, "prime-power exponent")->required();
    construct->add_option("--max-degree", max_degree, "truncation degree")->required();
    construct->add_option("--out", out_path, "output algebra JSON")->required();

    // nq
    auto* nq = app.add_subcommand("nq", "graded nilpotent quotient of a presentation");
    std::string pres_path;
    nq->add_option("--presentation", pres_path, "presentation DSL file")->required();
    nq->add_option("--max-degree", max_degree, "cutoff degree")->required();
    nq->add_option("--out", out_path, "output algebra JSON")->required();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "diamond analysis of an algebra");
    std::string alg_path, report_path, format = "json";
    analyze->add_option("input", alg_path, "algebra JSON")->required();
    analyze->add_option("--report", report_path, "report JSON output path");
    analyze->add_option("--format", format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    // check
    auto* check = app.add_subcommand("check", "Nottingham shape + theorem clauses");
    check->add_option("input", alg_path, "algebra JSON")->required();

    // lemmas
    auto* lemmas = app.add_subcommand("lemmas", "exhaustive binomial lemma checks");
    auto* invert = lemmas->add_subcommand("invert", "inversion symmetry of binomials");
    std::vector<i64> qs{7, 25, 49, 121, 125, 343};
    invert->add_option("--q", qs, "prime powers to test");
    auto* binomial = lemmas->add_subcommand("binomial", "trichotomy equivalence grid");
    i64 n_max = 600;
    binomial->add_option("--p", p, "prime")->required();
    binomial->add_option("--n-max", n_max, "upper bound for n");
    lemmas->require_subcommand(1);

    // expand
    auto* expand = app.add_subcommand("expand", "evaluate a left-normed word");
    std::string word_text;
    expand->add_option("input", alg_path, "algebra JSON")->required();
    expand->add_option("--word", word_text, "left-normed word, e.g. [y,x^5]")->required();

    try {
        app.parse(argc, argv);
        if (construct->parsed())
            return cmd_construct(kind, p, n, max_degree, out_path);
        if (nq->parsed())
            return cmd_nq(pres_path, max_degree, out_path);
        if (analyze->parsed())
            return cmd_analyze(alg_path, report_path, format);
        if (check->parsed())
            return cmd_check(alg_path);
        if (lemmas->parsed())
            return invert->parsed() ? cmd_lemmas_invert(qs)
                                    : cmd_lemmas_binomial(p, n_max);
        if (expand->parsed())
            return cmd_expand(alg_path, word_text);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
