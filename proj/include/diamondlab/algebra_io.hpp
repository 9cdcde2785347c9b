#pragma once

// JSON persistence for GradedLieAlgebra. The schema is the single source of
// truth for interchange; key order and bracket ordering are fixed so that
// identical algebras serialize bit-identically.

#include "diamondlab/algebra.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace diamondlab::liecore {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const GradedLieAlgebra& alg)
{
    ordered_json j;
    j["p"] = alg.p();
    if (alg.q())
        j["q"] = *alg.q();
    j["max_degree"] = alg.max_degree();
    j["dims"] = alg.dims();
    ordered_json gens = ordered_json::object();
    for (const auto& [name, coords] : alg.generators())
        gens[name] = coords;
    j["generators"] = gens;
    ordered_json brs = ordered_json::array();
    for (const auto& [key, vec] : alg.stored_brackets()) {
        ordered_json e;
        e["i"] = key.i;
        e["j"] = key.j;
        e["a"] = key.a;
        e["b"] = key.b;
        ordered_json out = ordered_json::array();
        for (int idx = 0; idx < (int)vec.size(); ++idx)
            if (vec[idx] != 0)
                out.push_back({idx, vec[idx]});
        e["out"] = out;
        brs.push_back(e);
    }
    j["brackets"] = brs;
    return j;
}

inline GradedLieAlgebra from_json(const ordered_json& j)
{
    if (!j.contains("p") || !j.contains("max_degree") || !j.contains("dims") ||
        !j.contains("brackets"))
        throw std::runtime_error("algebra schema: missing required field");
    const i64 p = j.at("p").get<i64>();
    modp::require_prime(p);
    const int max_degree = j.at("max_degree").get<int>();
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    GradedLieAlgebra alg(p, max_degree, std::move(dims));
    if (j.contains("q"))
        alg.set_q(j.at("q").get<i64>());
    if (j.contains("generators"))
        for (const auto& [name, coords] : j.at("generators").items())
            alg.set_generator(name, coords.get<FpVec>());
    for (const auto& e : j.at("brackets")) {
        const int i = e.at("i").get<int>();
        const int jj = e.at("j").get<int>();
        const int a = e.at("a").get<int>();
        const int b = e.at("b").get<int>();
        if (i > jj || (i == jj && a >= b))
            throw std::runtime_error("algebra schema: bracket entry not in i <= j canonical order");
        FpVec vec(alg.dim(i + jj), 0);
        for (const auto& pair : e.at("out")) {
            const int idx = pair.at(0).get<int>();
            const i64 c = pair.at(1).get<i64>();
            if (idx < 0 || idx >= (int)vec.size())
                throw std::runtime_error("algebra schema: bracket vector index exceeds dim(i+j)");
            if (c < 1 || c >= p)
                throw std::runtime_error("algebra schema: coefficient outside [1, p)");
            vec[idx] = c;
        }
        alg.set_bracket(i, jj, a, b, std::move(vec));
    }
    return alg;
}

inline void save(const GradedLieAlgebra& alg, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << to_json(alg).dump(1) << "\n";
}

/// Loads and re-validates the schema invariants; a full Jacobi audit is
/// optional because it is quadratic in the truncation window.
inline GradedLieAlgebra load(const std::string& path, bool audit_jacobi = false)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
    }
    GradedLieAlgebra alg = from_json(j);
    if (audit_jacobi && !jacobi_audit(alg, alg.max_degree()).empty())
        throw std::runtime_error("loaded algebra fails the Jacobi audit");
    return alg;
}

} // namespace diamondlab::liecore
