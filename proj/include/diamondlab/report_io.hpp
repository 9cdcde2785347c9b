#pragma once

// JSON and fixed-width table views of an AnalysisReport. Arrays are ordered
// by degree and key order is fixed, so identical inputs give bit-identical
// reports.

#include "diamondlab/diamond.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace diamondlab::diamond {

using ordered_json = nlohmann::ordered_json;

inline ordered_json type_to_json(const DiamondType& t)
{
    switch (t.kind) {
    case DiamondType::Kind::finite:
        return ordered_json{{"finite", t.value}};
    case DiamondType::Kind::infinity:
        return "infinity";
    case DiamondType::Kind::fake0:
        return "fake0";
    case DiamondType::Kind::fake1:
        return "fake1";
    default:
        return nullptr;
    }
}

inline ordered_json report_to_json(const AnalysisReport& rep, i64 p)
{
    ordered_json j;
    j["q"] = rep.q;
    j["x"] = rep.x;
    j["y"] = rep.y;
    ordered_json comps = ordered_json::array();
    for (const auto& r : rep.components) {
        ordered_json c;
        c["m"] = r.degree;
        c["dim"] = r.dim;
        switch (r.cls) {
        case ComponentClass::first:
            c["class"] = "first";
            break;
        case ComponentClass::chain:
            c["class"] = "chain";
            break;
        case ComponentClass::genuine:
            c["class"] = "genuine";
            break;
        case ComponentClass::fake:
            c["class"] = "fake";
            break;
        }
        if (r.type.kind != DiamondType::Kind::none) {
            c["type"] = type_to_json(r.type);
            if (r.type.kind == DiamondType::Kind::finite && r.type.value == p - 1)
                c["note"] = "= -1";
        }
        if (r.alternate_degree) {
            ordered_json alt;
            alt["m"] = *r.alternate_degree;
            alt["type"] = type_to_json(r.alternate_type);
            c["alternate"] = alt;
        }
        comps.push_back(c);
    }
    j["components"] = comps;
    j["distances"] = rep.distances;
    ordered_json runs = ordered_json::array();
    for (const auto& r : rep.runs)
        runs.push_back(ordered_json{{"start", r.start}, {"length", r.length}});
    j["runs"] = runs;
    ordered_json viols = ordered_json::array();
    for (const auto& v : rep.violations)
        viols.push_back(ordered_json{{"m", v.degree}, {"what", v.what}});
    j["violations"] = viols;
    return j;
}

inline std::string type_to_text(const DiamondType& t, i64 p)
{
    switch (t.kind) {
    case DiamondType::Kind::finite:
        if (t.value == p - 1)
            return std::to_string(t.value) + " (= -1)";
        return std::to_string(t.value);
    case DiamondType::Kind::infinity:
        return "infinity";
    case DiamondType::Kind::fake0:
        return "fake0";
    case DiamondType::Kind::fake1:
        return "fake1";
    default:
        return "-";
    }
}

/// degree | dim | class | type | distance-to-previous, one row per degree.
inline std::string render_table(const AnalysisReport& rep, i64 p)
{
    std::ostringstream out;
    out << std::left << std::setw(7) << "degree" << " | " << std::setw(3) << "dim"
        << " | " << std::setw(8) << "class" << " | " << std::setw(18) << "type"
        << " | dist\n";
    int prev_diamond = -1;
    for (const auto& r : rep.components) {
        std::string cls;
        switch (r.cls) {
        case ComponentClass::first:
            cls = "first";
            break;
        case ComponentClass::chain:
            cls = "chain";
            break;
        case ComponentClass::genuine:
            cls = "genuine";
            break;
        case ComponentClass::fake:
            cls = "fake";
            break;
        }
        std::string type = type_to_text(r.type, p);
        if (r.alternate_degree)
            type += " (alt: " + type_to_text(r.alternate_type, p) + "@" +
                    std::to_string(*r.alternate_degree) + ")";
        std::string dist = "-";
        if (r.is_diamond()) {
            if (prev_diamond > 0)
                dist = std::to_string(r.degree - prev_diamond);
            prev_diamond = r.degree;
        }
        out << std::left << std::setw(7) << r.degree << " | " << std::setw(3)
            << r.dim << " | " << std::setw(8) << cls << " | " << std::setw(18)
            << type << " | " << dist << "\n";
    }
    return out.str();
}

} // namespace diamondlab::diamond
