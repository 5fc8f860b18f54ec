#include "excol/report.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace excol {

std::string rational_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Json RunReport::to_json(const Graph* g) const {
    Json doc = Json::object();
    doc["command"] = command;
    doc["verdict"] = verdict;
    if (coloring.has_value()) {
        if (g != nullptr && !coloring->proper_total(*g))
            throw InternalError("report: coloring failed re-verification");
        Json arr = Json::array();
        for (int v = 0; v < (g != nullptr ? g->vertex_count()
                                          : static_cast<int>(coloring->color_of.size()));
             ++v)
            arr.push_back(coloring->color(v));
        doc["coloring"] = arr;
    } else {
        doc["coloring"] = nullptr;
    }
    Json counters = Json::object();
    counters["lattice_entries"] = lattice_entries;
    counters["oracle_calls"] = oracle_calls;
    counters["attempts"] = attempts;
    doc["counters"] = counters;
    doc["wall_ms"] = wall_ms;
    doc["seed"] = seed;
    doc["parameters"] = parameters;
    return doc;
}

}  // namespace excol
