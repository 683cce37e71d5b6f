#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "veronese/bott.hpp"
#include "veronese/ext.hpp"
#include "veronese/multiplicities.hpp"

namespace veronese {

using json = nlohmann::json;

inline json window_to_json(const WeightWindow& w) {
    json out;
    out["n"] = w.n;
    out["l1max"] = w.lambda1_max;
    out["lnmin"] = w.lambdan_min;
    if (w.residue) {
        out["residue"] = json{{"j", w.residue->first}, {"d", w.residue->second}};
    } else {
        out["residue"] = nullptr;
    }
    return out;
}

/// Entries sorted by descending lexicographic weight; deterministic bytes
/// for a fixed input across runs and thread counts.
inline json to_json(const VirtualCharacter& vc) {
    json out;
    out["n"] = vc.n();
    json entries = json::array();
    for (auto it = vc.terms().rbegin(); it != vc.terms().rend(); ++it)
        entries.push_back(json{{"lambda", it->first}, {"mult", it->second}});
    out["entries"] = std::move(entries);
    if (vc.window()) out["window"] = window_to_json(*vc.window());
    return out;
}

inline json to_json(const MultiplicityTable& t) {
    json out = to_json(t.entries);
    out["kind"] = t.kind;
    out["n"] = t.n;
    out["d"] = t.d;
    out["j"] = t.j ? json(*t.j) : json(nullptr);
    return out;
}

inline json to_json(const BottOutcome& o) {
    json out;
    out["vanishing"] = o.vanishing;
    if (!o.vanishing) {
        out["l"] = o.degree;
        out["lambda"] = o.weight;
    }
    return out;
}

inline json to_json(const ExtTable& t) {
    json out;
    out["kind"] = "ext";
    out["n"] = t.n;
    out["d"] = t.d;
    out["mu"] = t.mu;
    out["window"] = window_to_json(t.window);
    json entries = json::array();
    // ascending degree, then descending lexicographic weight
    for (auto deg_it = t.entries.begin(); deg_it != t.entries.end();) {
        const Int degree = deg_it->first.first;
        auto range_end = deg_it;
        while (range_end != t.entries.end() && range_end->first.first == degree) ++range_end;
        std::vector<const std::pair<const std::pair<Int, IntVec>, Int>*> block;
        for (auto it = deg_it; it != range_end; ++it) block.push_back(&*it);
        for (auto it = block.rbegin(); it != block.rend(); ++it)
            entries.push_back(json{{"degree", (*it)->first.first},
                                   {"lambda", (*it)->first.second},
                                   {"mult", (*it)->second}});
        deg_it = range_end;
    }
    out["entries"] = std::move(entries);
    return out;
}

/// CSV with columns lambda_1..lambda_n,mult, mirroring the JSON entry order.
inline std::string to_csv(const VirtualCharacter& vc) {
    std::ostringstream os;
    for (Int i = 1; i <= vc.n(); ++i) os << "lambda_" << i << ',';
    os << "mult\n";
    for (auto it = vc.terms().rbegin(); it != vc.terms().rend(); ++it) {
        for (Int x : it->first) os << x << ',';
        os << it->second << '\n';
    }
    return os.str();
}

} // namespace veronese
