#ifndef MEKR_IO_HPP
#define MEKR_IO_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "mekr/bijection.hpp"
#include "mekr/combinatorics.hpp"
#include "mekr/compression.hpp"
#include "mekr/families.hpp"
#include "mekr/graph.hpp"
#include "mekr/multiset.hpp"
#include "mekr/solver.hpp"

namespace mekr {

using json = nlohmann::ordered_json;

/// Counts that fit in 64 bits become JSON numbers, larger ones decimal strings.
inline json count_to_json(const BigCount& c) {
    if (auto v = to_u64(c)) {
        return *v;
    }
    return c.str();
}

// Family serialisation --------------------------------------------------------

/// JSON array of length-m multiplicity vectors, in canonical order.
inline json family_to_json(const Family& f) {
    json arr = json::array();
    for (const auto& a : f) {
        arr.push_back(std::vector<int>(a.counts().begin(), a.counts().end()));
    }
    return arr;
}

/// Compact one-line form used by golden files.
inline std::string family_to_json_text(const Family& f) { return family_to_json(f).dump() + "\n"; }

/**
 * Reads a JSON array of multiplicity vectors. m and k are taken from the
 * first member unless given; an empty array needs both.
 */
inline Family family_from_json(const json& j, std::optional<int> m = std::nullopt,
                               std::optional<int> k = std::nullopt) {
    if (!j.is_array()) {
        throw std::invalid_argument("family JSON must be an array of count vectors");
    }
    std::vector<Multiset> members;
    for (const auto& row : j) {
        if (!row.is_array()) {
            throw std::invalid_argument("family JSON member must be an array of counts");
        }
        members.emplace_back(row.get<std::vector<int>>());
    }
    if (!m && !members.empty()) {
        m = members.front().universe();
    }
    if (!k && !members.empty()) {
        k = members.front().cardinality();
    }
    if (!m || !k) {
        throw std::invalid_argument("empty family JSON needs explicit m and k");
    }
    return Family(*m, *k, std::move(members));
}

/// One member per line as whitespace-separated elements, e.g. "1 2 2 4".
inline std::string family_to_text(const Family& f) {
    std::string out;
    for (const auto& a : f) {
        out += a.to_string();
        out += '\n';
    }
    return out;
}

inline Family family_from_text(std::istream& is, int m, int k) {
    std::vector<Multiset> members;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<int> elems;
        int x = 0;
        while (ls >> x) {
            elems.push_back(x);
        }
        if (!ls.eof()) {
            throw std::invalid_argument("family text: non-integer token in line '" + line + "'");
        }
        if (!elems.empty()) {
            members.push_back(Multiset::from_elements(m, std::span<const int>(elems)));
        }
    }
    return Family(m, k, std::move(members));
}

// Reports -------------------------------------------------------------------------

inline json to_json(const Multiset& a) { return std::vector<int>(a.counts().begin(), a.counts().end()); }

inline json to_json(const KSubset& s) { return s.elements; }

inline json to_json(const GraphSpec& s) {
    return {{"kind", to_string(s.kind)}, {"universe", s.universe}, {"k", s.k}, {"t", s.t}};
}

inline json to_json(const BoundReport& b) {
    return {{"formula", b.formula_name}, {"m", b.m},        {"k", b.k}, {"t", b.t}, {"value", count_to_json(b.value)},
            {"regime", b.regime},        {"in_regime", b.in_regime}};
}

inline json to_json(const ExchangeTrace& tr) {
    return {{"chosen", tr.chosen.elements()},
            {"support_size", tr.support_size},
            {"removed", tr.removed},
            {"added", tr.added},
            {"net_gain", tr.net_gain()}};
}

inline json to_json(const HomomorphismReport& r) {
    json j = {{"m", r.m},
              {"k", r.k},
              {"t", r.t},
              {"n", r.m + r.k - 1},
              {"vertex_count", r.vertex_count},
              {"bijective", r.bijective},
              {"support_preserved", r.support_preserved},
              {"edge_preserving", r.edge_preserving},
              {"edges_checked", r.edges_checked},
              {"edge_failures", r.edge_failures}};
    if (r.counterexample) {
        j["counterexample"] = {{"first", r.counterexample->first.elements},
                               {"second", r.counterexample->second.elements},
                               {"first_image", r.counterexample->first_image.elements()},
                               {"second_image", r.counterexample->second_image.elements()}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

/// Diagnostics (nodes, timing) are excluded so reports stay reproducible.
inline json to_json(const SolveResult& r) {
    return {{"spec", to_json(r.spec)},
            {"optimum", r.optimum},
            {"proven_optimal", r.proven_optimal},
            {"upper_bound", r.upper_bound},
            {"witness", family_to_json(r.witness)}};
}

inline json to_json(const FamilyClassification& c) {
    return {{"label", c.label()}, {"star", c.star}, {"common", c.common}, {"above_half_structure", c.above_half_structure}};
}

inline json to_json(const MaximumCensus& c) {
    json fams = json::array();
    for (std::size_t i = 0; i < c.families.size(); ++i) {
        fams.push_back({{"class", to_json(c.classes[i])}, {"members", family_to_json(c.families[i])}});
    }
    return {{"spec", to_json(c.spec)},
            {"optimum", c.optimum},
            {"complete", c.complete},
            {"count", c.families.size()},
            {"stars", c.count_if_star()},
            {"families", fams}};
}

inline json to_json(const CertificateVerdict& v) {
    json j = {{"valid", v.valid}, {"reason", v.reason}};
    if (v.violating_pair) {
        j["violating_pair"] = {v.violating_pair->first.elements(), v.violating_pair->second.elements()};
    }
    if (v.extension) {
        j["extension"] = v.extension->elements();
    }
    return j;
}

/// Sidecar manifest mapping vertex rank to its element list.
inline json vertex_manifest(const GraphSpec& spec, std::size_t limit = default_dense_limit) {
    json vs = json::array();
    const auto all = vertices(spec, limit);
    for (std::size_t r = 0; r < all.size(); ++r) {
        vs.push_back({{"rank", r}, {"elements", all[r].elements()}});
    }
    return {{"spec", to_json(spec)}, {"vertices", vs}};
}

}  // namespace mekr

#endif
