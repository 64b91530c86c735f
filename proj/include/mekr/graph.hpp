#ifndef MEKR_GRAPH_HPP
#define MEKR_GRAPH_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mekr/bitset.hpp"
#include "mekr/combinatorics.hpp"
#include "mekr/multiset.hpp"

namespace mekr {

/// Thrown when an instance exceeds a configured size or search budget.
class limit_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GraphKind { set, multiset };

inline std::string to_string(GraphKind kind) { return kind == GraphKind::set ? "set" : "multiset"; }

/**
 * K(n,k,t) (kind set, universe n) or M(m,k,t) (kind multiset, universe m).
 * Two vertices are adjacent iff they meet in fewer than t elements; t = 1
 * gives the Kneser graph and its multiset analogue.
 */
struct GraphSpec {
    GraphKind kind = GraphKind::multiset;
    int universe = 1;
    int k = 1;
    int t = 1;

    static GraphSpec multiset(int m, int k, int t = 1) { return checked({GraphKind::multiset, m, k, t}); }
    static GraphSpec set(int n, int k, int t = 1) { return checked({GraphKind::set, n, k, t}); }

    static GraphSpec checked(GraphSpec s) {
        if (s.universe < 1 || s.k < 1) {
            throw std::invalid_argument("graph spec needs universe >= 1 and k >= 1");
        }
        if (s.t < 1 || s.t > s.k) {
            throw std::invalid_argument("graph spec needs 1 <= t <= k");
        }
        if (s.kind == GraphKind::set && s.k > s.universe) {
            throw std::invalid_argument("set graph spec needs k <= n");
        }
        return s;
    }

    std::string name() const {
        std::ostringstream os;
        os << (kind == GraphKind::set ? "K(" : "M(") << universe << "," << k << "," << t << ")";
        return os.str();
    }

    bool operator==(const GraphSpec&) const = default;
};

inline BigCount vertex_count(const GraphSpec& spec) {
    return spec.kind == GraphKind::set ? binomial(spec.universe, spec.k) : multichoose(spec.universe, spec.k);
}

/// Vertex with the given rank, as a multiset (0/1 counts for the set kind).
inline Multiset vertex(const GraphSpec& spec, Rank r) {
    if (spec.kind == GraphKind::set) {
        return unrank_subset(r, spec.universe, spec.k).as_multiset();
    }
    return unrank_multiset(r, spec.universe, spec.k);
}

inline Rank rank_of(const GraphSpec& spec, const Multiset& a) {
    if (a.universe() != spec.universe || a.cardinality() != spec.k) {
        throw std::invalid_argument("rank_of: object does not belong to " + spec.name());
    }
    if (spec.kind == GraphKind::set) {
        return rank_subset(KSubset{spec.universe, a.elements()});
    }
    return rank_multiset(a);
}

/// Lazy adjacency oracle. Irreflexive: adjacent(spec, u, u) is false.
inline bool adjacent(const GraphSpec& spec, Rank u, Rank v) {
    const auto total = to_u64(vertex_count(spec));
    if (!total || u >= *total || v >= *total) {
        throw std::out_of_range("adjacent: vertex outside " + spec.name());
    }
    if (u == v) {
        return false;
    }
    return intersection_size(vertex(spec, u), vertex(spec, v)) < spec.t;
}

/// Dense symmetric adjacency, one neighbour bitset per vertex.
class AdjacencyGraph {
public:
    AdjacencyGraph() = default;
    explicit AdjacencyGraph(std::size_t n) : rows_(n, Bitset(n)) {}

    std::size_t vertex_count() const { return rows_.size(); }

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) {
            throw std::invalid_argument("self-loops are not allowed");
        }
        if (!rows_[u].test(v)) {
            rows_[u].set(v);
            rows_[v].set(u);
            ++edges_;
        }
    }

    bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    const Bitset& neighbors(std::size_t v) const { return rows_[v]; }
    std::size_t degree(std::size_t v) const { return rows_[v].count(); }
    std::size_t edge_count() const { return edges_; }

    /// Edges (u, v) with u < v, in order of u then v.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        out.reserve(edges_);
        for (std::size_t u = 0; u < rows_.size(); ++u) {
            for (auto v = rows_[u].next(u + 1); v != Bitset::npos; v = rows_[u].next(v + 1)) {
                out.emplace_back(u, v);
            }
        }
        return out;
    }

    bool is_independent(const std::vector<std::size_t>& vs) const {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (vs[i] == vs[j] || adjacent(vs[i], vs[j])) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    std::vector<Bitset> rows_;
    std::size_t edges_ = 0;
};

inline constexpr std::size_t default_dense_limit = 50'000;

/// All vertices of the spec in rank order.
inline std::vector<Multiset> vertices(const GraphSpec& spec, std::size_t limit = default_dense_limit) {
    const auto total = to_u64(vertex_count(spec));
    if (!total || *total > limit) {
        throw limit_exceeded(spec.name() + " has " + to_string(vertex_count(spec)) +
                             " vertices, above the dense limit of " + std::to_string(limit) +
                             "; use the lazy adjacency oracle or the export path");
    }
    std::vector<Multiset> out;
    out.reserve(static_cast<std::size_t>(*total));
    for (Rank r = 0; r < *total; ++r) {
        out.push_back(vertex(spec, r));
    }
    return out;
}

inline AdjacencyGraph build_graph(const GraphSpec& spec, std::size_t limit = default_dense_limit) {
    const auto vs = vertices(spec, limit);
    AdjacencyGraph g(vs.size());
    for (std::size_t u = 0; u < vs.size(); ++u) {
        for (std::size_t v = u + 1; v < vs.size(); ++v) {
            if (intersection_size(vs[u], vs[v]) < spec.t) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

enum class ExportFormat { dimacs, edge_list };

/// "p edge V E" then "e u v" with 1-based vertices, u < v.
inline void write_dimacs(const AdjacencyGraph& g, std::ostream& os) {
    os << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) {
        os << "e " << u + 1 << " " << v + 1 << "\n";
    }
    if (!os) {
        throw std::runtime_error("write_dimacs: output stream failure");
    }
}

/// "u v" per line, 0-based, u < v.
inline void write_edge_list(const AdjacencyGraph& g, std::ostream& os) {
    for (auto [u, v] : g.edges()) {
        os << u << " " << v << "\n";
    }
    if (!os) {
        throw std::runtime_error("write_edge_list: output stream failure");
    }
}

inline void export_graph(const GraphSpec& spec, ExportFormat format, std::ostream& os,
                         std::size_t limit = default_dense_limit) {
    const auto g = build_graph(spec, limit);
    if (format == ExportFormat::dimacs) {
        write_dimacs(g, os);
    } else {
        write_edge_list(g, os);
    }
}

/// Parses DIMACS edge format ("c" comments, one "p edge" line, "e u v" lines).
inline AdjacencyGraph read_dimacs(std::istream& is, std::size_t limit = default_dense_limit) {
    AdjacencyGraph g;
    bool have_header = false;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("DIMACS line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") {
            continue;
        }
        if (tag == "p") {
            std::string fmt;
            std::size_t n = 0;
            std::size_t e = 0;
            if (have_header || !(ls >> fmt >> n >> e) || (fmt != "edge" && fmt != "col")) {
                fail("malformed problem line");
            }
            if (n > limit) {
                throw limit_exceeded("DIMACS graph has " + std::to_string(n) + " vertices, above the limit of " +
                                     std::to_string(limit));
            }
            g = AdjacencyGraph(n);
            have_header = true;
        } else if (tag == "e") {
            std::size_t u = 0;
            std::size_t v = 0;
            if (!have_header || !(ls >> u >> v) || u < 1 || v < 1 || u > g.vertex_count() ||
                v > g.vertex_count()) {
                fail("malformed edge line");
            }
            if (u != v) {
                g.add_edge(u - 1, v - 1);
            }
        } else {
            fail("unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) {
        throw std::runtime_error("DIMACS input has no problem line");
    }
    return g;
}

}  // namespace mekr

#endif
