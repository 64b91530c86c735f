// mekr: command-line front end for the multiset Erdős–Ko–Rado toolkit.
//
// Exit codes: 0 all checks pass, 1 a checked claim failed, 2 usage error,
// 3 resource limit.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mekr/mekr.hpp"

namespace {

using mekr::json;

constexpr const char* kVersion = "1.0.0";

const CLI::Range kPositive(1, 1 << 20);

enum ExitCode { kPass = 0, kClaimFailed = 1, kUsage = 2, kLimit = 3 };

struct GlobalOptions {
    int threads = 1;
    std::string format = "json";
    std::string out;
    bool provenance = true;
};

struct Check {
    std::string name;
    bool passed;
};

/// What a subcommand hands back for rendering.
struct Outcome {
    json parameters = json::object();
    json results = json::object();
    std::vector<Check> checks;
    std::string raw;  // when set, written verbatim instead of a report
    bool limited = false;
};

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void render_text(const json& j, std::ostream& os, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            const std::string name = prefix.empty() ? key : prefix + "." + key;
            if (value.is_structured() && !(value.is_array() && !value.empty() && value.front().is_primitive())) {
                render_text(value, os, name);
            } else {
                os << name << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& value : j) {
            render_text(value, os, prefix + "[" + std::to_string(i++) + "]");
        }
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

int emit(const std::string& command, const Outcome& o, const GlobalOptions& g) {
    std::ostringstream body;
    bool pass = true;
    for (const auto& c : o.checks) {
        pass = pass && c.passed;
    }
    if (!o.raw.empty()) {
        body << o.raw;
    } else {
        json report = json::object();
        report["command"] = command;
        report["parameters"] = o.parameters;
        report["results"] = o.results;
        json checks = json::array();
        for (const auto& c : o.checks) {
            checks.push_back({{"name", c.name}, {"passed", c.passed}});
        }
        const char* status = !pass ? "FAIL" : o.limited ? "INCOMPLETE" : "PASS";
        report["summary"] = {{"status", status}, {"checks", checks}};
        if (g.provenance) {
            report["provenance"] = {{"tool", "mekr"}, {"version", kVersion}, {"timestamp", utc_timestamp()},
                                    {"threads", g.threads}};
        }
        if (g.format == "text") {
            render_text(report, body);
        } else {
            body << report.dump(2) << "\n";
        }
    }
    if (g.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(g.out);
        if (!(f << body.str())) {
            throw std::runtime_error("cannot write " + g.out);
        }
    }
    return !pass ? kClaimFailed : o.limited ? kLimit : kPass;
}

/// Parses "a", "a..b" or "a-b".
std::pair<int, int> parse_range(const std::string& s) {
    auto to_int = [&](const std::string& part) {
        std::size_t used = 0;
        const int v = std::stoi(part, &used);
        if (used != part.size()) {
            throw std::invalid_argument("bad range '" + s + "'");
        }
        return v;
    };
    for (const std::string sep : {"..", "-"}) {
        if (auto pos = s.find(sep); pos != std::string::npos && pos > 0) {
            const auto lo = to_int(s.substr(0, pos));
            const auto hi = to_int(s.substr(pos + sep.size()));
            if (lo > hi) {
                throw std::invalid_argument("empty range '" + s + "'");
            }
            return {lo, hi};
        }
    }
    const int v = to_int(s);
    return {v, v};
}

std::vector<int> parse_elements(const std::string& s) {
    std::istringstream is(s);
    std::vector<int> out;
    int x = 0;
    while (is >> x) {
        out.push_back(x);
    }
    if (!is.eof()) {
        throw std::invalid_argument("bad element list '" + s + "'");
    }
    return out;
}

mekr::Family read_family_file(const std::string& path, std::optional<int> m, std::optional<int> k) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open family file " + path);
    }
    return mekr::family_from_json(json::parse(f), m, k);
}

template <typename T>
std::optional<T> opt_if(bool set, T value) {
    return set ? std::optional<T>(value) : std::nullopt;
}

// ---------------------------------------------------------------------------

struct BoundArgs {
    int m = 0;
    int k = 0;
    int t = 1;
    std::string theorem = "auto";
};

Outcome cmd_bound(const BoundArgs& a) {
    Outcome o;
    o.parameters = {{"m", a.m}, {"k", a.k}, {"t", a.t}, {"theorem", a.theorem}};
    json bounds = json::array();
    const bool all = a.theorem == "all";
    const bool automatic = a.theorem == "auto";
    if (a.t == 1 && (all || automatic || a.theorem == "1")) {
        const auto b = mekr::theorem1_bound(a.m, a.k);
        if (!automatic || b.in_regime) {
            bounds.push_back(to_json(b));
        }
    }
    if (a.t == 1 && (all || automatic || a.theorem == "2")) {
        const auto b = mekr::theorem2_bound(a.m, a.k);
        if (!automatic || b.in_regime) {
            bounds.push_back(to_json(b));
        }
    }
    if (a.t > 1 || all || a.theorem == "conjecture") {
        bounds.push_back(to_json(mekr::conjecture_bound(a.m, a.k, a.t)));
    }
    if (bounds.empty()) {
        throw std::invalid_argument("unknown --theorem '" + a.theorem + "' (use auto, all, 1, 2, conjecture)");
    }
    o.results["bounds"] = bounds;
    return o;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
    std::optional<int> m;
    std::optional<int> n;
    int k = 0;
    int t = 1;
    std::string dimacs_in;
    double time_limit = 0;
    std::uint64_t node_limit = 0;
    std::size_t vertex_limit = mekr::default_solve_limit;
    bool seed = true;
};

mekr::SolveOptions solve_options(double time_limit, std::uint64_t node_limit, std::size_t vertex_limit) {
    mekr::SolveOptions opts;
    opts.time_limit_seconds = time_limit;
    opts.node_limit = node_limit;
    opts.vertex_limit = vertex_limit;
    return opts;
}

Outcome cmd_solve(const SolveArgs& a) {
    Outcome o;
    auto opts = solve_options(a.time_limit, a.node_limit, a.vertex_limit);
    if (!a.dimacs_in.empty()) {
        std::ifstream f(a.dimacs_in);
        if (!f) {
            throw std::invalid_argument("cannot open " + a.dimacs_in);
        }
        const auto g = mekr::read_dimacs(f, mekr::default_dense_limit);
        const auto r = mekr::max_independent_set(g, opts);
        json set = json::array();
        for (auto v : r.best) {
            set.push_back(v + 1);
        }
        o.parameters = {{"dimacs", a.dimacs_in}};
        o.results = {{"vertices", g.vertex_count()},
                     {"edges", g.edge_count()},
                     {"optimum", r.best.size()},
                     {"proven_optimal", r.proven_optimal},
                     {"upper_bound", r.upper_bound},
                     {"independent_set", set}};
        o.checks.push_back({"witness independent", g.is_independent(r.best)});
        o.limited = !r.proven_optimal;
        return o;
    }
    if (a.m.has_value() == a.n.has_value()) {
        throw std::invalid_argument("give exactly one of --m (multisets), --n (sets), --dimacs-in");
    }
    const auto spec = a.m ? mekr::GraphSpec::multiset(*a.m, a.k, a.t) : mekr::GraphSpec::set(*a.n, a.k, a.t);
    o.parameters = {{"spec", to_json(spec)}, {"time_limit", a.time_limit}, {"node_limit", a.node_limit}};

    std::optional<mekr::Family> known;
    if (a.seed && spec.kind == mekr::GraphKind::multiset) {
        known = mekr::best_known_family(spec.universe, spec.k, spec.t);
        opts.seed = mekr::ranks_of(spec, *known);
    }
    const auto r = mekr::max_family(spec, opts);
    o.results["solve"] = to_json(r);
    const auto verdict = mekr::verify_certificate({r.witness, r.optimum, spec.t, spec.kind});
    o.results["witness_certificate"] = to_json(verdict);
    if (known) {
        const auto kv = mekr::verify_certificate({*known, known->size(), spec.t, spec.kind});
        o.results["certified_lower_bound"] = {
            {"value", known->size()}, {"certificate", to_json(kv)}, {"family", mekr::family_to_json(*known)}};
        o.checks.push_back({"lower-bound certificate valid", kv.valid});
    }
    o.results["status"] = r.proven_optimal ? "optimal" : "budget exhausted (lower bound only)";
    o.limited = !r.proven_optimal;
    o.checks.push_back({"witness certificate valid", verdict.valid});
    return o;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    int m = 0;
    int k = 0;
    int t = 1;
    std::size_t cap = mekr::default_census_cap;
    double time_limit = 0;
    std::size_t vertex_limit = mekr::default_solve_limit;
};

Outcome cmd_verify(const VerifyArgs& a) {
    Outcome o;
    const auto spec = mekr::GraphSpec::multiset(a.m, a.k, a.t);
    o.parameters = {{"spec", to_json(spec)}, {"cap", a.cap}};
    auto opts = solve_options(a.time_limit, 0, a.vertex_limit);
    const auto best = mekr::max_family(spec, opts);
    o.results["solve"] = to_json(best);
    if (!best.proven_optimal) {
        o.limited = true;
        o.results["note"] = "optimum not proven within the time limit";
        return o;
    }
    const auto census = mekr::enumerate_maximum_families(spec, a.cap, opts);
    o.results["census"] = {{"count", census.families.size()},
                           {"complete", census.complete},
                           {"stars", census.count_if_star()}};
    json labels = json::array();
    for (const auto& c : census.classes) {
        labels.push_back(c.label());
    }
    o.results["census"]["labels"] = labels;
    if (!census.complete) {
        o.limited = true;
        o.results["note"] = "census cap reached; uniqueness cannot be decided";
        return o;
    }

    const bool all_stars = census.count_if_star() == census.families.size();
    const bool all_above = std::all_of(census.classes.begin(), census.classes.end(),
                                       [](const auto& c) { return c.above_half_structure; });
    o.checks.push_back({"witness certificate valid",
                        mekr::verify_certificate({best.witness, best.optimum, a.t}).valid});

    if (a.t == 1 && a.m >= a.k + 1) {
        const auto bound = mekr::theorem1_bound(a.m, a.k);
        o.results["bound"] = to_json(bound);
        o.checks.push_back({"optimum equals C(m+k-2,k-1)", bound.value == best.optimum});
        if (a.m > a.k + 1) {
            o.checks.push_back({"every maximum family is a star", all_stars});
            o.checks.push_back({"exactly m maximum families", census.families.size() == static_cast<std::size_t>(a.m)});
        } else {
            o.results["non_star_maxima"] = census.families.size() - census.count_if_star();
            o.results["uniqueness"] = "not claimed at m = k+1";
        }
    } else if (a.t == 1) {
        const auto bound = mekr::theorem2_bound(a.m, a.k);
        o.results["bound"] = to_json(bound);
        o.checks.push_back({"optimum equals the above-half bound", bound.value == best.optimum});
        if (a.m % 2 == 1) {
            o.checks.push_back({"unique maximum is M_(>m/2)",
                                census.families.size() == 1 && census.families[0] == mekr::above_half_family(a.m, a.k)});
        } else {
            o.checks.push_back({"every maximum is M_(>m/2) plus half of M_(m/2)", all_above});
        }
    } else {
        const auto bound = mekr::conjecture_bound(a.m, a.k, a.t);
        o.results["bound"] = to_json(bound);
        o.results["optimum_vs_conjecture"] = best.optimum > bound.value    ? "above"
                                             : best.optimum == bound.value ? "equal"
                                                                           : "below";
        if (bound.in_regime) {
            o.checks.push_back({"optimum at most C(m+k-t-1,k-t)", best.optimum <= bound.value});
            if (a.m > a.t * (a.k - a.t) + 2) {
                o.checks.push_back({"every maximum family is a t-star", all_stars});
            }
        }
    }
    return o;
}

// ---------------------------------------------------------------------------

struct ConjectureArgs {
    std::string m = "2..9";
    std::string k = "2..6";
    std::string t = "1..3";
    bool solve = false;
    double time_limit = 10;
    std::size_t vertex_limit = 2000;
};

Outcome cmd_conjecture(const ConjectureArgs& a) {
    Outcome o;
    o.parameters = {{"m", a.m}, {"k", a.k}, {"t", a.t}, {"solve", a.solve}};
    const auto [m0, m1] = parse_range(a.m);
    const auto [k0, k1] = parse_range(a.k);
    const auto [t0, t1] = parse_range(a.t);
    json rows = json::array();
    bool consistent = true;
    bool counts_agree = true;
    for (int t = std::max(t0, 1); t <= t1; ++t) {
        for (int k = std::max(k0, t + 1); k <= k1; ++k) {
            for (int m = std::max(m0, t + 2); m <= m1; ++m) {
                const auto bound = mekr::conjecture_bound(m, k, t);
                const auto frankl = mekr::frankl_plus_count(m, k, t);
                json row = {{"m", m},
                            {"k", k},
                            {"t", t},
                            {"conjecture_bound", mekr::count_to_json(bound.value)},
                            {"frankl_plus", mekr::count_to_json(frankl)},
                            {"in_regime", bound.in_regime},
                            {"boundary", m == t * (k - t) + 2}};
                row["relation"] = frankl > bound.value ? "frankl exceeds" : frankl == bound.value ? "equal" : "star wins";
                if (bound.in_regime && frankl > bound.value) {
                    consistent = false;
                }
                if (mekr::multichoose(m, k) <= 20000) {
                    const bool same = mekr::BigCount(mekr::frankl_plus_family(m, k, t).size()) == frankl;
                    row["enumeration_agrees"] = same;
                    counts_agree = counts_agree && same;
                }
                if (a.solve && mekr::multichoose(m, k) <= a.vertex_limit) {
                    auto opts = solve_options(a.time_limit, 0, a.vertex_limit);
                    const auto spec = mekr::GraphSpec::multiset(m, k, t);
                    opts.seed = mekr::ranks_of(spec, mekr::best_known_family(m, k, t));
                    const auto r = mekr::max_family(spec, opts);
                    row["solver"] = {{"best", r.optimum}, {"proven_optimal", r.proven_optimal}};
                    if (r.proven_optimal && bound.in_regime && r.optimum > bound.value) {
                        consistent = false;
                    }
                }
                rows.push_back(row);
            }
        }
    }
    o.results["rows"] = rows;
    o.checks.push_back({"no in-regime family beats the conjectured bound", consistent});
    o.checks.push_back({"closed-form Frankl count matches enumeration", counts_agree});
    return o;
}

// ---------------------------------------------------------------------------

struct HomArgs {
    int m = 0;
    int k = 0;
    int t = 1;
    bool search = false;
    std::uint64_t node_budget = 10'000'000;
    std::string dump_map;
};

Outcome cmd_homomorphism(const HomArgs& a) {
    Outcome o;
    o.parameters = {{"m", a.m}, {"k", a.k}, {"t", a.t}};
    const auto rep = mekr::check_homomorphism(a.m, a.k, a.t);
    o.results["phi"] = to_json(rep);
    o.checks.push_back({"phi is bijective", rep.bijective});
    o.checks.push_back({"support(phi(B)) = B ∩ [m]", rep.support_preserved});
    if (a.t == 1) {
        o.checks.push_back({"phi carries Kneser edges to multiset edges", rep.edge_preserving});
    }
    if (a.search) {
        const auto s = mekr::search_bijective_homomorphism(a.m, a.k, a.t, a.node_budget);
        o.results["search"] = {{"status", mekr::to_string(s.status)}, {"nodes", s.nodes}, {"mapping", s.mapping}};
    }
    if (!a.dump_map.empty()) {
        std::ofstream f(a.dump_map);
        for (auto [s, t] : mekr::phi_table(a.m, a.k)) {
            f << s << " " << t << "\n";
        }
        if (!f) {
            throw std::runtime_error("cannot write " + a.dump_map);
        }
        o.results["map_file"] = a.dump_map;
    }
    return o;
}

// ---------------------------------------------------------------------------

struct ExportArgs {
    bool set_kind = false;
    bool multiset_kind = false;
    std::optional<int> m;
    std::optional<int> n;
    int k = 0;
    int t = 1;
    std::string dimacs;
    std::string edge_list;
    std::string manifest;
};

Outcome cmd_export(const ExportArgs& a) {
    Outcome o;
    if (a.set_kind == a.multiset_kind) {
        throw std::invalid_argument("choose one of --set or --multiset");
    }
    const int universe = a.set_kind ? a.n.value_or(a.m.value_or(0)) : a.m.value_or(a.n.value_or(0));
    const auto spec = a.set_kind ? mekr::GraphSpec::set(universe, a.k, a.t)
                                 : mekr::GraphSpec::multiset(universe, a.k, a.t);
    if (a.dimacs.empty() == a.edge_list.empty()) {
        throw std::invalid_argument("give exactly one of --dimacs <path> or --edge-list <path>");
    }
    const auto g = mekr::build_graph(spec);
    const std::string path = a.dimacs.empty() ? a.edge_list : a.dimacs;
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot write " + path);
    }
    if (!a.dimacs.empty()) {
        mekr::write_dimacs(g, f);
    } else {
        mekr::write_edge_list(g, f);
    }
    o.parameters = {{"spec", to_json(spec)}, {"format", a.dimacs.empty() ? "edge_list" : "dimacs"}};
    o.results = {{"path", path}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    if (!a.manifest.empty()) {
        std::ofstream mf(a.manifest);
        mf << mekr::vertex_manifest(spec).dump(2) << "\n";
        if (!mf) {
            throw std::runtime_error("cannot write " + a.manifest);
        }
        o.results["manifest"] = a.manifest;
    }
    return o;
}

// ---------------------------------------------------------------------------

struct CompressArgs {
    std::string in;
    std::optional<int> m;
    std::optional<int> k;
};

Outcome cmd_compress(const CompressArgs& a) {
    Outcome o;
    const auto f = read_family_file(a.in, a.m, a.k);
    o.parameters = {{"in", a.in}, {"m", f.universe()}, {"k", f.cardinality()}, {"input_size", f.size()}};
    const auto res = mekr::compress_to_fixpoint(f);
    json steps = json::array();
    for (const auto& s : res.steps) {
        steps.push_back(to_json(s));
    }
    o.results = {{"size", res.family.size()}, {"steps", steps}, {"family", mekr::family_to_json(res.family)}};
    o.checks.push_back({"result is intersecting", mekr::is_t_intersecting_family(res.family, 1)});
    o.checks.push_back({"size did not decrease", res.family.size() >= f.size()});
    return o;
}

// ---------------------------------------------------------------------------

struct CertifyArgs {
    std::string in;
    int t = 1;
    std::optional<std::size_t> claimed;
    bool maximal = false;
    bool set_kind = false;
    std::optional<int> m;
    std::optional<int> k;
};

Outcome cmd_certify(const CertifyArgs& a) {
    Outcome o;
    const auto f = read_family_file(a.in, a.m, a.k);
    const std::size_t claimed = a.claimed.value_or(f.size());
    o.parameters = {{"in", a.in}, {"t", a.t}, {"claimed_size", claimed}, {"maximal", a.maximal}};
    const auto v = mekr::verify_certificate(
        {f, claimed, a.t, a.set_kind ? mekr::GraphKind::set : mekr::GraphKind::multiset, a.maximal});
    o.results = to_json(v);
    o.checks.push_back({"certificate valid", v.valid});
    return o;
}

// ---------------------------------------------------------------------------

struct FamilyArgs {
    std::string construction;
    int m = 0;
    int k = 0;
    int x = 1;
    int j = 1;
    int t = 1;
    std::string fixed;
    std::string frankl_set;
    bool elements = false;
};

Outcome cmd_family(const FamilyArgs& a) {
    std::optional<mekr::Family> f;
    if (a.construction == "star") {
        f = mekr::star_family(a.m, a.k, a.x);
    } else if (a.construction == "t-star") {
        const auto fixed = parse_elements(a.fixed);
        f = mekr::t_star_family(a.m, a.k, mekr::Multiset::from_elements(a.m, std::span<const int>(fixed)));
    } else if (a.construction == "level") {
        f = mekr::level_family(a.m, a.k, a.j);
    } else if (a.construction == "above-half") {
        f = mekr::above_half_family(a.m, a.k);
    } else if (a.construction == "half-selection") {
        f = mekr::half_selection_family(a.m, a.k);
    } else if (a.construction == "theorem2-extremal") {
        f = mekr::above_half_family(a.m, a.k);
        if (a.m % 2 == 0) {
            f = f->united_with(mekr::half_selection_family(a.m, a.k));
        }
    } else if (a.construction == "frankl-plus") {
        mekr::Support F = a.frankl_set.empty() ? mekr::default_frankl_set(a.m, a.t)
                                                : mekr::Support{a.m, parse_elements(a.frankl_set)};
        f = mekr::frankl_plus_family(a.m, a.k, a.t, F);
    } else {
        throw std::invalid_argument("unknown construction '" + a.construction + "'");
    }
    Outcome o;
    o.raw = a.elements ? mekr::family_to_text(*f) : mekr::family_to_json_text(*f);
    return o;
}

struct MapArgs {
    int m = 0;
    int k = 0;
};

Outcome cmd_map(const MapArgs& a) {
    Outcome o;
    std::ostringstream os;
    for (auto [s, t] : mekr::phi_table(a.m, a.k)) {
        os << s << " " << t << "\n";
    }
    o.raw = os.str();
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiset Erdős–Ko–Rado verification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    app.add_option("--threads", g.threads, "Worker threads (results do not depend on this)")->check(kPositive);
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", g.out, "Write the report to this path instead of stdout");
    app.add_flag("!--no-provenance", g.provenance, "Omit the provenance block");

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "Closed-form bounds and regime flags");
    bound_cmd->add_option("--m", bound.m)->required()->check(kPositive);
    bound_cmd->add_option("--k", bound.k)->required()->check(kPositive);
    bound_cmd->add_option("--t", bound.t)->check(kPositive);
    bound_cmd->add_option("--theorem", bound.theorem, "auto, all, 1, 2 or conjecture");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Solve M(m,k,t) exactly and check bound and uniqueness claims");
    verify_cmd->add_option("--m", verify.m)->required()->check(kPositive);
    verify_cmd->add_option("--k", verify.k)->required()->check(kPositive);
    verify_cmd->add_option("--t", verify.t)->check(kPositive);
    verify_cmd->add_option("--cap", verify.cap, "Maximum families to enumerate");
    verify_cmd->add_option("--time-limit", verify.time_limit, "Seconds per search (0 = none)");
    verify_cmd->add_option("--vertex-limit", verify.vertex_limit);

    ConjectureArgs conj;
    auto* conj_cmd = app.add_subcommand("conjecture", "Tabulate the t-intersecting bound against the Frankl-type family");
    conj_cmd->add_option("--m", conj.m, "Range such as 7..9");
    conj_cmd->add_option("--k", conj.k, "Range such as 5");
    conj_cmd->add_option("--t", conj.t, "Range such as 1..3");
    conj_cmd->add_flag("--solve", conj.solve, "Also run the exact solver where small enough");
    conj_cmd->add_option("--time-limit", conj.time_limit);
    conj_cmd->add_option("--vertex-limit", conj.vertex_limit);

    HomArgs hom;
    auto* hom_cmd = app.add_subcommand("homomorphism", "Check the subset-to-multiset map");
    hom_cmd->add_option("--m", hom.m)->required()->check(kPositive);
    hom_cmd->add_option("--k", hom.k)->required()->check(kPositive);
    hom_cmd->add_option("--t", hom.t)->check(kPositive);
    hom_cmd->add_flag("--search", hom.search, "Search for any bijective homomorphism (tiny cases)");
    hom_cmd->add_option("--node-budget", hom.node_budget);
    hom_cmd->add_option("--dump-map", hom.dump_map, "Write rank pairs to this path");

    ExportArgs exp;
    int exp_m = 0;
    int exp_n = 0;
    auto* exp_cmd = app.add_subcommand("export", "Write K(n,k,t) or M(m,k,t) for external solvers");
    exp_cmd->add_flag("--set", exp.set_kind);
    exp_cmd->add_flag("--multiset", exp.multiset_kind);
    auto* exp_m_opt = exp_cmd->add_option("--m", exp_m)->check(kPositive);
    auto* exp_n_opt = exp_cmd->add_option("--n", exp_n)->check(kPositive);
    exp_cmd->add_option("--k", exp.k)->required()->check(kPositive);
    exp_cmd->add_option("--t", exp.t)->check(kPositive);
    exp_cmd->add_option("--dimacs", exp.dimacs);
    exp_cmd->add_option("--edge-list", exp.edge_list);
    exp_cmd->add_option("--manifest", exp.manifest, "Sidecar JSON mapping rank to elements");

    CompressArgs comp;
    int comp_m = 0;
    int comp_k = 0;
    auto* comp_cmd = app.add_subcommand("compress", "Apply the support exchange until every support is >= m/2");
    comp_cmd->add_option("--in", comp.in)->required();
    auto* comp_m_opt = comp_cmd->add_option("--m", comp_m);
    auto* comp_k_opt = comp_cmd->add_option("--k", comp_k);

    SolveArgs solve;
    int solve_m = 0;
    int solve_n = 0;
    auto* solve_cmd = app.add_subcommand("solve", "Maximum t-intersecting family, or MIS of a DIMACS graph");
    auto* solve_m_opt = solve_cmd->add_option("--m", solve_m)->check(kPositive);
    auto* solve_n_opt = solve_cmd->add_option("--n", solve_n)->check(kPositive);
    solve_cmd->add_option("--k", solve.k)->check(kPositive);
    solve_cmd->add_option("--t", solve.t)->check(kPositive);
    solve_cmd->add_option("--dimacs-in", solve.dimacs_in);
    solve_cmd->add_option("--time-limit", solve.time_limit);
    solve_cmd->add_option("--node-limit", solve.node_limit);
    solve_cmd->add_option("--vertex-limit", solve.vertex_limit);
    solve_cmd->add_flag("!--no-seed", solve.seed, "Do not start from the best known construction");

    CertifyArgs cert;
    std::size_t cert_claimed = 0;
    int cert_m = 0;
    int cert_k = 0;
    auto* cert_cmd = app.add_subcommand("certify", "Independently re-check a family file");
    cert_cmd->add_option("--in", cert.in)->required();
    cert_cmd->add_option("--t", cert.t)->check(kPositive);
    auto* cert_claimed_opt = cert_cmd->add_option("--claimed-size", cert_claimed);
    cert_cmd->add_flag("--maximal", cert.maximal, "Also check that no object can be added");
    cert_cmd->add_flag("--set", cert.set_kind, "Members must be sets");
    auto* cert_m_opt = cert_cmd->add_option("--m", cert_m);
    auto* cert_k_opt = cert_cmd->add_option("--k", cert_k);

    FamilyArgs fam;
    auto* fam_cmd = app.add_subcommand("family", "Print a construction as JSON (or element lists)");
    fam_cmd->add_option("--construction", fam.construction,
                        "star, t-star, level, above-half, half-selection, theorem2-extremal, frankl-plus")
        ->required();
    fam_cmd->add_option("--m", fam.m)->required()->check(kPositive);
    fam_cmd->add_option("--k", fam.k)->required()->check(kPositive);
    fam_cmd->add_option("--x", fam.x, "Fixed element for star");
    fam_cmd->add_option("--j", fam.j, "Support size for level");
    fam_cmd->add_option("--t", fam.t);
    fam_cmd->add_option("--fixed", fam.fixed, "Fixed multiset for t-star, e.g. \"1 2\"");
    fam_cmd->add_option("--F", fam.frankl_set, "The (t+2)-set for frankl-plus, e.g. \"1 2 3 4\"");
    fam_cmd->add_flag("--elements", fam.elements, "Element-list text instead of JSON");

    MapArgs map;
    auto* map_cmd = app.add_subcommand("map", "Dump the subset-to-multiset map as rank pairs");
    map_cmd->add_option("--m", map.m)->required()->check(kPositive);
    map_cmd->add_option("--k", map.k)->required()->check(kPositive);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    std::string command;
    try {
        Outcome o;
        if (*bound_cmd) {
            command = "bound";
            o = cmd_bound(bound);
        } else if (*verify_cmd) {
            command = "verify";
            o = cmd_verify(verify);
        } else if (*conj_cmd) {
            command = "conjecture";
            o = cmd_conjecture(conj);
        } else if (*hom_cmd) {
            command = "homomorphism";
            o = cmd_homomorphism(hom);
        } else if (*exp_cmd) {
            command = "export";
            exp.m = opt_if(exp_m_opt->count() > 0, exp_m);
            exp.n = opt_if(exp_n_opt->count() > 0, exp_n);
            o = cmd_export(exp);
        } else if (*comp_cmd) {
            command = "compress";
            comp.m = opt_if(comp_m_opt->count() > 0, comp_m);
            comp.k = opt_if(comp_k_opt->count() > 0, comp_k);
            o = cmd_compress(comp);
        } else if (*solve_cmd) {
            command = "solve";
            solve.m = opt_if(solve_m_opt->count() > 0, solve_m);
            solve.n = opt_if(solve_n_opt->count() > 0, solve_n);
            if (solve.dimacs_in.empty() && solve.k == 0) {
                throw std::invalid_argument("--k is required unless --dimacs-in is given");
            }
            o = cmd_solve(solve);
        } else if (*cert_cmd) {
            command = "certify";
            cert.claimed = opt_if(cert_claimed_opt->count() > 0, cert_claimed);
            cert.m = opt_if(cert_m_opt->count() > 0, cert_m);
            cert.k = opt_if(cert_k_opt->count() > 0, cert_k);
            o = cmd_certify(cert);
        } else if (*fam_cmd) {
            command = "family";
            o = cmd_family(fam);
        } else if (*map_cmd) {
            command = "map";
            o = cmd_map(map);
        }
        return emit(command, o, g);
    } catch (const mekr::limit_exceeded& e) {
        std::cerr << "mekr " << command << ": resource limit: " << e.what() << "\n";
        return kLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "mekr " << command << ": " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "mekr " << command << ": " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "mekr " << command << ": " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "mekr " << command << ": bad JSON: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "mekr " << command << ": " << e.what() << "\n";
        return kLimit + 1;
    }
}
