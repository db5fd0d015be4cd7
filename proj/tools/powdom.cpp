// powdom: power-domination analysis CLI.
//
// Subcommands: analyze, family, batch, audit, zf. Exit codes: 0 success,
// 1 parse error, 2 size limit, 3 invariant/bound violation, 4 family
// verification mismatch.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "powdom/bounds.hpp"
#include "powdom/enumerate.hpp"
#include "powdom/families.hpp"
#include "powdom/graph_io.hpp"
#include "powdom/json_io.hpp"
#include "powdom/propagation.hpp"
#include "powdom/solver.hpp"
#include "powdom/zero_forcing.hpp"

namespace {

using namespace powdom;
using nlohmann::ordered_json;

constexpr int kExitParse = 1;
constexpr int kExitSizeLimit = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitVerify = 4;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitParse, "cannot open '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    size_t i = 0;
    while (i < s.size() && s[i] == ' ') ++i;
    return s.substr(i);
}

std::string sniff_format(const std::string& path) {
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "g6" || ext == "graph6") return "g6";
    if (ext == "json") return "json";
    return "edges";
}

// Parses the input into (id, graph) pairs; graph6 files may hold one graph
// per line.
std::vector<std::pair<std::string, Graph>> load_graphs(const std::string& path,
                                                       std::string format) {
    if (format == "auto") format = sniff_format(path);
    const std::string text = read_file(path);
    std::vector<std::pair<std::string, Graph>> out;
    if (format == "g6") {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            line = trim(line);
            if (line.empty()) continue;
            out.emplace_back(path + ":" + std::to_string(lineno), parse_graph6(line));
        }
    } else if (format == "edges") {
        out.emplace_back(path, parse_edge_list(text, IndexBase::zero));
    } else if (format == "edges1") {
        out.emplace_back(path, parse_edge_list(text, IndexBase::one));
    } else if (format == "json") {
        out.emplace_back(path, parse_graph_json(text));
    } else {
        throw CliError{kExitParse, "unknown input format '" + format + "'"};
    }
    if (out.empty()) throw CliError{kExitParse, "no graphs found in '" + path + "'"};
    return out;
}

struct CommonOpts {
    std::string format = "auto";
    std::string out_path;
    int threads = 1;
    int max_n = 24;
    uint64_t seed = 0;
    bool per_component = false;
    size_t all_pds_cap = 0;  // > 0: enumerate all minimum PDSs up to the cap
};

void add_common(CLI::App* cmd, CommonOpts& o, bool input_format) {
    if (input_format)
        cmd->add_option("--format", o.format, "input format: auto|g6|edges|edges1|json");
    cmd->add_option("--out", o.out_path, "write output here instead of stdout");
    cmd->add_option("--threads", o.threads, "solver worker threads");
    cmd->add_option("--max-n", o.max_n, "exact-solve order limit");
    cmd->add_option("--seed", o.seed, "seed for randomized subcommands");
    cmd->add_flag("--per-component", o.per_component, "solve disconnected input per component");
}

SolveOptions solve_options(const CommonOpts& o) {
    SolveOptions s;
    s.max_n = o.max_n;
    s.threads = o.threads;
    s.per_component = o.per_component;
    if (o.all_pds_cap > 0) {
        s.enumerate_all = true;
        s.all_cap = o.all_pds_cap;
    }
    return s;
}

std::ostream& output(const CommonOpts& o, std::ofstream& file) {
    if (o.out_path.empty()) return std::cout;
    file.open(o.out_path, std::ios::binary);
    if (!file) throw CliError{kExitParse, "cannot open output '" + o.out_path + "'"};
    return file;
}

void warn_if_large(int n) {
    if (n > 24)
        std::cerr << "note: exact search over " << n << " vertices; this can take a while\n";
}

int run_analyze(const std::string& path, const CommonOpts& opts, bool with_trace, bool report_only) {
    std::ofstream file;
    std::ostream& out = output(opts, file);
    bool violated = false;
    for (const auto& [id, g] : load_graphs(path, opts.format)) {
        warn_if_large(g.order());
        const SolveResult res = solve(g, solve_options(opts));
        const BoundReport report = audit(g, res, id);
        if (report.any_violation()) {
            violated = true;
            std::cerr << "bound violation on " << id << '\n';
        }
        if (report_only) {
            out << to_json(report).dump() << '\n';
            continue;
        }
        ordered_json rec;
        rec["id"] = id;
        rec["graph"] = to_json(g);
        rec["solve"] = to_json(res);
        rec["report"] = to_json(report);
        if (with_trace) rec["trace"] = to_json(propagate(g, res.witness));
        out << rec.dump() << '\n';
    }
    return violated ? kExitInvariant : 0;
}

std::string family_table(const FamilyInstance& f) {
    std::ostringstream out;
    out << "family " << f.family << " (";
    bool first = true;
    for (const auto& [k, v] : f.params) {
        if (!first) out << ", ";
        out << k << "=" << v;
        first = false;
    }
    out << ")\n";
    out << "  n=" << f.expected.n << " delta=" << f.expected.delta;
    if (f.expected.Delta) out << " Delta=" << *f.expected.Delta;
    if (f.expected.gamma_p) out << " gamma_p=" << *f.expected.gamma_p;
    if (f.expected.rad_p) out << " rad_p=" << *f.expected.rad_p;
    if (!f.expected.note.empty()) out << "  [" << f.expected.note << "]";
    out << "\n  edges:";
    for (auto [u, v] : f.graph.edges()) out << ' ' << u << '-' << v;
    out << '\n';
    return out.str();
}

int run_family(const std::string& name, const std::vector<int>& params, const CommonOpts& opts,
               const std::string& out_format, bool verify) {
    FamilyInstance f;
    try {
        f = make_family(name, params);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitParse, e.what()};
    }
    std::ofstream file;
    std::ostream& out = output(opts, file);
    if (out_format == "json") {
        out << to_json(f).dump() << '\n';
    } else if (out_format == "g6") {
        out << emit_graph6(f.graph) << '\n' << to_json(f.expected).dump() << '\n';
    } else if (out_format == "edges") {
        out << emit_edge_list(f.graph) << to_json(f.expected).dump() << '\n';
    } else if (out_format == "table") {
        out << family_table(f);
    } else {
        throw CliError{kExitParse, "unknown output format '" + out_format + "'"};
    }

    if (verify && f.expected.gamma_p) {
        CommonOpts raised = opts;
        raised.max_n = std::max(raised.max_n, f.graph.order());
        warn_if_large(f.graph.order());
        const SolveResult res = solve(f.graph, solve_options(raised));
        if (res.gamma_p != *f.expected.gamma_p ||
            (f.expected.rad_p && res.rad_p != *f.expected.rad_p)) {
            std::ostringstream msg;
            msg << "verification mismatch: computed (gamma_p, rad_p) = (" << res.gamma_p << ", "
                << res.rad_p << "), profile claims (" << *f.expected.gamma_p << ", "
                << (f.expected.rad_p ? std::to_string(*f.expected.rad_p) : "-") << ")";
            throw CliError{kExitVerify, msg.str()};
        }
    }
    return 0;
}

int run_batch(const std::string& path, const CommonOpts& opts, const std::string& out_format) {
    const std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<int, std::string>> lines;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (!line.empty()) lines.emplace_back(lineno, line);
    }

    struct Row {
        bool parse_failed = false;
        std::string error;
        std::optional<SolveResult> res;
        std::optional<BoundReport> report;
    };
    std::vector<Row> rows(lines.size());

    const auto work = [&](size_t i) {
        Row& row = rows[i];
        try {
            const Graph g = parse_graph6(lines[i].second);
            const SolveResult res = solve(g, solve_options(opts));
            row.report = audit(g, res, path + ":" + std::to_string(lines[i].first));
            row.res = res;
        } catch (const std::exception& e) {
            row.parse_failed = true;
            row.error = e.what();
        }
    };
    const int nthreads = std::max(1, std::min<int>(opts.threads, static_cast<int>(lines.size())));
    if (nthreads <= 1) {
        for (size_t i = 0; i < lines.size(); ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < lines.size(); i = next.fetch_add(1)) work(i);
            });
        for (auto& th : pool) th.join();
    }

    std::ofstream file;
    std::ostream& out = output(opts, file);
    std::map<std::string, int> tight_counts;
    int violations = 0, parse_errors = 0, processed = 0;
    bool csv_header = true;
    for (size_t i = 0; i < lines.size(); ++i) {
        const Row& row = rows[i];
        if (row.parse_failed) {
            ++parse_errors;
            std::cerr << path << ":" << lines[i].first << ": " << row.error << '\n';
            continue;
        }
        ++processed;
        for (const auto& e : row.report->entries) {
            if (e.evaluated && e.tight) ++tight_counts[e.bound_id];
            if (e.evaluated && e.applicable && !e.satisfied) ++violations;
        }
        if (out_format == "csv") {
            out << bound_report_csv(*row.report, csv_header);
            csv_header = false;
        } else {
            ordered_json rec;
            rec["id"] = row.report->graph_id;
            rec["solve"] = to_json(*row.res);
            rec["report"] = to_json(*row.report);
            out << rec.dump() << '\n';
        }
    }
    if (processed > 0 || parse_errors > 0) {
        ordered_json summary;
        summary["graphs"] = processed;
        summary["parse_errors"] = parse_errors;
        summary["violations"] = violations;
        summary["tight_counts"] = tight_counts;
        if (out_format == "csv")
            out << "# summary " << summary.dump() << '\n';
        else
            out << ordered_json{{"summary", summary}}.dump() << '\n';
    }
    if (violations > 0) return kExitInvariant;
    return 0;
}

int run_zf(const std::string& path, const CommonOpts& opts, const std::string& set_spec,
           const std::string& policy_spec, int trials) {
    const auto graphs = load_graphs(path, opts.format);
    const Graph& g = graphs.front().second;

    VertexSet s;
    std::istringstream ss(set_spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            const int v = std::stoi(tok);
            if (v < 0 || v >= g.order()) throw std::out_of_range("vertex");
            s.insert(v);
        } catch (const std::exception&) {
            throw CliError{kExitParse, "bad --set entry '" + tok + "'"};
        }
    }
    if (s.empty()) throw CliError{kExitParse, "--set must name at least one vertex"};

    ForcePolicy policy = ForcePolicy::lex_min();
    if (policy_spec == "min") {
    } else if (policy_spec.rfind("prefer:", 0) == 0) {
        policy = ForcePolicy::prefer_forcer(std::stoi(policy_spec.substr(7)));
    } else if (policy_spec == "random") {
        policy = ForcePolicy::random(opts.seed);
    } else {
        throw CliError{kExitParse, "unknown policy '" + policy_spec + "'"};
    }

    std::ofstream file;
    std::ostream& out = output(opts, file);
    ordered_json rec;
    rec["id"] = graphs.front().first;
    rec["is_zfs"] = is_zfs(g, s);
    if (rec["is_zfs"].get<bool>()) {
        const auto seq = forcing_sequence(g, s, policy);
        rec["sequence"] = to_json(seq, chains_and_reversal(seq));
        if (trials > 0) rec["reversal_lemma"] = check_reversal_lemma(g, s, trials, opts.seed);
    }
    out << rec.dump() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power domination analysis"};
    app.require_subcommand(1);

    CommonOpts opts;
    if (const char* env = std::getenv("POWDOM_MAX_N")) {
        const int v = std::atoi(env);
        if (v > 0) opts.max_n = v;
    }

    std::string input;
    bool with_trace = false;

    auto* analyze = app.add_subcommand("analyze", "solve and audit graphs");
    analyze->add_option("input", input)->required();
    analyze->add_flag("--trace", with_trace, "include the witness propagation trace");
    analyze->add_option("--all-pds", opts.all_pds_cap,
                        "enumerate every minimum PDS, up to this many");
    add_common(analyze, opts, true);

    auto* auditc = app.add_subcommand("audit", "emit bound reports only");
    auditc->add_option("input", input)->required();
    add_common(auditc, opts, true);

    std::string family_name, family_format = "json";
    std::vector<int> family_params;
    bool verify = false;
    auto* family = app.add_subcommand("family", "generate a named construction");
    family->add_option("name", family_name)->required();
    family->add_option("params", family_params);
    family->add_option("--format", family_format, "output format: json|g6|edges|table");
    family->add_flag("--verify", verify, "solve and check the claimed profile");
    add_common(family, opts, false);

    std::string batch_format = "jsonl";
    auto* batch = app.add_subcommand("batch", "sweep a graph6 corpus");
    batch->add_option("input", input)->required();
    batch->add_option("--format", batch_format, "output format: jsonl|csv");
    add_common(batch, opts, false);

    std::string set_spec, policy_spec = "min";
    int trials = 0;
    auto* zf = app.add_subcommand("zf", "forcing sequences, chains and reversals");
    zf->add_option("input", input)->required();
    zf->add_option("--set", set_spec, "comma-separated initial vertices")->required();
    zf->add_option("--policy", policy_spec, "min | prefer:<v> | random");
    zf->add_option("--trials", trials, "run the reversal-lemma check this many times");
    add_common(zf, opts, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(input, opts, with_trace, false);
        if (auditc->parsed()) return run_analyze(input, opts, false, true);
        if (family->parsed()) return run_family(family_name, family_params, opts, family_format, verify);
        if (batch->parsed()) return run_batch(input, opts, batch_format);
        if (zf->parsed()) return run_zf(input, opts, set_spec, policy_spec, trials);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const size_limit_error& e) {
        std::cerr << "size limit: " << e.what() << '\n';
        return kExitSizeLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return 0;
}
