#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "powdom/enumerate.hpp"
#include "powdom/families.hpp"
#include "powdom/graph_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "powdom_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const char* bin = std::getenv("POWDOM_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "POWDOM_CLI must point at the built binary");
    const fs::path out = scratch_dir() / "stdout.txt";
    const fs::path err = scratch_dir() / "stderr.txt";
    const std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + std::string(bin) + " " +
                            args + " > " + out.string() + " 2> " + err.string();
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path data_file(const std::string& name) {
    const char* dir = std::getenv("POWDOM_TEST_DATA");
    REQUIRE_MESSAGE(dir != nullptr, "POWDOM_TEST_DATA must point at tests/data");
    return fs::path(dir) / name;
}

fs::path write_scratch(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

}  // namespace

TEST_CASE("analyze the figure-1 edge list") {
    const auto r = run_cli("analyze " + data_file("fig1.edges").string() + " --trace");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"gamma_p\":1") != std::string::npos);
    CHECK(r.out.find("\"rad_p\":2") != std::string::npos);
    CHECK(r.out.find("\"witness\":[4]") != std::string::npos);
    CHECK(r.out.find("\"layers\":[[2,3,4,5],[0,1,2,3,4,5]]") != std::string::npos);

    const auto all = run_cli("analyze " + data_file("fig1.edges").string() + " --all-pds 10");
    CHECK(all.code == 0);
    CHECK(all.out.find("\"all_min_pds\":[[4]]") != std::string::npos);
}

TEST_CASE("analyze a complete graph from graph6") {
    const auto k5 = write_scratch("k5.g6", powdom::emit_graph6(powdom::gen_complete(5).graph) + "\n");
    const auto r = run_cli("analyze " + k5.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("\"gamma_p\":1") != std::string::npos);
    CHECK(r.out.find("\"rad_p\":1") != std::string::npos);
}

TEST_CASE("analyze json and one-based edge-list inputs") {
    const auto j = write_scratch("fig1.json", powdom::emit_graph_json(
                                                  powdom::parse_edge_list("6 5\n0 2\n2 4\n4 5\n1 3\n3 4")));
    const auto rj = run_cli("analyze " + j.string());
    CHECK(rj.code == 0);
    CHECK(rj.out.find("\"rad_p\":2") != std::string::npos);

    const auto e1 = write_scratch("fig1_1based.txt", "6 5\n1 3\n3 5\n5 6\n2 4\n4 5\n");
    const auto r1 = run_cli("analyze " + e1.string() + " --format edges1");
    CHECK(r1.code == 0);
    CHECK(r1.out.find("\"witness\":[4]") != std::string::npos);
}

TEST_CASE("audit subcommand emits bound reports and flags violations") {
    const auto s22 = write_scratch("s22.g6", powdom::emit_graph6(powdom::gen_S(2, 2).graph) + "\n");
    const auto r = run_cli("audit " + s22.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("\"bound_id\":\"B6\"") != std::string::npos);
    CHECK(r.out.find("\"is_split\":true") != std::string::npos);

    // P_4 violates B6; the report is still emitted and the exit code is 3.
    const auto p4 = write_scratch("p4.edges", "4 3\n0 1\n1 2\n2 3\n");
    const auto v = run_cli("audit " + p4.string());
    CHECK(v.code == 3);
    CHECK(v.out.find("\"satisfied\":false") != std::string::npos);
    CHECK(v.err.find("bound violation") != std::string::npos);
}

TEST_CASE("analyze failures map to documented exit codes") {
    const auto empty = write_scratch("empty.edges", "");
    CHECK(run_cli("analyze " + empty.string()).code == 1);

    const auto missing = run_cli("analyze /nonexistent/file.g6");
    CHECK(missing.code == 1);

    const auto big = write_scratch("k30.g6", powdom::emit_graph6(powdom::gen_complete(30).graph) + "\n");
    CHECK(run_cli("analyze " + big.string() + " --max-n 24").code == 2);

    // The environment variable sets the default limit.
    const auto k5 = write_scratch("k5lim.g6", powdom::emit_graph6(powdom::gen_complete(5).graph) + "\n");
    CHECK(run_cli("analyze " + k5.string(), "POWDOM_MAX_N=4").code == 2);
    CHECK(run_cli("analyze " + k5.string() + " --max-n 5", "POWDOM_MAX_N=4").code == 0);

    const auto disconnected = write_scratch("two.edges", "4 2\n0 1\n2 3\n");
    CHECK(run_cli("analyze " + disconnected.string()).code == 1);
    CHECK(run_cli("analyze " + disconnected.string() + " --per-component").code == 0);
}

TEST_CASE("family generation and verification") {
    const auto s42 = run_cli("family S 4 2 --verify");
    CHECK(s42.code == 0);
    CHECK(s42.out.find("\"family\":\"S\"") != std::string::npos);
    CHECK(s42.out.find("\"gamma_p\":2") != std::string::npos);
    CHECK(s42.out.find("\"rad_p\":4") != std::string::npos);

    const auto f2 = run_cli("family F 2");
    CHECK(f2.code == 1);
    CHECK(f2.err.find("no suitable candidate graph for F(2)") != std::string::npos);

    const auto h = run_cli("family H 5 4 2");
    CHECK(h.code == 0);
    CHECK(h.out.find("\"n\":44") != std::string::npos);

    const auto g6 = run_cli("family Gdelta 4 --format g6");
    CHECK(g6.code == 0);
    CHECK(g6.out.find(powdom::emit_graph6(powdom::gen_regular(4).graph)) == 0);

    const auto table = run_cli("family D 3 --format table");
    CHECK(table.code == 0);
    CHECK(table.out.find("gamma_p=3") != std::string::npos);

    // The G(2,3) profile claims radius 6 but the exact radius is 5; --verify
    // must report the mismatch honestly.
    const auto g23 = run_cli("family G2 3 --verify");
    CHECK(g23.code == 4);
    CHECK(g23.err.find("verification mismatch") != std::string::npos);
}

TEST_CASE("batch sweeps a corpus and summarizes tightness") {
    std::string corpus;
    for (int k = 4; k <= 6; ++k)
        corpus += powdom::emit_graph6(powdom::gen_G2(k).graph) + "\n";
    const auto path = write_scratch("g2corpus.g6", corpus);
    const auto r = run_cli("batch " + path.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("\"violations\":0") != std::string::npos);
    CHECK(r.out.find("\"B3\":3") != std::string::npos);  // tight on every line

    // Parse errors are logged and skipped; processing continues.
    const auto mixed = write_scratch("mixed.g6", "not-a-graph\n" +
                                                     powdom::emit_graph6(powdom::gen_complete(4).graph) +
                                                     "\n");
    const auto m = run_cli("batch " + mixed.string());
    CHECK(m.code == 0);
    CHECK(m.out.find("\"graphs\":1") != std::string::npos);
    CHECK(m.out.find("\"parse_errors\":1") != std::string::npos);
    CHECK(!m.err.empty());

    const auto empty = write_scratch("empty.g6", "");
    const auto e = run_cli("batch " + empty.string());
    CHECK(e.code == 0);
    CHECK(e.out.empty());

    const auto csv = run_cli("batch " + path.string() + " --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.find("graph_id,bound_id") == 0);
}

TEST_CASE("batch over all connected graphs on 6 vertices finds no violation") {
    std::string corpus;
    for (const auto& g : powdom::connected_graphs_up_to_iso(6))
        corpus += powdom::emit_graph6(g) + "\n";
    const auto path = write_scratch("conn6.g6", corpus);
    const auto r = run_cli("batch " + path.string() + " --threads 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"graphs\":112") != std::string::npos);
    CHECK(r.out.find("\"violations\":0") != std::string::npos);

    // Same bytes regardless of worker count.
    const auto serial = run_cli("batch " + path.string());
    CHECK(serial.out == r.out);
}

TEST_CASE("zf inspects forcing sequences and reversals") {
    const std::string base = "zf " + data_file("fig1.edges").string();
    const auto t1 = run_cli(base + " --set 0,1 --trials 5");
    CHECK(t1.code == 0);
    CHECK(t1.out.find("\"forces\":[[0,2],[1,3],[2,4],[4,5]]") != std::string::npos);
    CHECK(t1.out.find("\"reversal\":[3,5]") != std::string::npos);
    CHECK(t1.out.find("\"reversal_lemma\":true") != std::string::npos);

    const auto t2 = run_cli(base + " --set 0,1 --policy prefer:3");
    CHECK(t2.code == 0);
    CHECK(t2.out.find("\"forces\":[[0,2],[1,3],[3,4],[4,5]]") != std::string::npos);
    CHECK(t2.out.find("\"reversal\":[2,5]") != std::string::npos);

    const auto not_zfs = run_cli(base + " --set 5");
    CHECK(not_zfs.code == 0);
    CHECK(not_zfs.out.find("\"is_zfs\":false") != std::string::npos);

    const auto ra = run_cli(base + " --set 0,1 --policy random --seed 9");
    const auto rb = run_cli(base + " --set 0,1 --policy random --seed 9");
    CHECK(ra.code == 0);
    CHECK(ra.out == rb.out);

    CHECK(run_cli(base + " --set 0,xyz").code == 1);
}

TEST_CASE("output is byte-identical across runs") {
    const std::string args = "analyze " + data_file("fig1.edges").string() + " --trace --seed 0";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const auto out_path = scratch_dir() / "result.jsonl";
    const auto c = run_cli("analyze " + data_file("fig1.edges").string() + " --out " + out_path.string());
    CHECK(c.code == 0);
    CHECK(c.out.empty());
    CHECK(!slurp(out_path).empty());
}
