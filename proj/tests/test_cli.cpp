#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "excol/gen.hpp"
#include "excol/io.hpp"
#include "excol/structure.hpp"

using namespace excol;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult res;
    std::string cmd = std::string(EXCOL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WEXITSTATUS(status);
    return res;
}

std::string write_temp(const std::string& name, const std::string& payload) {
    std::string path = std::string("cli_") + name;
    std::ofstream out(path);
    out << payload;
    return path;
}

nlohmann::json strip_wall(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    doc.erase("wall_ms");
    return doc;
}

}  // namespace

TEST_CASE("decide runs and reports") {
    std::string file = write_temp("c5.col", emit_dimacs(gen_gnp(5, 1.0, 1)));  // K5
    RunResult res = run("decide --k 5 " + file);
    CHECK(res.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(res.out);
    CHECK(doc["verdict"] == "true");
    RunResult no = run("decide --k 4 " + file);
    CHECK(no.exit_code == 0);
    CHECK(nlohmann::json::parse(no.out)["verdict"] == "false");
}

TEST_CASE("cross-algorithm agreement through the CLI") {
    std::string file = write_temp("rand.col", emit_dimacs(gen_gnp(9, 0.4, 9)));
    for (int k : {2, 3}) {
        RunResult a = run("decide --k " + std::to_string(k) + " --algorithm bhk " + file);
        RunResult b = run("decide --k " + std::to_string(k) + " --algorithm bounded " + file);
        CHECK(nlohmann::json::parse(a.out)["verdict"] == nlohmann::json::parse(b.out)["verdict"]);
    }
}

TEST_CASE("color reports re-verified colorings") {
    Graph pet = petersen();
    std::string file = write_temp("petersen.col", emit_dimacs(pet));
    RunResult res = run("color --k 3 --algorithm trimmed " + file);
    CHECK(res.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(res.out);
    REQUIRE(doc["verdict"] == "found");
    PartialColoring c(10);
    for (int v = 0; v < 10; ++v) c.set(v, doc["coloring"][static_cast<std::size_t>(v)]);
    CHECK(c.proper_total(pet));

    std::string k4 = write_temp("k4.col", emit_dimacs(gen_gnp(4, 1.0, 1)));
    CHECK(nlohmann::json::parse(run("color --k 3 " + k4).out)["verdict"] == "absent");
}

TEST_CASE("a3 reports replay byte-identically modulo wall time") {
    std::string file = write_temp("a3.col", emit_dimacs(gen_gnp(8, 0.5, 21)));
    RunResult a = run("color --k 6 --algorithm a3 --seed 5 --max-reps 200 " + file);
    RunResult b = run("color --k 6 --algorithm a3 --seed 5 --max-reps 200 " + file);
    CHECK(a.exit_code == 0);
    CHECK(strip_wall(a.out) == strip_wall(b.out));
}

TEST_CASE("listcolor mirrors the solver") {
    std::string gfile = write_temp("edge.col", "p edge 2 1\ne 1 2\n");
    std::string bad = write_temp("bad.lists", "0: 0\n1: 0\n");
    RunResult clash = run("listcolor --k 1 " + gfile + " " + bad);
    CHECK(nlohmann::json::parse(clash.out)["verdict"] == "false");
    std::string good = write_temp("good.lists", "0: 0 1\n1: 0 1\n");
    RunResult fine = run("listcolor --k 2 --algorithm backtracking " + gfile + " " + good);
    CHECK(nlohmann::json::parse(fine.out)["verdict"] == "found");
}

TEST_CASE("removal certificate through the CLI") {
    RunResult gen_res = run("gen --hard-removal --C 1 --delta 2 --n 1 -o cli_hard.fam");
    CHECK(gen_res.exit_code == 0);
    RunResult rem = run("removal --C 1 cli_hard.fam");
    CHECK(rem.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(rem.out);
    CHECK(doc["parameters"]["certificate_holds"] == true);
    CHECK(doc["parameters"]["kept"] == 4);
}

TEST_CASE("gen is reproducible") {
    RunResult a = run("gen --gnp 10 0.3 --seed 1");
    RunResult b = run("gen --gnp 10 0.3 --seed 1");
    CHECK(a.out == b.out);
    Graph g = load_dimacs_string(a.out);
    CHECK(g.vertex_count() == 10);
}

TEST_CASE("gen bounded composites pass their own check") {
    RunResult a = run("gen --bounded 12 4 0.5 --seed 3");
    Graph g = load_dimacs_string(a.out);
    CHECK(is_alpha_delta_bounded(g, Rational(1, 2), 4));
}

TEST_CASE("exit codes distinguish input and resource trouble") {
    std::string loop = write_temp("loop.col", "p edge 2 1\ne 1 1\n");
    CHECK(run("decide --k 2 " + loop).exit_code == 3);
    std::string big = write_temp("big.col", emit_dimacs(Graph(40)));
    CHECK(run("decide --k 2 " + big).exit_code == 2);
    CHECK(run("decide --k 2 missing_file.col").exit_code == 3);
}

TEST_CASE("bench emits the CSV schema") {
    RunResult res = run("bench --family comb --sizes 8:12:2 --k 3 --algorithms bhk,trimmed");
    CHECK(res.exit_code == 0);
    CHECK(res.out.rfind("n,algorithm,verdict,entries_touched,bound_rhs,wall_ms,seed\n", 0) == 0);
    int lines = 0;
    for (char ch : res.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 1 + 3 * 2);  // header + sizes {8,10,12} x two algorithms
}

TEST_CASE("oracle subcommands mirror the main ones") {
    std::string file = write_temp("k3.col", emit_dimacs(gen_gnp(3, 1.0, 1)));
    nlohmann::json cover = nlohmann::json::parse(run("oracle cover --k 3 " + file).out);
    CHECK(cover["parameters"]["cover_count"] == "6");
    nlohmann::json dec = nlohmann::json::parse(run("oracle decide --k 2 " + file).out);
    CHECK(dec["verdict"] == "false");
}
