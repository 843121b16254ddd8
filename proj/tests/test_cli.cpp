#include "doctest.h"

#include "cli.hpp"
#include "support.hpp"
#include "tww/io.hpp"
#include "tww/widths.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace tww;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run tww_run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("tww_cli_" + std::to_string(::getpid())))
    {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

} // namespace

TEST_CASE("verify on the seven-vertex example")
{
    Scratch tmp;
    auto g = tmp.write("f.g", io::serialize(test::fig1_graph()));
    auto s = tmp.write("f.s", io::serialize(test::fig1_sequence()));

    auto pass = tww_run({"verify", "--measure", "degree", "--d", "2", "--graph", g, "--seq", s});
    CHECK(pass.code == 0);
    CHECK(pass.out.rfind("ok", 0) == 0);

    auto fail = tww_run({"verify", "--measure", "degree", "--d", "1", "--graph", g, "--seq", s});
    CHECK(fail.code == 2);
    CHECK(fail.out.find("step 1 (c 5 6)") != std::string::npos);

    auto w = tww_run({"width", "-m", "degree", "-g", g, "-s", s});
    CHECK(w.code == 0);
    CHECK(w.out == "2\n");
}

TEST_CASE("sequences are replayed before use")
{
    Scratch tmp;
    auto g = tmp.write("f.g", io::serialize(test::fig1_graph()));
    auto bad = tmp.write("bad.s", "s 7 2\nc 1 2\nc 1 3\n");
    for (auto cmd : {"width", "verify", "color"}) {
        std::vector<std::string> args{cmd, "-g", g, "-s", bad};
        if (std::string(cmd) != "color")
            args.insert(args.end(), {"-m", "degree"});
        if (std::string(cmd) == "verify")
            args.insert(args.end(), {"-d", "9"});
        if (std::string(cmd) == "color")
            args.insert(args.end(), {"-q", "3"});
        auto r = tww_run(args);
        CHECK(r.code == 1);
        CHECK(r.err.find("step 2") != std::string::npos);
    }
    auto wrong_n = tmp.write("n.s", "s 6 1\nc 1 2\n");
    CHECK(tww_run({"width", "-m", "total", "-g", g, "-s", wrong_n}).code == 1);
    auto malformed = tmp.write("m.g", "p 3 1\ne 1\n");
    auto r = tww_run({"gen", "-k", "path", "-p", "3"});
    CHECK(r.code == 0);
    auto m = tww_run({"width", "-m", "total", "-g", malformed, "-s", wrong_n});
    CHECK(m.code == 1);
    CHECK(m.err.find("line 2") != std::string::npos);
}

TEST_CASE("color and exact")
{
    Scratch tmp;
    auto k3 = tmp.write("k3.g", io::serialize(test::clique(3)));
    auto k3s = tmp.write("k3.s", "s 3 2\nc 1 2\nc 4 3\n");
    auto no = tww_run({"color", "--q", "2", "-g", k3, "-s", k3s});
    CHECK(no.code == 0);
    CHECK(no.out == "NO\n");

    auto yes = tww_run({"color", "--q", "3", "--extract", "-g", k3, "-s", k3s});
    CHECK(yes.code == 0);
    CHECK(first_line(yes.out) == "YES");
    std::istringstream lines(yes.out.substr(4));
    std::vector<int> coloring(4, 0);
    std::string tag;
    int v = 0, c = 0, seen = 0;
    while (lines >> tag >> v >> c) {
        CHECK(tag == "v");
        coloring[static_cast<std::size_t>(v)] = c;
        ++seen;
    }
    CHECK(seen == 3);
    CHECK(coloring[1] != coloring[2]);
    CHECK(coloring[2] != coloring[3]);
    CHECK(coloring[1] != coloring[3]);

    // singleton parts are red components of size 1
    CHECK(tww_run({"color", "--q", "3", "-d", "1", "-g", k3, "-s", k3s}).code == 0);
    CHECK(tww_run({"color", "--q", "3", "-d", "0", "-g", k3, "-s", k3s}).code == 2);
    auto p4 = tmp.write("p4.g", io::serialize(test::path(4)));
    auto p4s = tmp.write("p4.s", "s 4 3\nc 1 2\nc 5 3\nc 6 4\n");
    CHECK(tww_run({"color", "--q", "2", "-d", "0", "-g", p4, "-s", p4s}).code == 2);

    auto ex = tww_run({"exact", "--measure", "degree", "--graph", p4});
    CHECK(ex.code == 0);
    CHECK(first_line(ex.out) == "1");
    auto seq = io::parse_sequence(ex.out.substr(ex.out.find('\n') + 1));
    CHECK(sequence_width(test::path(4), seq, Measure::degree) == 1);

    auto out = tmp.path("p4.out");
    CHECK(tww_run({"exact", "-m", "degree", "-g", p4, "-o", out}).out == "1\n");
    CHECK(io::parse_sequence(io::read_file(out)).complete());

    auto big = tmp.write("big.g", io::serialize(test::path(20)));
    CHECK(tww_run({"exact", "-m", "degree", "-g", big}).code == 3);
    auto grid = tmp.write("grid.g", tww_run({"gen", "-k", "grid", "-p", "3", "4"}).out);
    CHECK(tww_run({"exact", "-m", "degree", "-g", grid, "--budget", "2"}).code == 3);
}

TEST_CASE("build and convert")
{
    Scratch tmp;
    auto g = tmp.write("f.g", io::serialize(test::fig1_graph()));
    auto greedy = tww_run({"build", "--strategy", "greedy", "-g", g, "-m", "degree"});
    CHECK(greedy.code == 0);
    auto s = io::parse_sequence(greedy.out);
    CHECK(s.complete());
    CHECK(greedy.out.find("# degree width " + std::to_string(sequence_width(test::fig1_graph(), s, Measure::degree))) !=
          std::string::npos);

    CHECK(tww_run({"build", "--strategy", "contractible", "-g", g, "-d", "9"}).code == 0);
    CHECK(tww_run({"build", "--strategy", "contractible", "-g", g, "-d", "1"}).code == 2);
    CHECK(tww_run({"build", "--strategy", "contractible", "-g", g}).code == 1);
    auto partial = tww_run({"build", "--strategy", "partial", "-g", g, "-d", "2", "--delta", "3"});
    CHECK(partial.code == 0);
    CHECK(partial.out.find("# outcome target-reached") != std::string::npos);

    auto seq = tmp.write("f.s", io::serialize(test::fig1_sequence()));
    for (auto [there, back] : {std::pair{"seq2bd", "bd2seq"}, std::pair{"seq2lbd", "lbd2seq"}}) {
        auto t = tww_run({"convert", there, "-g", g, "-i", seq});
        REQUIRE(t.code == 0);
        auto tf = tmp.write(std::string(there) + ".t", t.out);
        auto r = tww_run({"convert", back, "-g", g, "-i", tf});
        REQUIRE(r.code == 0);
        auto s2 = io::parse_sequence(r.out);
        CHECK(s2.complete());
        validate_sequence(test::fig1_graph(), s2);
    }
    // d smaller than the decomposition's width
    auto t = tmp.write("t", tww_run({"convert", "seq2bd", "-g", g, "-i", seq}).out);
    CHECK(tww_run({"convert", "bd2seq", "-g", g, "-i", t, "-d", "0"}).code == 2);
    CHECK(tww_run({"convert", "lbd2seq", "-g", g, "-i", t}).code == (io::parse_decomposition(io::read_file(t)).linear_shape() ? 0 : 1));
    CHECK(tww_run({"convert", "sideways", "-g", g, "-i", seq}).code == 1);
}

TEST_CASE("matrix and gen")
{
    Scratch tmp;
    auto m = tmp.write("m", "m 3 3\n0 1 0\n1 0 1\n0 1 0\n");
    CHECK(tww_run({"matrix", "error", "--matrix", m}).out == "0\n");
    CHECK(tww_run({"matrix", "error", "--matrix", m, "--rows", "1 2|3"}).out == "3\n");
    CHECK(tww_run({"matrix", "error", "--matrix", m, "--rows", "1 3|2"}).out == "0\n");
    CHECK(tww_run({"matrix", "error", "--matrix", m, "--rows", "1 2"}).code == 1);
    auto mixed = tww_run({"matrix", "mixed", "--matrix", m});
    CHECK(mixed.out == "mixed\ncorner 1 1\n");
    CHECK(tww_run({"matrix", "mixed", "--matrix", m, "--rows", "1:1"}).out == "vertical\n");
    CHECK(tww_run({"matrix", "mixed", "--matrix", m, "--cols", "2:2"}).out == "horizontal\n");
    CHECK(tww_run({"matrix", "mixed", "--matrix", m, "--rows", "1:1", "--cols", "1:1"}).out == "constant\n");
    auto id = tmp.write("id", "m 2 2\n1 0\n0 1\n");
    CHECK(tww_run({"matrix", "exact", "--matrix", id}).out == "2\n");
    CHECK(tww_run({"matrix", "exact", "--matrix", id, "--symmetric"}).code == 0);
    auto checker = tmp.write("c", "m 2 2\n0 1\n1 0\n");
    CHECK(tww_run({"matrix", "minor", "--matrix", checker, "-t", "1"}).out == "yes\n");
    CHECK(tww_run({"matrix", "minor", "--matrix", checker, "-t", "2"}).out == "no\n");
    CHECK(tww_run({"matrix", "minor", "--matrix", checker}).code == 1);

    auto grid = tww_run({"gen", "--kind", "grid", "--params", "3", "3"});
    CHECK(grid.code == 0);
    auto gg = io::parse_graph(grid.out);
    CHECK(gg.n() == 9);
    CHECK(gg.m() == 12);
    auto a = tww_run({"gen", "-k", "er", "-p", "10", "0.5", "--seed", "7"});
    CHECK(a.out == tww_run({"gen", "-k", "er", "-p", "10", "0.5", "--seed", "7"}).out);
    CHECK(tww_run({"gen", "-k", "blowup", "-p", "cycle", "5", "4"}).out.rfind("p 20 ", 0) == 0);
    CHECK(tww_run({"gen", "-k", "moebius"}).code == 1);
    CHECK(tww_run({}).code == 1);
    CHECK(tww_run({"--help"}).code == 0);
}
