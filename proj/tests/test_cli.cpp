#include <doctest.h>

#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "cfreduce/io.hpp"

namespace fs = std::filesystem;
using namespace cfreduce;

namespace {

class Sandbox {
  public:
    Sandbox() {
        static int counter = 0;
        dir_ = fs::temp_directory_path() /
               ("cfreduce_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(dir_);
    }
    ~Sandbox() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& content) const { io::write_file(path(name), content); }
    std::string read(const std::string& name) const { return io::read_file(path(name)); }

    int run(const std::string& args) const {
        std::string cmd = "cd '" + dir_.string() + "' && '" CFREDUCE_CLI_PATH "' " + args + " > out.txt 2> err.txt";
        int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

  private:
    fs::path dir_;
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("build exports DIMACS and the triple map") {
    Sandbox box;
    box.write("one.hg", "2 1\n2 1 2\n");
    REQUIRE(box.run("build one.hg --k 2 -o one") == 0);
    Graph g = io::read_dimacs(box.read("one.dimacs"));
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 6);
    auto triples = io::parse_json(box.read("one.triples.json"));
    CHECK(triples["triples"].size() == 4);
    CHECK(triples["triples"][3]["vertex"] == 2);
    CHECK(triples["triples"][3]["color"] == 2);

    box.write("empty.hg", "3 0\n");
    REQUIRE(box.run("build empty.hg --k 2 -o empty") == 0);
    CHECK(box.read("empty.dimacs").find("p edge 0 0\n") != std::string::npos);

    box.write("bad.hg", "2 1\n2 1 3\n");
    CHECK(box.run("build bad.hg --k 2 -o bad") == 2);
    CHECK(box.read("err.txt").find("line 2") != std::string::npos);
    CHECK(box.run("build missing.hg --k 2 -o bad") == 2);
}

TEST_CASE("gen, verify and color on a planted instance") {
    Sandbox box;
    REQUIRE(box.run("gen --n 10 --m 6 --k 2 --eps 0.5 --seed 4 -o p") == 0);
    CHECK(box.run("verify p.hg p.col.json") == 0);

    REQUIRE(box.run("color p.hg --k 2 --solver exact --cap 128 -o c") == 0);
    auto status = io::parse_json(box.read("out.txt"));
    CHECK(status["status"] == "ok");
    CHECK(status["phases"] == 1);
    CHECK(box.run("verify p.hg c.col.json") == 0);
    auto manifest = io::parse_json(box.read("c.manifest.json"));
    CHECK(manifest["subcommand"] == "color");
    CHECK(manifest["config"]["solver"] == "exact");

    REQUIRE(box.run("color p.hg --k 2 --solver greedy --lambda 4 -o g") == 0);
    CHECK(box.run("verify p.hg g.col.json") == 0);
}

TEST_CASE("verify exits 1 on a coloring that is not conflict-free") {
    Sandbox box;
    box.write("h.hg", "3 2\n2 1 2\n2 2 3\n");
    box.write("f.col.json", R"({"k": 1, "colors": {"1": 1, "2": 1, "3": 1}})");
    CHECK(box.run("verify h.hg f.col.json") == 1);
    box.write("bad.col.json", R"({"k": 1, "colors": {"9": 1}})");
    CHECK(box.run("verify h.hg bad.col.json") == 2);
}

TEST_CASE("color exit codes for promise violation, cap and empty input") {
    Sandbox box;
    box.write("tri.hg", "3 3\n2 1 2\n2 2 3\n2 1 3\n");
    CHECK(box.run("color tri.hg --k 1 --max-phases 1 -o t") == 3);
    auto status = io::parse_json(box.read("out.txt"));
    CHECK(status["status"] == "promise-violation");
    CHECK(status["surviving"].size() == 1);

    REQUIRE(box.run("gen --n 12 --m 8 --k 3 --eps 0.34 --seed 7 -o big") == 0);
    CHECK(box.run("color big.hg --k 3 --solver exact --cap 10 -o x") == 4);
    CHECK(box.run("color big.hg --k 3 --solver nope -o x") == 2);

    box.write("none.hg", "4 0\n");
    REQUIRE(box.run("color none.hg --k 2 -o z") == 0);
    auto col = io::parse_json(box.read("z.col.json"));
    CHECK(col["phases"] == 0);
    CHECK(box.read("z.phases.jsonl").empty());
}

TEST_CASE("solve and slocal on a path") {
    Sandbox box;
    box.write("p3.dimacs", "p edge 3 2\ne 1 2\ne 2 3\n");
    REQUIRE(box.run("solve p3.dimacs --solver exact") == 0);
    auto out = io::parse_json(box.read("out.txt"));
    CHECK(out["size"] == 2);
    CHECK(out["members"] == io::Json::array({1, 3}));
    CHECK(out["report"]["alpha"] == 2);

    REQUIRE(box.run("slocal p3.dimacs --order list --list 2,1,3") == 0);
    CHECK(io::parse_json(box.read("out.txt"))["members"] == io::Json::array({2}));
    REQUIRE(box.run("slocal p3.dimacs --order random --seed 3 -o s.json") == 0);
    CHECK(box.run("slocal p3.dimacs --order list --list 1,1,2") == 2);

    box.write("wide.dimacs", "p edge 5 0\n");
    CHECK(box.run("solve wide.dimacs --solver exact --cap 4") == 4);
    CHECK(box.run("solve wide.dimacs --solver greedy --cap 4") == 0);
}

TEST_CASE("bench emits one report per instance") {
    Sandbox box;
    REQUIRE(box.run("bench --count 3 --n 8 --m 4 --k 2 --eps 0.5 --seed 1") == 0);
    std::string text = box.read("out.txt");
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

}
