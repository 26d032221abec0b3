#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("ftbfs_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path op = work_dir() / ("out" + std::to_string(counter) + ".txt");
    const fs::path ep = work_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string(FTBFS_CLI_PATH) + " " + args + " > " + op.string() +
                            " 2> " + ep.string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(op);
    r.err = slurp(ep);
    return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = work_dir() / name;
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("gen, build, verify round trip") {
    const fs::path g = work_dir() / "g.txt";
    const RunResult gen =
        run("gen --model gnp --n 12 --p 0.3 --seed 4 --output " + g.string());
    REQUIRE(gen.code == 0);
    REQUIRE(fs::exists(g));
    const json gdoc = json::parse(gen.out);
    CHECK(gdoc.at("n") == 12);
    CHECK(gdoc.at("edges").get<int>() > 0);

    const fs::path h = work_dir() / "h.txt";
    const RunResult build = run("build --input " + g.string() +
                                " --sources 0 --k 2 --mode edge --output " + h.string());
    REQUIRE(build.code == 0);
    REQUIRE(fs::exists(h));
    REQUIRE(fs::exists(h.string() + ".assignments.json"));
    const json bdoc = json::parse(build.out);
    CHECK(bdoc.at("size").at("edges").get<int>() > 0);

    const RunResult verify = run("verify --input " + g.string() + " --subgraph " + h.string() +
                                 " --sources 0 --k 2 --mode edge");
    CHECK(verify.code == 0);
    const json vdoc = json::parse(verify.out);
    CHECK(vdoc.at("pass") == true);
    CHECK(vdoc.at("sampled") == false);
}

TEST_CASE("a broken subgraph is reported and exits 1") {
    const fs::path g = write_file("diamond.txt", fx::kDiamondText);
    const fs::path h = write_file("broken.txt", "4 2 undirected\n0 1\n1 3\n");
    const fs::path rep = work_dir() / "report.json";
    const RunResult r = run("verify --input " + g.string() + " --subgraph " + h.string() +
                            " --k 2 --output " + rep.string());
    CHECK(r.code == 1);
    const json doc = json::parse(r.out);
    CHECK(doc.at("pass") == false);
    CHECK_FALSE(doc.at("witnesses").empty());
    // The report file is still written when verification fails.
    REQUIRE(fs::exists(rep));
    CHECK(json::parse(slurp(rep)).at("pass") == false);
}

TEST_CASE("usage and input errors exit 2 without partial files") {
    CHECK(run("verify --input nope.txt --subgraph nope.txt").code == 2);
    CHECK(run("build --no-such-flag").code == 2);
    CHECK(run("gen --n 10").code == 2);  // missing required --output
    const fs::path g = write_file("d2.txt", fx::kDiamondText);
    CHECK(run("build --input " + g.string() + " --mode sideways").code == 2);
    CHECK(run("build --input " + g.string() + " --k 7").code == 2);

    const fs::path bad = work_dir() / "bad.txt";
    CHECK(run("gen --model gnp --n 10 --p 2.0 --output " + bad.string()).code == 2);
    CHECK_FALSE(fs::exists(bad));
}

TEST_CASE("build outputs are byte-stable across runs and threads") {
    const fs::path g = work_dir() / "gs.txt";
    REQUIRE(run("gen --model gnp --n 14 --p 0.3 --seed 9 --output " + g.string()).code == 0);
    const fs::path h1 = work_dir() / "h1.txt";
    const fs::path h2 = work_dir() / "h2.txt";
    const fs::path h3 = work_dir() / "h3.txt";
    REQUIRE(run("build --input " + g.string() + " --sources 0,2 --output " + h1.string())
                .code == 0);
    REQUIRE(run("build --input " + g.string() + " --sources 0,2 --output " + h2.string())
                .code == 0);
    REQUIRE(run("build --input " + g.string() + " --sources 0,2 --threads 3 --output " +
                h3.string())
                .code == 0);
    CHECK(slurp(h1) == slurp(h2));
    CHECK(slurp(h1) == slurp(h3));
    CHECK(slurp(h1.string() + ".assignments.json") == slurp(h3.string() + ".assignments.json"));
}

TEST_CASE("analyze and spanner run clean on the diamond") {
    const fs::path g = write_file("d3.txt", fx::kDiamondText);
    const RunResult a = run("analyze --input " + g.string() + " --k 2");
    CHECK(a.code == 0);
    const json adoc = json::parse(a.out);
    CHECK(adoc.at("analysis").at("allOk") == true);

    const fs::path sp = work_dir() / "sp.txt";
    const RunResult s =
        run("spanner --input " + g.string() + " --sigma auto --output " + sp.string());
    CHECK(s.code == 0);
    const json sdoc = json::parse(s.out);
    CHECK(sdoc.at("stretch").at("pass") == true);
    // Every diamond vertex has degree 2, so the whole graph stays.
    CHECK(sdoc.at("spanner").at("edges") == 4);
    REQUIRE(fs::exists(sp));
    CHECK(json::parse(run("gen --help").out, nullptr, false).is_discarded());  // help is text
}

TEST_CASE("scale emits rows and a CSV") {
    const fs::path csv = work_dir() / "rows.csv";
    const RunResult r =
        run("scale --sizes 10,12 --trials 1 --p 0.3 --seed 2 --output " + csv.string());
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("rows").size() == 2);
    REQUIRE(fs::exists(csv));
    const std::string text = slurp(csv);
    CHECK(text.rfind("n,trial,seed,edges,bound,ratio\n", 0) == 0);
}
