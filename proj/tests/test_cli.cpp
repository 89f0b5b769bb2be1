#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rainbow/cli.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/io.hpp"
#include "rainbow/transform.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("rainbow_cli_" + std::to_string(std::rand()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& contents) const {
    const auto p = (path / name).string();
    io::write_file(p, contents);
    return p;
  }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate matches the library") {
    const auto r = run({"generate", "gk", "--n", "7", "--k", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == io::to_edgelist(build_gk(7, 2).graph));
    CHECK(run({"generate", "hnk", "--n", "9", "--k", "6", "--format", "json"}).out ==
          io::to_json(build_hnk(9, 6).graph));

    TempDir dir;
    const auto path = (dir.path / "t.txt").string();
    CHECK(run({"generate", "turan", "--n", "7", "--parts", "3", "--rainbow", "--out", path}).code == kExitOk);
    CHECK(io::read_file(path) == io::to_edgelist(turan_graph(7, 3, true).graph));
    const auto meta = nlohmann::json::parse(io::read_file(path + ".meta.json"));
    CHECK(meta.contains("parts"));
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    const auto pre = run({"generate", "gk", "--n", "5", "--k", "2"});
    CHECK(pre.code == kExitPrecondition);
    CHECK(pre.err.find("3k") != std::string::npos);
    CHECK(run({"analyze", "/nonexistent/graph.txt"}).code == kExitUsage);
    CHECK(run({"verify", "T9"}).code == kExitUsage);
    CHECK(run({"verify", "T1", "--n-max", "4"}).code == kExitOk);
  }

  TEST_CASE("parse errors name the line") {
    TempDir dir;
    const auto bad = run({"analyze", dir.file("bad.txt", "3 2\n0 1 1\n1 1 2\n")});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("line 3") != std::string::npos);
  }

  TEST_CASE("analyze report") {
    TempDir dir;
    const auto r = run({"analyze", dir.file("tri.txt", "4 4\n0 1 0\n0 2 1\n1 2 2\n2 3 0\n")});
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["m"] == 4);
    CHECK(doc["c"] == 3);
    CHECK(doc["m_plus_c"] == 7);
    CHECK(doc["rainbow_triangles"]["count"] == 1);
    CHECK(doc["thresholds"]["T1"]["threshold"] == 10);
    CHECK(doc["thresholds"]["T1"]["met"] == false);
  }

  TEST_CASE("check verdicts") {
    TempDir dir;
    const auto gk = dir.file("gk.json", io::to_json(build_gk(7, 2).graph));
    CHECK(run({"check", "gk", gk, "--k", "2", "--verdict"}).out == "member\n");
    CHECK(run({"check", "gk", gk, "--k", "1", "--verdict"}).out == "not a member\n");
    const auto hk = dir.file("hk.txt", io::to_edgelist(build_hnk(9, 6).graph));
    CHECK(run({"check", "hk", hk, "--k", "6", "--verdict"}).out == "member\n");
    const auto cert = nlohmann::json::parse(run({"check", "hk", hk, "--k", "6"}).out);
    CHECK_FALSE(cert.is_null());
  }

  TEST_CASE("transforms") {
    TempDir dir;
    const auto cyc = dir.file("cyc.txt", "3 3\n0 1\n1 2\n2 0\n");
    const auto omega = nlohmann::json::parse(run({"transform", "omega", cyc}).out);
    CHECK(omega["omega"] == nlohmann::json::array({1, 1, 1}));
    CHECK(omega["directed_triangles"] == 1);

    const auto assoc = run({"transform", "associate", cyc});
    const auto g = io::parse_edgelist(assoc.out);
    CHECK(g.c() == omega["omega_sum"].get<int>());

    const auto p3 = dir.file("p3.txt", "3 2\n0 1 4\n1 2 4\n");
    const auto d = io::parse_digraph(run({"transform", "orient", p3}).out);
    CHECK(d.has_arc(1, 0));
    CHECK(d.has_arc(1, 2));
    const auto prov = nlohmann::json::parse(run({"transform", "orient", p3, "--provenance"}).out);
    CHECK(prov["arcs"][0]["origin"] == "p3-forced");

    const auto p4 = dir.file("p4.txt", "4 3\n0 1 4\n1 2 4\n2 3 4\n");
    CHECK(run({"transform", "orient", p4}).code == kExitPrecondition);
  }

  TEST_CASE("convert") {
    TempDir dir;
    const auto g = build_gk(7, 2).graph;
    const auto src = dir.file("g.txt", io::to_edgelist(g));
    const auto json = run({"convert", src, "--to", "json"});
    CHECK(json.out == io::to_json(g));
    const auto back = run({"convert", dir.file("g.json", json.out), "--to", "edgelist"});
    CHECK(back.out == io::to_edgelist(g));
    const auto dot = run({"convert", src, "--to", "dot"});
    CHECK(dot.out == io::to_dot(g));
    CHECK(dot.out.find("graph") != std::string::npos);
  }

  TEST_CASE("verify output") {
    const auto r = run({"verify", "L1", "--n-max", "4", "--json"});
    CHECK(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["theorem"] == "L1");
    CHECK(doc["grid"]["n_max"] == 4);
  }
}
