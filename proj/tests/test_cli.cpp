#include "netdist/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using netdist::cli::run;
using nlohmann::json;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("netdist_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    std::ofstream(path / name) << content;
    return (path / name).string();
  }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t count_lines(const fs::path& p) {
  const auto text = slurp(p);
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("compare reports every distance") {
  TempDir dir;
  const auto k3 = dir.file("k3.edges", "0 1\n1 2\n0 2\n");
  const auto p3 = dir.file("p3.edges", "0 1\n1 2\n");
  const auto p4 = dir.file("p4.edges", "0 1\n1 2\n2 3\n");
  const auto split = dir.file("split.edges", "0 1\n2 3\n");

  auto same = invoke({"compare", k3, k3, "--all"});
  REQUIRE(same.code == 0);
  const auto report = json::parse(same.out);
  CHECK(report["distances"].size() == 8);
  for (const auto& [id, value] : report["distances"].items()) CHECK(value.get<double>() == 0.0);

  auto edit = invoke({"compare", k3, p3, "--edit"});
  REQUIRE(edit.code == 0);
  CHECK(json::parse(edit.out)["distances"]["edit"] == 2.0);

  auto mismatch = invoke({"compare", k3, p4, "--edit"});
  CHECK(mismatch.code == 3);
  CHECK(mismatch.err.find("SizeMismatch") != std::string::npos);

  auto disconnected = invoke({"compare", split, p4, "--resistance"});
  CHECK(disconnected.code == 3);
  CHECK(disconnected.err.find("Disconnected") != std::string::npos);

  auto renorm = invoke({"compare", split, p4, "--resistance-renormalized", "--penalty", "4"});
  REQUIRE(renorm.code == 0);
  CHECK(json::parse(renorm.out)["distances"]["resistance_renormalized_penalty4"] == 16.0);

  auto spectral = invoke({"compare", k3, p3, "--distances", "spectral_adjacency,spectral_laplacian", "--k", "1"});
  REQUIRE(spectral.code == 0);
  const auto sj = json::parse(spectral.out)["distances"];
  CHECK(sj["spectral_adjacency_k1"].get<double>() == doctest::Approx(2.0 - std::sqrt(2.0)));
  CHECK(sj["spectral_laplacian_k1"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));

  auto options = invoke({"compare", k3, p3, "--distances", "spectral_adjacency:p=inf"});
  REQUIRE(options.code == 0);
  CHECK(json::parse(options.out)["distances"].contains("spectral_adjacency_pinf"));

  const auto out_file = dir / "report.json";
  REQUIRE(invoke({"compare", k3, p3, "--edit", "--out", out_file}).code == 0);
  CHECK(json::parse(slurp(out_file))["distances"]["edit"] == 2.0);
}

TEST_CASE("compare usage errors exit 2") {
  TempDir dir;
  const auto k3 = dir.file("k3.edges", "0 1\n1 2\n0 2\n");
  const auto bad = dir.file("bad.edges", "0 one\n");
  CHECK(invoke({"compare", k3, bad, "--edit"}).code == 2);
  CHECK(invoke({"compare", k3, dir / "missing.edges"}).code == 2);
  CHECK(invoke({"compare", k3}).code == 2);
  CHECK(invoke({"compare", k3, k3, "--distances", "hamming"}).code == 2);
  CHECK(invoke({"compare", k3, k3, "--k", "0", "--spectral-adjacency"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("generate writes edge lists and a manifest") {
  TempDir dir;
  auto pa = invoke({"generate", "--model", "pa", "--n", "100", "--l", "6", "--count", "3", "--seed", "1",
                    "--out", dir / "pa"});
  REQUIRE(pa.code == 0);
  for (const char* name : {"0000.edges", "0001.edges", "0002.edges"}) {
    CHECK(count_lines(dir.path / "pa" / name) == 564);
  }
  CHECK_FALSE(fs::exists(dir.path / "pa" / "0003.edges"));
  const auto manifest = json::parse(slurp(dir.path / "pa" / "manifest.json"));
  CHECK(manifest["config"]["ensemble"]["params"]["l"] == 6);
  CHECK(manifest["outputs"].size() == 3);
  CHECK(manifest["run"].contains("timing_seconds"));

  REQUIRE(invoke({"generate", "--model", "pa", "--n", "100", "--l", "6", "--count", "3", "--seed", "1",
                  "--out", dir / "again"}).code == 0);
  CHECK(slurp(dir.path / "pa" / "0002.edges") == slurp(dir.path / "again" / "0002.edges"));

  REQUIRE(invoke({"generate", "--model", "lattice2d", "--rows", "2", "--cols", "2", "--out", dir / "lat"}).code == 0);
  CHECK(slurp(dir.path / "lat" / "0000.edges") == "0 1\n0 2\n1 3\n2 3\n");

  REQUIRE(invoke({"generate", "--model", "random_degree_sequence", "--degrees", "2,2,2,1,1", "--out", dir / "rds"}).code == 0);
  CHECK(count_lines(dir.path / "rds" / "0000.edges") == 4);
}

TEST_CASE("generate error codes") {
  TempDir dir;
  CHECK(invoke({"generate", "--model", "gnp", "--n", "10", "--p", "1.5", "--out", dir / "x"}).code == 2);
  CHECK(invoke({"generate", "--model", "gnp", "--p", "0.5", "--out", dir / "x"}).code == 2);
  CHECK(invoke({"generate", "--model", "ergm", "--n", "5", "--out", dir / "x"}).code == 2);
  CHECK(invoke({"generate", "--model", "ws", "--n", "10", "--k-ring", "3", "--beta", "0.1", "--out", dir / "x"}).code == 2);
  const auto exhausted = invoke({"generate", "--model", "gnp", "--n", "10", "--p", "0", "--connected",
                                 "--max-retries", "3", "--out", dir / "x"});
  CHECK(exhausted.code == 6);
  CHECK(exhausted.err.find("RetriesExhausted") != std::string::npos);
}

TEST_CASE("generate falls back to NETDIST_SEED") {
  TempDir dir;
  ::setenv("NETDIST_SEED", "42", 1);
  REQUIRE(invoke({"generate", "--model", "gnp", "--n", "30", "--p", "0.2", "--out", dir / "env"}).code == 0);
  ::unsetenv("NETDIST_SEED");
  REQUIRE(invoke({"generate", "--model", "gnp", "--n", "30", "--p", "0.2", "--seed", "42", "--out", dir / "flag"}).code == 0);
  REQUIRE(invoke({"generate", "--model", "gnp", "--n", "30", "--p", "0.2", "--seed", "43", "--out", dir / "other"}).code == 0);
  CHECK(slurp(dir.path / "env" / "0000.edges") == slurp(dir.path / "flag" / "0000.edges"));
  CHECK(slurp(dir.path / "env" / "0000.edges") != slurp(dir.path / "other" / "0000.edges"));
}

TEST_CASE("benchmark outputs are deterministic") {
  TempDir dir;
  for (const char* sub : {"a", "b"}) {
    const auto r = invoke({"benchmark", "--preset", "sbm", "--seed", "7", "--samples", "12", "--threads", "2",
                           "--out", dir / sub});
    REQUIRE(r.code == 0);
  }
  for (const char* name : {"results.json", "boxstats.csv", "sweeps.csv"}) {
    CAPTURE(name);
    CHECK(slurp(dir.path / "a" / name) == slurp(dir.path / "b" / name));
  }
  auto ma = json::parse(slurp(dir.path / "a" / "manifest.json"));
  auto mb = json::parse(slurp(dir.path / "b" / "manifest.json"));
  ma.erase("run");
  mb.erase("run");
  CHECK(ma == mb);
  CHECK(ma["config"]["seed"] == 7);
  CHECK(ma["config"]["samples"] == 12);

  const auto box = slurp(dir.path / "a" / "boxstats.csv");
  CHECK(box.rfind("distance_id,k,median,q1,q3,p5,p95\n", 0) == 0);
  CHECK(box.find("\nspectral_adjacency_k2,2,") != std::string::npos);
  CHECK(box.find("\nedit,,") != std::string::npos);
  CHECK(count_lines(dir.path / "a" / "sweeps.csv") == 1 + 11 + 10 + 10);
  const auto results = json::parse(slurp(dir.path / "a" / "results.json"));
  CHECK(results["results"].size() == 9);
  CHECK(results["results"][0]["d1_hat"].size() == 12);
}

TEST_CASE("benchmark reruns from its own manifest config") {
  TempDir dir;
  REQUIRE(invoke({"benchmark", "--preset", "pa", "--samples", "6", "--skip-sweeps", "--threads", "1", "--out", dir / "a"}).code == 0);
  const auto manifest = json::parse(slurp(dir.path / "a" / "manifest.json"));
  const auto cfg = dir.file("cfg.json", manifest["config"].dump());
  REQUIRE(invoke({"benchmark", "--config", cfg, "--skip-sweeps", "--out", dir / "b"}).code == 0);
  CHECK(slurp(dir.path / "a" / "results.json") == slurp(dir.path / "b" / "results.json"));
}

TEST_CASE("benchmark error codes") {
  TempDir dir;
  CHECK(invoke({"benchmark", "--preset", "nope", "--out", dir / "x"}).code == 2);
  CHECK(invoke({"benchmark", "--out", dir / "x"}).code == 2);
  CHECK(invoke({"benchmark", "--config", dir.file("bad.json", "{not json"), "--out", dir / "x"}).code == 2);
  CHECK(invoke({"benchmark", "--config", dir.file("incomplete.json", R"({"null":{"model":"gnp","n":5,"params":{"p":0.5}}})"),
                "--out", dir / "x"}).code == 2);
  const auto lattice = dir.file("lattice.json", R"({
    "null": {"model": "lattice2d", "params": {"rows": 3, "cols": 3}},
    "alternative": {"model": "lattice2d", "params": {"rows": 3, "cols": 3}},
    "distances": ["edit"], "samples": 5, "seed": 1})");
  const auto degenerate = invoke({"benchmark", "--config", lattice, "--out", dir / "x"});
  CHECK(degenerate.code == 4);
  CHECK(degenerate.err.find("DegenerateNull") != std::string::npos);
}

TEST_CASE("anomaly over contact events") {
  TempDir dir;
  const auto events = dir.file("events.csv",
                               "t,u,v\n0.1,0,1\n0.5,2,3\n1.2,0,1\n1.7,2,3\n2.1,0,2\n2.4,1,3\n");
  auto r = invoke({"anomaly", "--events", events, "--t-start", "0", "--t-end", "3", "--intervals", "3",
                   "--distances", "edit,deltacon", "--out", dir / "out"});
  REQUIRE(r.code == 0);
  const auto csv = slurp(dir.path / "out" / "series_edit.csv");
  CHECK(csv == "index,t_label,raw,normalized\n0,1,0,0\n1,2,8,2\n");
  CHECK(fs::exists(dir.path / "out" / "series_deltacon.csv"));
  const auto summary = json::parse(r.out);
  CHECK(summary["edit"]["top"][0]["index"] == 1);
  CHECK(summary["deltacon"]["top"][0]["index"] == 1);
  const auto manifest = json::parse(slurp(dir.path / "out" / "manifest.json"));
  CHECK(manifest["outputs"].size() == 2);
  CHECK(manifest["config"]["input"]["intervals"] == 3);
}

TEST_CASE("anomaly over an edge-list directory") {
  TempDir dir;
  fs::create_directories(dir.path / "steps");
  std::ofstream(dir.path / "steps" / "0000.edges") << "0 1\n1 2\n";
  std::ofstream(dir.path / "steps" / "0001.edges") << "0 1\n1 2\n";
  std::ofstream(dir.path / "steps" / "0002.edges") << "0 1\n1 2\n2 3\n0 3\n";
  auto r = invoke({"anomaly", "--edges-dir", dir / "steps", "--distances", "resistance", "--out", dir / "out"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("renormalized") != std::string::npos);
  CHECK(fs::exists(dir.path / "out" / "series_resistance_renormalized.csv"));
}

TEST_CASE("anomaly error codes") {
  TempDir dir;
  const auto empty = dir.file("empty.csv", "t,u,v\n");
  const auto zero = invoke({"anomaly", "--events", empty, "--t-start", "0", "--t-end", "10", "--intervals", "3",
                            "--n", "4", "--out", dir / "x"});
  CHECK(zero.code == 5);
  CHECK(zero.err.find("ZeroMean") != std::string::npos);
  CHECK(invoke({"anomaly", "--events", dir.file("bad.csv", "t,u,v\n1,2\n"), "--intervals", "3", "--out", dir / "x"}).code == 2);
  CHECK(invoke({"anomaly", "--events", empty, "--intervals", "1", "--out", dir / "x"}).code == 2);
  CHECK(invoke({"anomaly", "--edges-dir", dir / "nowhere", "--out", dir / "x"}).code == 2);
  CHECK(invoke({"anomaly", "--out", dir / "x"}).code == 2);
}
