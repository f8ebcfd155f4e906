#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bernlab/io.hpp"
#include "cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = bernlab::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("constant for p = 1, alpha = 1") {
    const Run r = run({"constant", "--p", "1", "--alpha", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2.4674011") != std::string::npos);
    const auto doc = bernlab::Json::parse(r.out);
    CHECK(doc["command"] == "constant");
    CHECK(doc["result"]["value"].get<double>() == doctest::Approx(2.4674011002723395));
  }

  TEST_CASE("help exits 0") {
    const Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
    CHECK(run({"converge", "--help"}).code == 0);
  }

  TEST_CASE("p < 1 is a usage error with a machine-readable field") {
    const Run r = run({"error", "--p", "0.5", "--alpha", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("p < 1 unsupported") != std::string::npos);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    const auto doc = bernlab::Json::parse(r.out);
    CHECK(doc["error"]["kind"] == "UnsupportedExponent");
    CHECK(doc["error"]["message"] == "p < 1 unsupported");
  }

  TEST_CASE("malformed arguments exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"error", "--degree", "x"}).code == 2);
    CHECK(run({"error", "--variant", "tan"}).code == 2);
    CHECK(run({"error", "--format", "xml"}).code == 2);
    CHECK(run({"constant", "--p", "3"}).code == 2);
    CHECK(run({"mu", "--tol", "0.1"}).code == 2);
  }

  TEST_CASE("defaults are materialised in the echo") {
    const Run r = run({"error", "--alpha", "1", "--p", "inf", "--degree", "2"});
    CHECK(r.code == 0);
    const auto doc = bernlab::Json::parse(r.out);
    const auto& params = doc["parameters"];
    for (const char* key : {"alpha", "beta", "variant", "p", "degree", "half_width", "grid_floor", "nodes_per_panel"}) {
      CHECK(params.contains(key));
    }
    CHECK(params["p"] == "inf");
    CHECK(doc["result"]["error"].get<double>() == doctest::Approx(0.125).epsilon(1e-9));
  }

  TEST_CASE("the echo reproduces the run") {
    const Run first = run({"converge", "--alpha", "0.5", "--p", "2", "--degrees", "4,8,16"});
    const auto params = bernlab::Json::parse(first.out)["parameters"];
    std::vector<std::string> args{"converge"};
    args.insert(args.end(), {"--alpha", params["alpha"].dump(), "--beta", params["beta"].dump()});
    args.insert(args.end(), {"--variant", params["variant"].get<std::string>()});
    args.insert(args.end(), {"--p", params["p"].dump(), "--method", params["method"].get<std::string>()});
    std::string degrees;
    for (const auto& d : params["degrees"]) degrees += (degrees.empty() ? "" : ",") + d.dump();
    args.insert(args.end(), {"--degrees", degrees, "--grid-floor", params["grid_floor"].dump()});
    args.insert(args.end(), {"--nodes-per-panel", params["nodes_per_panel"].dump()});
    CHECK(run(args).out == first.out);
  }

  TEST_CASE("JSON output round-trips byte for byte") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"constant", "--p", "2", "--alpha", "0", "--beta", "1"},
             {"error", "--alpha", "0.5", "--beta", "1", "--p", "1", "--degree", "4"},
             {"converge", "--alpha", "0.5", "--p", "2", "--degrees", "4,8,16"},
             {"mu"},
             {"bound-check", "--degrees", "4,5"},
             {"scaling-check", "--alpha", "1", "--p", "2", "--degree", "3"}}) {
      const Run r = run(args);
      CHECK(r.code == 0);
      CHECK(bernlab::Json::parse(r.out).dump(2) + "\n" == r.out);
    }
  }

  TEST_CASE("identical argv gives identical output, parallel rows included") {
    const std::vector<std::string> args{"converge", "--alpha", "0.5", "--beta", "1", "--p", "1", "--degrees", "4,6,8,10"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    std::vector<std::string> serial = args;
    serial.push_back("--serial");
    const auto pa = bernlab::Json::parse(a.out)["result"];
    const auto pb = bernlab::Json::parse(run(serial).out)["result"];
    CHECK(pa == pb);
  }

  TEST_CASE("CSV and plain formats") {
    const Run csv = run({"converge", "--alpha", "0.5", "--p", "2", "--degrees", "4,8,16", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find("# command = converge\n") == 0);
    CHECK(csv.out.find("n,error,scaled,reference,gap\n") != std::string::npos);
    const Run plain = run({"mu", "--format", "plain"});
    CHECK(plain.out.find("value = 1.50887956") != std::string::npos);
  }

  TEST_CASE("--output writes the report to a file") {
    const auto path = std::filesystem::temp_directory_path() / "bernlab_cli_test.json";
    const Run r = run({"mu", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(bernlab::Json::parse(text.str())["result"]["value"].get<double>() == doctest::Approx(1.508879));
    std::filesystem::remove(path);
    CHECK(run({"mu", "--output", "/nonexistent-dir/x.json"}).code == 2);
  }

  TEST_CASE("domain failures inside a table exit 2") {
    const Run r = run({"converge", "--alpha", "-0.5", "--p", "inf", "--degrees", "2,4,8"});
    CHECK(r.code == 2);
    CHECK(bernlab::Json::parse(r.out)["result"]["partial"] == true);
  }
}
