#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fibpart/cli.hpp"

using fibpart::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

}  // namespace

TEST_CASE("r") {
  CHECK(call({"r", "6"}).out == "2\n");
  CHECK(call({"r", "0"}).out == "1\n");
  CHECK(call({"r", "354224848179261915075"}).code == 0);
  CHECK(call({"r", "-4"}).code == fibpart::cli::kExitUsage);
  CHECK(call({"r", "x"}).code == fibpart::cli::kExitUsage);
}

TEST_CASE("seq") {
  const Result r = call({"seq", "--from", "0", "--to", "13"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 15);
  CHECK(ls[0] == "n,R");
  std::string values;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    CHECK(ls[i].rfind(std::to_string(i - 1) + ",", 0) == 0);
    values += (i > 1 ? "," : "") + ls[i].substr(ls[i].find(',') + 1);
  }
  CHECK(values == "1,1,1,2,1,2,2,1,3,2,2,3,1,3");
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("json output") {
  const Result r = call({"seq", "--from", "5", "--to", "8", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["n"] == 5);
  CHECK(j[3]["R"] == 3);
  const auto w = nlohmann::json::parse(call({"window", "--pattern", "1", "--format", "json"}).out);
  REQUIRE(w.size() == 2);
  CHECK(w[0]["lo_p"] == -5);
  CHECK(w[0]["lo_q"] == 3);
}

TEST_CASE("zeckendorf") {
  CHECK(call({"zeckendorf", "12"}).out == "10101\n");
  CHECK(call({"zeckendorf", "0"}).out == "\n");
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == fibpart::cli::kExitUsage);
  CHECK(call({"bogus"}).code == fibpart::cli::kExitUsage);
  CHECK(call({"r"}).code == fibpart::cli::kExitUsage);
  const Result bad = call({"seq", "--to", "3", "--format", "xml"});
  CHECK(bad.code == fibpart::cli::kExitUsage);
  CHECK(bad.out.empty());
  CHECK(!bad.err.empty());
  CHECK(call({"seq", "--from", "5", "--to", "3"}).code == fibpart::cli::kExitUsage);
  CHECK(call({"cdf", "2", "--depth", "10"}).code == fibpart::cli::kExitUsage);
  CHECK(call({"seq", "--to", "3", "--jobs", "0"}).code == fibpart::cli::kExitUsage);
  CHECK(call({"patch", "--pattern", "1,-1"}).code == fibpart::cli::kExitUsage);
}

TEST_CASE("output does not depend on the worker count") {
  const std::vector<std::vector<std::string>> commands = {
      {"seq", "--from", "0", "--to", "5000"},
      {"orbit", "--steps", "2582"},
      {"patch", "--pattern", "1", "--limit", "20000"},
      {"growth", "--from", "60", "--to", "6765"},
      {"profile", "--samples", "20", "--depth", "16"},
  };
  for (auto cmd : commands) {
    const std::string one = call(cmd).out;
    cmd.insert(cmd.end(), {"--jobs", "4"});
    CHECK(call(cmd).out == one);
  }
}

TEST_CASE("orbit, staircase, growth, cdf and profile tables") {
  const auto orbit = lines(call({"orbit", "--steps", "2582"}).out);
  CHECK(orbit.size() == 2584);
  CHECK(orbit[0] == "n,y_decimal,y_p,y_q,h_num,h_den,log_h");
  CHECK(orbit[2] == "1,0.381966011250,2,-1,1,1,0");

  const auto st = lines(call({"staircase", "--depth", "3"}).out);
  CHECK(st.size() == 31);
  CHECK(st[0].rfind("lo_dec,hi_dec,value_num,value_den", 0) == 0);

  const auto gr = lines(call({"growth", "--from", "60", "--to", "6765"}).out);
  CHECK(gr.size() == 6707);
  CHECK(gr[0] == "H,logH,ratio");

  const auto cdf = lines(call({"cdf", "phi/2", "--depth", "24"}).out);
  REQUIRE(cdf.size() == 2);
  CHECK(cdf[1].find("65535/131072,65537/131072") != std::string::npos);

  const auto pr = lines(call({"profile", "--samples", "50", "--depth", "12"}).out);
  CHECK(pr.size() == 51);

  const auto pd = lines(call({"patch", "--pattern", "1", "--limit", "1000", "--density"}).out);
  REQUIRE(pd.size() == 2);
  CHECK(pd[1].find(",-3,2,") != std::string::npos);
}

TEST_CASE("precision flag") {
  const auto ls = lines(call({"orbit", "--steps", "1", "--precision", "4"}).out);
  CHECK(ls[2] == "1,0.3820,2,-1,1,1,0");
}

TEST_CASE("out flag writes a file") {
  const auto path = std::filesystem::temp_directory_path() / "fibpart_cli_test.csv";
  const Result r = call({"seq", "--to", "3", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "n,R\n0,1\n1,1\n2,1\n3,2\n");
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  const Result r = call({"verify", "--max", "3000"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(call({"verify", "--max", "3000", "--jobs", "3"}).code == 0);
}
