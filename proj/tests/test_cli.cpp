#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "schottky/generate.hpp"
#include "schottky/io.hpp"

using namespace schottky;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// run the installed binary through the shell, capturing stdout and exit code
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SCHOTTKY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_tmp(const std::string& name, const std::string& body) {
  std::string path = "tmp_cli_" + name;
  std::ofstream f(path, std::ios::binary);
  REQUIRE(f.good());
  f << body;
  return path;
}

std::string good_marking_file() {
  static std::string path =
      write_tmp("good.json", serialize_group(from_marking(random_classical_marking(2, 11, 0.5))));
  return path;
}

std::string rank1_file() {
  static std::string path = [] {
    GroupFile g;
    g.generators = {make_mobius(2, 0, 0, 0.5)};
    return write_tmp("rank1.json", serialize_group(g));
  }();
  return path;
}

} // namespace

TEST_CASE("cli: verify accepts a classical marking and rejects a broken one") {
  RunResult ok = run_cli("verify " + good_marking_file());
  CHECK(ok.code == 0);
  CHECK(ok.out.find("verified") == 0);

  // inflate the disks: well-formed file, failed verification
  Marking m = random_classical_marking(2, 11, 0.5);
  for (Disk& d : m.disks) d.radius *= 4.0;
  std::string bad = write_tmp("overlap.json", serialize_group(from_marking(m)));
  RunResult fail = run_cli("verify " + bad + " --json");
  CHECK(fail.code == 1);
  nlohmann::json j = nlohmann::json::parse(fail.out);
  CHECK(j["verified"] == false);
  CHECK(!j["failures"].empty());
}

TEST_CASE("cli: malformed input exits 2") {
  std::string garbled = write_tmp("garbled.json", "{\"format_version\": 1}");
  CHECK(run_cli("verify " + garbled).code == 2);
  std::string notjson = write_tmp("notjson.json", "hello");
  CHECK(run_cli("dim " + notjson).code == 2);
  // structurally fine, but verify needs disks
  CHECK(run_cli("verify " + rank1_file()).code == 2);
  // unknown flag / missing subcommand
  CHECK(run_cli("verify --frobnicate x").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("cli: gen-random output feeds verify") {
  RunResult gen = run_cli("gen-random --rank 2 --seed 7");
  CHECK(gen.code == 0);
  GroupFile g = parse_group(gen.out);
  CHECK(g.generators.size() == 2);
  CHECK(g.disks.size() == 4);
  CHECK(g.name == "random-classical");
  CHECK(g.has_seed);
  CHECK(g.seed == 7);
  CHECK(verify_marking(to_marking(g)).verified);

  std::string path = write_tmp("gen2.json", gen.out);
  CHECK(run_cli("verify " + path).code == 0);
  // and through stdin
  CHECK(run_cli("verify - < " + path).code == 0);

  RunResult gen5 = run_cli("gen-random --rank 5 --seed 3");
  CHECK(parse_group(gen5.out).disks.size() == 10);
}

TEST_CASE("cli: dim reports the degenerate rank-1 bound") {
  RunResult r = run_cli("dim " + rank1_file() + " --max-len 6 --json");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["D_low"] == 0.0);
  CHECK(j["rank_too_small"] == true);
  CHECK(j["D_series"].get<double>() <= 0.05);

  // basepoint must sit above the boundary
  CHECK(run_cli("dim " + rank1_file() + " --basepoint 0 0 0").code == 2);
}

TEST_CASE("cli: limit-set row count matches the reduced-word count") {
  RunResult r = run_cli("limit-set " + good_marking_file() + " --max-len 3");
  CHECK(r.code == 0);
  std::size_t lines = 0;
  for (char c : r.out)
    if (c == '\n') lines++;
  // header + 4 + 12 + 36 reduced words of length <= 3 in rank 2
  CHECK(lines == 1 + 52);
  CHECK(r.out.rfind("re,im,word_len\n", 0) == 0);

  std::string svg = "tmp_cli_limit.svg";
  CHECK(run_cli("limit-set " + good_marking_file() + " --max-len 3 --svg " + svg).code == 0);
  std::ifstream f(svg);
  std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(body.find("<svg") == 0);
}

TEST_CASE("cli: certify-pair") {
  CHECK(run_cli("certify-pair " + good_marking_file() + " --index 0").code == 0);
  CHECK(run_cli("certify-pair " + good_marking_file() + " --index 1").code == 0);
  CHECK(run_cli("certify-pair " + good_marking_file() + " --index 9").code == 2);
  RunResult j = run_cli("certify-pair " + good_marking_file() + " --json");
  nlohmann::json body = nlohmann::json::parse(j.out);
  CHECK(body["check"]["ok"] == true);
}

TEST_CASE("cli: search-classical finds and traces") {
  std::string trace = "tmp_cli_trace.json";
  RunResult r =
      run_cli("search-classical " + rank1_file() + " --json --trace-out " + trace);
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "classical_found");
  CHECK(j["found"] == true);
  CHECK(j.contains("marking"));
  std::ifstream f(trace);
  REQUIRE(f.good());
  nlohmann::json t = nlohmann::json::parse(f);
  CHECK(t.is_array());

  CHECK(run_cli("search-classical " + good_marking_file() + " --annulus below").code == 0);
  CHECK(run_cli("search-classical " + good_marking_file() + " --annulus sideways").code == 2);
}

TEST_CASE("cli: deterministic output, quiet mode") {
  std::string cmd = "dim " + good_marking_file() + " --max-len 5 --json";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());

  RunResult q = run_cli("verify " + good_marking_file() + " --quiet");
  CHECK(q.code == 0);
  CHECK(q.out.empty());
}
