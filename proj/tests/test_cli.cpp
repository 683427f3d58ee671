#include "doctest.h"

#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Run the installed CLI binary through the shell and capture stdout.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + " \"" + HALIN_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  if (end == std::string::npos) return "";
  auto start = text.rfind('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1,
                     end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("dist: recurrence engine, JSON format") {
  auto r = run_cli("dist --m 1,1 --engine recurrence --format json");
  CHECK(r.exit_code == 0);
  CHECK(last_line(r.out) == R"(["2","22","160","424","416"])");
}

TEST_CASE("dist: all four engines agree on a two-block tuple") {
  const std::string expected = R"(["2","38","496","3336","13408","27008","21248"])";
  for (std::string engine : {"recurrence", "matrix", "embedding", "genfun"}) {
    auto r = run_cli("dist --m 2,2 --engine " + engine + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(last_line(r.out) == expected);
  }
}

TEST_CASE("dist: text and CSV formats") {
  auto text = run_cli("dist --m 1");
  CHECK(text.exit_code == 0);
  CHECK(last_line(text.out) == "2 + 6*z + 8*z^2");

  auto csv = run_cli("dist --m 1 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "0,2\n1,6\n2,8\n");
}

TEST_CASE("dist: invalid tuples exit 2") {
  CHECK(run_cli("dist --m 0").exit_code == 2);
  CHECK(run_cli("dist --m 0,2").exit_code == 2);
  CHECK(run_cli("dist --m 2,x").exit_code == 2);
  CHECK(run_cli("dist").exit_code == 2);           // --m is required
  CHECK(run_cli("dist --m 1 --engine nosuch").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);               // a subcommand is required
}

TEST_CASE("dist: non-strict tuples are rejected by enumeration engines") {
  CHECK(run_cli("dist --m 2,0 --engine matrix").exit_code == 2);
  CHECK(run_cli("dist --m 2,0 --engine embedding").exit_code == 2);
  CHECK(run_cli("dist --m 2,0 --engine genfun").exit_code == 2);
  // The recurrence engine handles the extended form.
  auto r = run_cli("dist --m 2,0 --format json");
  CHECK(r.exit_code == 0);
  CHECK(last_line(r.out) == last_line(run_cli("dist --m 3 --format json").out));
}

TEST_CASE("dist: budget overruns exit 3") {
  CHECK(run_cli("dist --engine matrix --m 3,3 --budget-bits 10").exit_code == 3);
  CHECK(run_cli("dist --engine embedding --m 3,3 --budget-bits 10").exit_code == 3);
}

TEST_CASE("dist: unsupported engine domains exit 4") {
  CHECK(run_cli("dist --engine genfun --m 5").exit_code == 4);
}

TEST_CASE("dist: genfun truncation override changes nothing") {
  auto def = run_cli("dist --engine genfun --m 2,2 --format json");
  auto wide = run_cli("dist --engine genfun --m 2,2 --trunc 4,4 --format json");
  CHECK(def.exit_code == 0);
  CHECK(wide.exit_code == 0);
  CHECK(last_line(def.out) == last_line(wide.out));
  CHECK(run_cli("dist --engine genfun --m 2,2 --trunc 1,1").exit_code == 2);
}

TEST_CASE("dist: graph dump") {
  auto r = run_cli("dist --m 1,1 --dump-graph");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["vertices"].size() == 6);
  CHECK(doc["edges"].size() == 9);
}

TEST_CASE("closed: worked values") {
  auto a = run_cli("closed --m 2,2,2 --genus 1");
  CHECK(a.exit_code == 0);
  CHECK(last_line(a.out) == "62");

  auto b = run_cli("closed --m 1,2,3 --genus 2");
  CHECK(b.exit_code == 0);
  CHECK(last_line(b.out) == "1400");

  auto c = run_cli("closed --m 1,1 --genus 0");
  CHECK(c.exit_code == 0);
  CHECK(last_line(c.out) == "2");
}

TEST_CASE("closed: domain limits") {
  CHECK(run_cli("closed --m 3 --genus 2").exit_code == 4);   // single-entry, genus 2
  CHECK(run_cli("closed --m 1,1 --genus 3").exit_code == 2); // out of the flag range
  CHECK(run_cli("closed --m 2,0 --genus 2").exit_code == 2); // non-strict
  CHECK(run_cli("closed --m 1,1").exit_code == 2);           // --genus is required
}

TEST_CASE("canon: rewrites and reversal") {
  CHECK(last_line(run_cli("canon --m 2,2,3,0").out) == "2,2,4");
  CHECK(last_line(run_cli("canon --m 2,2,2,1").out) == "2,2,4");
  CHECK(last_line(run_cli("canon --m 3,1,2").out) == "2,1,3");
  CHECK(last_line(run_cli("canon --m 1,1").out) == "3");
  CHECK(last_line(run_cli("canon --m 5,2").out) == "2,5");
}

TEST_CASE("crosscheck: default engines agree") {
  auto r = run_cli("crosscheck --m 1,1");
  CHECK(r.exit_code == 0);
  CHECK(last_line(r.out) == "MATCH");
  CHECK(r.out.find("recurrence:") != std::string::npos);
  CHECK(r.out.find("matrix:") != std::string::npos);
  CHECK(r.out.find("embedding:") != std::string::npos);
}

TEST_CASE("crosscheck: explicit engine list") {
  auto r = run_cli("crosscheck --m 2,1 --engines recurrence,genfun");
  CHECK(r.exit_code == 0);
  CHECK(last_line(r.out) == "MATCH");
  CHECK(run_cli("crosscheck --m 2,1 --engines recurrence").exit_code == 2);
}

TEST_CASE("series: JSON dump carries the two-block coefficients") {
  auto r = run_cli("series --m 1,1 --which E1");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  bool found_const = false, found_top = false;
  for (const auto& row : doc) {
    if (row["t"] == nlohmann::json::array({1, 1})) {
      if (row["z"] == 0 && row["c"] == "2") found_const = true;
      if (row["z"] == 4 && row["c"] == "416") found_top = true;
    }
  }
  CHECK(found_const);
  CHECK(found_top);
  CHECK(run_cli("series --m 5").exit_code == 4);  // single-variable bundle unsupported
}

TEST_CASE("dist: cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "halin-cli-cache-test";
  fs::remove_all(dir);

  auto fresh = run_cli("dist --m 1,1 --cache-dir " + dir.string() + " --format json");
  CHECK(fresh.exit_code == 0);
  // The entry is keyed by the canonical tuple (1,1) ~ (3).
  CHECK(fs::exists(dir / "3.json"));

  auto cached = run_cli("dist --m 1,1 --cache-dir " + dir.string() + " --format json");
  CHECK(cached.exit_code == 0);
  CHECK(cached.out == fresh.out);

  // The isomorphic tuple hits the same entry.
  auto iso = run_cli("dist --m 3 --cache-dir " + dir.string() + " --format json");
  CHECK(iso.exit_code == 0);
  CHECK(iso.out == fresh.out);

  // The environment variable is an alternative spelling of --cache-dir.
  auto env = run_cli("dist --m 2,1 --format json",
                     "HGD_CACHE_DIR=" + dir.string());
  CHECK(env.exit_code == 0);
  CHECK(fs::exists(dir / "4.json"));

  // A corrupt cache entry is recomputed, not trusted.
  {
    std::FILE* f = std::fopen((dir / "3.json").string().c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("not json", f);
    std::fclose(f);
  }
  auto recomputed = run_cli("dist --m 1,1 --cache-dir " + dir.string() + " --format json");
  CHECK(recomputed.exit_code == 0);
  CHECK(recomputed.out == fresh.out);

  fs::remove_all(dir);
}
