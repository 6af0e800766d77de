#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GINPROD_CLI_PATH) + " " + args + " 2>/dev/null";
  CommandResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("moment: large-N value as JSON") {
    const auto res = run_cli("moment --word xdxdxd --factors 2");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    CHECK(j["value"]["num"] == "12");
    CHECK(j["mode"] == "large_n");
    CHECK(j["tc_provenance"] == "formula");
  }

  TEST_CASE("moment: trivial word at five factors") {
    const auto res = run_cli("moment --word xd --factors 5 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find(",1\n") != std::string::npos);
  }

  TEST_CASE("moment: finite-N rational function") {
    const auto res = run_cli("moment --word xdxdxd --factors 2 --finite-n");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    CHECK(j["mode"] == "finite_n");
    CHECK(j["value_str"] == "12 + 21/N^2 + 3/N^4");
  }

  TEST_CASE("moment: exponent-form word pattern") {
    const auto res = run_cli("moment --word '2,1;1,2' --factors 1");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    CHECK(j["word"] == "xxdxdd");
    CHECK(j["tc_provenance"] == "enumeration");
  }

  TEST_CASE("moment: symbolic trace polynomial output") {
    const auto res = run_cli("moment --word xdxd --factors 2 --symbolic");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.output);
    CHECK(j["sigma_power"] == 4);
    CHECK(j["terms"].size() == 2);
  }

  TEST_CASE("usage errors exit 64") {
    CHECK(run_cli("moment --word qq --factors 2").exit_code == 64);
    CHECK(run_cli("moment --word xd").exit_code == 64);             // missing --factors
    CHECK(run_cli("moment --word xd --factors 3 --finite-n").exit_code == 64);
    CHECK(run_cli("mc --word xd --factors 1").exit_code == 64);     // missing --seed
    CHECK(run_cli("enumerate").exit_code == 64);
    CHECK(run_cli("nonsense").exit_code == 64);
  }

  TEST_CASE("capacity errors exit 65") {
    CHECK(run_cli("moment --word xdxdxdxdxdxdxdxdxdxdxdxdxd --factors 2").exit_code == 65);
    CHECK(run_cli("moment --word xdxdxdxdxdxdxdxdxd --factors 2 --finite-n").exit_code == 65);
  }

  TEST_CASE("enumerate: necklaces, partitions, classified pairings") {
    const auto necklaces = run_cli("enumerate --necklaces 3");
    CHECK(necklaces.exit_code == 0);
    CHECK(necklaces.output.find("count: 4") != std::string::npos);

    const auto parts = run_cli("enumerate --partitions 4");
    CHECK(parts.exit_code == 0);
    CHECK(parts.output.find("count: 5") != std::string::npos);

    const auto pairs = run_cli("enumerate --pairings xdxd --classify");
    CHECK(pairs.exit_code == 0);
    CHECK(pairs.output.find("count: 2 (2 non-crossing)") != std::string::npos);
  }

  TEST_CASE("mc: reproducible across runs and thread counts") {
    const std::string base = "mc --word xdxd --factors 2 --size 24 --samples 20 --seed 7";
    const auto a = run_cli(base + " --threads 1");
    const auto b = run_cli(base + " --threads 2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const auto j = nlohmann::json::parse(a.output);
    CHECK(j["N"] == 24);
    CHECK(j["samples"] == 20);
    CHECK(j["mean"].is_number());
    CHECK(j["stderr"].is_number());
    CHECK(j["imag_mean"].is_number());
  }

  TEST_CASE("spectrum: CSV artifact with the fixed header") {
    const auto res = run_cli(
        "spectrum --factors 2 --size 24 --samples 1 --seed 3 --out /tmp/ginprod_radial_test.csv");
    CHECK(res.exit_code == 0);
    FILE* f = fopen("/tmp/ginprod_radial_test.csv", "r");
    REQUIRE(f != nullptr);
    char line[128];
    REQUIRE(fgets(line, sizeof line, f) != nullptr);
    CHECK(std::string(line) == "r,empirical_cdf,theory_cdf\n");
    fclose(f);
    std::remove("/tmp/ginprod_radial_test.csv");
  }

  TEST_CASE("verify --full without --seed is a usage error") {
    CHECK(run_cli("verify --full").exit_code == 64);
  }
}
