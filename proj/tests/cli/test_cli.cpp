#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <unistd.h>

#include "prudent/io.hpp"
#include "prudent/walk2d.hpp"

namespace fs = std::filesystem;

namespace {

struct ScratchDir {
  fs::path path = fs::temp_directory_path() / ("prudent_cli_" + std::to_string(::getpid()));
  ScratchDir() { fs::create_directories(path); }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

const fs::path& scratch() {
  static const ScratchDir dir;
  return dir.path;
}

int run(const std::string& args, const std::string& log = "log.txt") {
  const std::string cmd = std::string(PRUDENT_CLI) + " " + args + " > " +
                          (scratch() / log).string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string at(const std::string& name) { return (scratch() / name).string(); }

}  // namespace

TEST_CASE("simulate output is identical across thread counts") {
  for (const char* variant : {"prudent2d", "corner", "walk3d", "effective", "zprocess"}) {
    const std::string base = std::string("simulate --variant ") + variant + " -n 1000 --replicas 4 --seed 7";
    REQUIRE(run(base + " --threads 1 --out " + at("one.out")) == 0);
    REQUIRE(run(base + " --threads 8 --out " + at("eight.out")) == 0);
    CHECK(slurp(at("one.out")) == slurp(at("eight.out")));
    CHECK(slurp(at("one.out.summary.json")) == slurp(at("eight.out.summary.json")));
    CHECK(!slurp(at("one.out")).empty());
  }
}

TEST_CASE("config file with flag overrides") {
  prudent::io::RunConfig c;
  c.variant = "corner";
  c.n = 200;
  c.replicas = 3;
  c.seed = 11;
  {
    std::ofstream f(at("run.cfg"));
    f << prudent::io::to_text(c);
  }
  REQUIRE(run("simulate --config " + at("run.cfg") + " --out " + at("cfg.jsonl")) == 0);
  std::ifstream in(at("cfg.jsonl"));
  const auto records = prudent::io::read_trajectories(in);
  REQUIRE(records.size() == 3);
  CHECK(records[0].variant == "corner");
  CHECK(records[0].n == 200);

  REQUIRE(run("simulate --config " + at("run.cfg") + " --replicas 1 -n 50 --out " + at("cfg2.jsonl")) == 0);
  std::ifstream in2(at("cfg2.jsonl"));
  const auto over = prudent::io::read_trajectories(in2);
  REQUIRE(over.size() == 1);
  CHECK(over[0].n == 50);
  CHECK(over[0].variant == "corner");

  {
    std::ofstream f(at("bad.cfg"));
    f << "seed = 3\nflavour = salty\n";
  }
  CHECK(run("simulate --config " + at("bad.cfg")) == 2);
  CHECK(slurp(scratch() / "log.txt").find("line 2") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("") == 2);
  CHECK(run("simulate --variant hexagonal") == 2);
  CHECK(run("simulate --out /nonexistent-dir/x.jsonl") == 2);
  CHECK(run("plot") == 2);
  CHECK(run("plot --input " + at("missing.jsonl")) == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("trajectory SVG is one polyline framed by the bounding rectangle") {
  REQUIRE(run("simulate -n 50000 --seed 3 --out " + at("fig.jsonl")) == 0);
  REQUIRE(run("plot --svg --input " + at("fig.jsonl") + " --out " + at("fig.csv")) == 0);
  const std::string svg = slurp(at("fig.csv.svg"));
  std::size_t polylines = 0;
  for (auto p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++polylines;
  CHECK(polylines == 1);

  std::ifstream in(at("fig.jsonl"));
  const auto record = prudent::io::read_trajectories(in).at(0);
  const auto path = prudent::LatticePath::from_steps(prudent::io::rle_decode_2d(record.steps));
  const auto rect = prudent::walk2d::bounding_rect(path.sites());
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex(R"re(viewBox="([^ ]+) ([^ ]+) ([^ ]+) ([^"]+)")re")));
  CHECK(std::stod(m[1]) == doctest::Approx(rect.x_min - 0.5));
  CHECK(std::stod(m[2]) == doctest::Approx(-rect.y_max - 0.5));
  CHECK(std::stod(m[3]) == doctest::Approx(static_cast<double>(rect.width())));
  CHECK(std::stod(m[4]) == doctest::Approx(static_cast<double>(rect.height())));

  const std::string csv = slurp(at("fig.csv"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 50002);
}

TEST_CASE("empty trajectory plots as a single point") {
  REQUIRE(run("simulate -n 0 --out " + at("empty.jsonl")) == 0);
  REQUIRE(run("plot --svg --input " + at("empty.jsonl") + " --out " + at("empty.csv")) == 0);
  const std::string svg = slurp(at("empty.csv.svg"));
  CHECK(svg.find("points=\"0,0\"") != std::string::npos);
  CHECK(svg.find("viewBox=\"-0.5 -0.5 1 1\"") != std::string::npos);
}

TEST_CASE("angle overlay has a monotone theoretical column") {
  REQUIRE(run("simulate --free-first-step -n 10000 --replicas 60 --out " + at("ang.jsonl")) == 0);
  REQUIRE(run("plot --kind angle --svg --input " + at("ang.jsonl") + " --out " + at("ang.csv")) == 0);
  std::ifstream in(at("ang.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "angle,empirical,theoretical");
  double prev = -1.0;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    const auto f = prudent::io::split_csv(line);
    const double theo = std::stod(f.at(2));
    CHECK(theo >= prev);
    CHECK(theo >= 0.0);
    CHECK(theo <= 1.0);
    prev = theo;
    ++rows;
  }
  CHECK(rows == 60);
  CHECK(fs::exists(at("ang.csv.svg")));
}

TEST_CASE("malformed plot input reports its line") {
  {
    std::ofstream f(at("broken.jsonl"));
    f << R"({"seed":1,"variant":"prudent2d","n":1,"steps":"R"})" << "\n{oops\n";
  }
  CHECK(run("plot --input " + at("broken.jsonl")) == 2);
  CHECK(slurp(scratch() / "log.txt").find("line 2") != std::string::npos);
}

TEST_CASE("norm series plot") {
  REQUIRE(run("simulate --variant walk3d --replicas 3 -n 2000 --checkpoints 10,100,1000,2000 --out " +
              at("norm.csv")) == 0);
  REQUIRE(run("plot --kind norm --svg --input " + at("norm.csv") + " --out " + at("normplot.csv")) == 0);
  const std::string csv = slurp(at("normplot.csv"));
  CHECK(csv.rfind("t,mean,log10_t,log10_mean\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("quick benchmark runs") {
  CHECK(run("bench --quick --out " + at("bench.csv")) == 0);
  const std::string csv = slurp(at("bench.csv"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("tampered increment law fails the suite") {
  CHECK(run("verify --quick --tamper-stay 0.4", "tamper.txt") == 1);
  const std::string log = slurp(scratch() / "tamper.txt");
  CHECK(log.find("FAIL C7 ") != std::string::npos);
  CHECK(log.find("SUITE FAILED") != std::string::npos);
}
