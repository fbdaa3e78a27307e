#include <doctest.h>

#include <sstream>

#include "prudent/excursions.hpp"
#include "prudent/io.hpp"
#include "prudent/walk2d.hpp"
#include "prudent/walk3d.hpp"

using namespace prudent;
using namespace prudent::io;

TEST_CASE("run-length encoding of 2D steps") {
  const std::vector<Dir> steps{Dir::east, Dir::east, Dir::east, Dir::north};
  CHECK(rle_encode(steps) == "3RU");
  CHECK(rle_decode_2d("3RU") == steps);
  CHECK(rle_encode(std::span<const Dir>{}).empty());
  CHECK(rle_decode_2d("").empty());
  CHECK_THROWS_AS(rle_decode_2d("3Q"), std::invalid_argument);
  CHECK_THROWS_AS(rle_decode_2d("12"), std::invalid_argument);
  CHECK_THROWS_AS(rle_decode_2d("0R"), std::invalid_argument);
}

TEST_CASE("run-length round trip of simulated walks") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto path = walk2d::simulate(2000, seed, walk2d::Variant::prudent);
    const auto dirs = path.directions();
    CHECK(rle_decode_2d(rle_encode(dirs)) == dirs);
    const auto path3 = walk3d::simulate_3d(2000, seed);
    const auto dirs3 = path3.directions();
    const auto text = rle_encode(dirs3);
    CHECK(text.find_first_not_of("0123456789XxYyZz") == std::string::npos);
    CHECK(rle_decode_3d(text) == dirs3);
  }
}

TEST_CASE("trajectory JSONL round trip") {
  const TrajectoryRecord r{42, "corner", 4, "2RUD"};
  const auto line = to_jsonl(r);
  CHECK(line.find('\n') == std::string::npos);
  const auto back = parse_trajectory(line, 1);
  CHECK(back.seed == 42);
  CHECK(back.variant == "corner");
  CHECK(back.n == 4);
  CHECK(back.steps == "2RUD");

  std::istringstream in(line + "\n\n" + to_jsonl(TrajectoryRecord{7, "prudent2d", 1, "R"}) + "\n{bad\n");
  try {
    read_trajectories(in);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("effective walk JSONL stores increments") {
  const EffectiveRecord r{9, {0, 2, 1, -3, -3}};
  const auto line = to_jsonl(r);
  CHECK(line.find("[0,2,-1,-4,0]") != std::string::npos);
  const auto back = parse_effective(line, 3);
  CHECK(back.seed == 9);
  CHECK(back.values == r.values);
  CHECK_THROWS_AS(parse_effective(R"({"seed":1,"n":3,"values":[0,1]})", 3), ParseError);
}

TEST_CASE("excursion CSV round trip") {
  const auto path = walk2d::simulate(5000, 11, walk2d::Variant::prudent);
  const auto records = walk2d::excursion_decompose(path);
  REQUIRE(!records.empty());
  std::stringstream buf;
  write_excursions_csv(buf, records);
  CHECK(buf.str().rfind(std::string(kExcursionHeader) + "\n", 0) == 0);
  CHECK(read_excursions_csv(buf) == records);

  std::istringstream bad(std::string(kExcursionHeader) + "\n0,vertical,0,1,1,1,0\n1,diagonal,1,2,1,1,0\n");
  try {
    read_excursions_csv(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream wrong_header("k,kind\n");
  CHECK_THROWS_AS(read_excursions_csv(wrong_header), ParseError);
}

TEST_CASE("norm and Z CSV keep doubles exactly") {
  const std::vector<walk3d::NormPoint> points{{10, 3.14159265358979, 0.1, 50}, {100, 1.0 / 3.0, 1e-17, 50}};
  std::stringstream buf;
  write_norm_csv(buf, points);
  const auto back = read_norm_csv(buf);
  REQUIRE(back.size() == 2);
  CHECK(back[1].mean == points[1].mean);
  CHECK(back[1].std_error == points[1].std_error);
  CHECK(back[0].nseeds == 50);

  const std::vector<ZRow> rows{{0.5, -0.123456789012345, 2.0 / 7.0, 1, -1, 77}};
  std::stringstream zbuf;
  write_z_csv(zbuf, rows);
  const auto zback = read_z_csv(zbuf);
  REQUIRE(zback.size() == 1);
  CHECK(zback[0].z1 == rows[0].z1);
  CHECK(zback[0].z2 == rows[0].z2);
  CHECK(zback[0].sigma2 == -1);
  CHECK(zback[0].seed == 77);
}

TEST_CASE("format_double is shortest round trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(3.0) == "3");
  CHECK(std::stod(format_double(1.0 / 7.0)) == 1.0 / 7.0);
  CHECK(split_csv("a,,b") == std::vector<std::string>{"a", "", "b"});
}

TEST_CASE("config text round trip") {
  RunConfig c;
  c.command = "verify";
  c.variant = "walk3d";
  c.n = 123456;
  c.replicas = 17;
  c.seed = 99;
  c.out = "runs/out.csv";
  c.checkpoints = {10, 100, 1000};
  c.threads = 8;
  c.quick = true;
  c.free_first_step = true;
  std::istringstream in(to_text(c));
  CHECK(parse_config(in) == c);

  std::istringstream commented("# header\nseed = 5  # trailing\n\nn=10\n");
  const auto parsed = parse_config(commented);
  CHECK(parsed.seed == 5);
  CHECK(parsed.n == 10);

  std::istringstream bad("seed = 5\nvariant = hexagonal\n");
  try {
    parse_config(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  RunConfig d;
  CHECK_THROWS_AS(apply_setting(d, "colour", "red"), std::invalid_argument);
  CHECK_THROWS_AS(apply_setting(d, "n", "12x"), std::invalid_argument);
  CHECK_THROWS_AS(apply_setting(d, "quick", "maybe"), std::invalid_argument);
}
