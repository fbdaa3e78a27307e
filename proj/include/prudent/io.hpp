#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prudent/excursions.hpp"
#include "prudent/lattice.hpp"
#include "prudent/walk3d.hpp"

/// Flat file formats: JSON Lines trajectories, CSV tables and the key=value
/// run configuration.
namespace prudent::io {

/// Thrown for malformed input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Run-length encoding "<count><letter>", count omitted when it is 1.
std::string rle_encode(std::span<const Dir> steps);
std::vector<Dir> rle_decode_2d(std::string_view text);
std::string rle_encode(std::span<const walk3d::Dir3> steps);
std::vector<walk3d::Dir3> rle_decode_3d(std::string_view text);

struct TrajectoryRecord {
  std::uint64_t seed = 0;
  std::string variant;
  std::int64_t n = 0;
  std::string steps;  // run-length encoded

  friend bool operator==(const TrajectoryRecord&, const TrajectoryRecord&) = default;
};

std::string to_jsonl(const TrajectoryRecord& r);
TrajectoryRecord parse_trajectory(std::string_view line, std::size_t line_no = 1);
std::vector<TrajectoryRecord> read_trajectories(std::istream& in);

struct EffectiveRecord {
  std::uint64_t seed = 0;
  std::vector<std::int64_t> values;

  friend bool operator==(const EffectiveRecord&, const EffectiveRecord&) = default;
};

/// {seed, n, values} with values delta-encoded.
std::string to_jsonl(const EffectiveRecord& r);
EffectiveRecord parse_effective(std::string_view line, std::size_t line_no = 1);

inline constexpr std::string_view kExcursionHeader = "k,kind,start,end,displacement,wall,crossed";
void write_excursions_csv(std::ostream& out, std::span<const walk2d::ExcursionRecord> records);
std::vector<walk2d::ExcursionRecord> read_excursions_csv(std::istream& in);

inline constexpr std::string_view kNormHeader = "t,mean,stderr,nseeds";
void write_norm_csv(std::ostream& out, std::span<const walk3d::NormPoint> points);
std::vector<walk3d::NormPoint> read_norm_csv(std::istream& in);

struct ZRow {
  double u = 0.0;
  double z1 = 0.0;
  double z2 = 0.0;
  int sigma1 = 1;
  int sigma2 = 1;
  std::uint64_t seed = 0;
  friend bool operator==(const ZRow&, const ZRow&) = default;
};

inline constexpr std::string_view kZHeader = "u,z1,z2,sigma1,sigma2,seed";
void write_z_csv(std::ostream& out, std::span<const ZRow> rows);
std::vector<ZRow> read_z_csv(std::istream& in);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

/// Splits a CSV line on commas (no quoting).
std::vector<std::string> split_csv(std::string_view line);

struct RunConfig {
  std::string command = "simulate";
  std::string variant = "prudent2d";
  std::int64_t n = 1000;
  std::size_t replicas = 1;
  std::uint64_t seed = 20060715;
  std::string out = "-";
  std::vector<std::int64_t> checkpoints;
  unsigned threads = 1;
  bool quick = false;
  bool svg = false;
  bool free_first_step = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// One "key = value" line per field; '#' starts a comment.
std::string to_text(const RunConfig& c);
RunConfig parse_config(std::istream& in);
/// Applies one key = value pair; throws std::invalid_argument for unknown
/// keys or bad values.
void apply_setting(RunConfig& c, std::string_view key, std::string_view value);

inline constexpr std::string_view kVariants[] = {"prudent2d", "corner", "walk3d", "effective",
                                                 "zprocess"};
bool valid_variant(std::string_view v);

}  // namespace prudent::io
