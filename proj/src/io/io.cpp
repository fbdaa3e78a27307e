#include "prudent/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace prudent::io {

namespace {

template <class D, std::size_t N>
std::string encode_runs(std::span<const D> steps, const std::array<char, N>& letters) {
  std::string out;
  for (std::size_t i = 0; i < steps.size();) {
    std::size_t j = i;
    while (j < steps.size() && steps[j] == steps[i]) ++j;
    if (j - i > 1) out += std::to_string(j - i);
    out.push_back(letters[static_cast<std::size_t>(steps[i])]);
    i = j;
  }
  return out;
}

template <class D, std::size_t N>
std::vector<D> decode_runs(std::string_view text, const std::array<char, N>& letters) {
  std::vector<D> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t count = 1;
    if (text[i] >= '0' && text[i] <= '9') {
      const auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), count);
      if (ec != std::errc{} || count == 0) {
        throw std::invalid_argument("bad run length at offset " + std::to_string(i));
      }
      i = static_cast<std::size_t>(end - text.data());
      if (i >= text.size()) throw std::invalid_argument("run length without a letter");
    }
    const auto* hit = std::find(letters.begin(), letters.end(), text[i]);
    if (hit == letters.end()) {
      throw std::invalid_argument(std::string("unknown step letter '") + text[i] + "' at offset " +
                                  std::to_string(i));
    }
    out.insert(out.end(), count, static_cast<D>(hit - letters.begin()));
    ++i;
  }
  return out;
}

constexpr std::array<char, 4> kLetters2{'R', 'L', 'U', 'D'};
constexpr std::array<char, 6> kLetters3{'X', 'x', 'Y', 'y', 'Z', 'z'};

nlohmann::json parse_json(std::string_view line, std::size_t line_no) {
  try {
    return nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line_no, e.what());
  }
}

template <class T>
T parse_number(const std::string& field, std::size_t line_no, const char* what) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, std::string("bad ") + what + " '" + field + "'");
  }
  return value;
}

std::vector<std::vector<std::string>> read_csv(std::istream& in, std::string_view header) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw ParseError(1, "expected header '" + std::string(header) + "'");
  }
  std::vector<std::vector<std::string>> rows;
  const auto width = split_csv(header).size();
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_csv(line);
    if (fields.size() != width) {
      throw ParseError(line_no, "expected " + std::to_string(width) + " fields, got " +
                                    std::to_string(fields.size()));
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

std::string rle_encode(std::span<const Dir> steps) { return encode_runs(steps, kLetters2); }
std::vector<Dir> rle_decode_2d(std::string_view text) { return decode_runs<Dir>(text, kLetters2); }
std::string rle_encode(std::span<const walk3d::Dir3> steps) { return encode_runs(steps, kLetters3); }
std::vector<walk3d::Dir3> rle_decode_3d(std::string_view text) {
  return decode_runs<walk3d::Dir3>(text, kLetters3);
}

std::string to_jsonl(const TrajectoryRecord& r) {
  const nlohmann::json j{{"seed", r.seed}, {"variant", r.variant}, {"n", r.n}, {"steps", r.steps}};
  return j.dump();
}

TrajectoryRecord parse_trajectory(std::string_view line, std::size_t line_no) {
  const auto j = parse_json(line, line_no);
  try {
    TrajectoryRecord r;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.variant = j.at("variant").get<std::string>();
    r.n = j.at("n").get<std::int64_t>();
    r.steps = j.at("steps").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line_no, e.what());
  }
}

std::vector<TrajectoryRecord> read_trajectories(std::istream& in) {
  std::vector<TrajectoryRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty()) out.push_back(parse_trajectory(line, line_no));
  }
  return out;
}

std::string to_jsonl(const EffectiveRecord& r) {
  std::vector<std::int64_t> deltas(r.values.size());
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    deltas[i] = i == 0 ? r.values[0] : r.values[i] - r.values[i - 1];
  }
  const nlohmann::json j{{"seed", r.seed},
                         {"n", r.values.empty() ? 0 : r.values.size() - 1},
                         {"values", deltas}};
  return j.dump();
}

EffectiveRecord parse_effective(std::string_view line, std::size_t line_no) {
  const auto j = parse_json(line, line_no);
  try {
    EffectiveRecord r;
    r.seed = j.at("seed").get<std::uint64_t>();
    const auto deltas = j.at("values").get<std::vector<std::int64_t>>();
    const auto n = j.at("n").get<std::size_t>();
    if (deltas.size() != n + 1) throw ParseError(line_no, "n does not match the value count");
    std::int64_t running = 0;
    for (std::int64_t d : deltas) r.values.push_back(running += d);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line_no, e.what());
  }
}

void write_excursions_csv(std::ostream& out, std::span<const walk2d::ExcursionRecord> records) {
  out << kExcursionHeader << '\n';
  for (const auto& r : records) {
    out << r.k << ',' << walk2d::to_string(r.kind) << ',' << r.start << ',' << r.end << ','
        << r.displacement << ',' << r.wall << ',' << (r.crossed ? 1 : 0) << '\n';
  }
}

std::vector<walk2d::ExcursionRecord> read_excursions_csv(std::istream& in) {
  std::vector<walk2d::ExcursionRecord> out;
  std::size_t line_no = 1;
  for (const auto& f : read_csv(in, kExcursionHeader)) {
    ++line_no;
    walk2d::ExcursionRecord r;
    r.k = parse_number<std::size_t>(f[0], line_no, "k");
    if (f[1] == "vertical") r.kind = walk2d::ExcursionKind::vertical;
    else if (f[1] == "horizontal") r.kind = walk2d::ExcursionKind::horizontal;
    else throw ParseError(line_no, "bad kind '" + f[1] + "'");
    r.start = parse_number<std::int64_t>(f[2], line_no, "start");
    r.end = parse_number<std::int64_t>(f[3], line_no, "end");
    r.displacement = parse_number<std::int64_t>(f[4], line_no, "displacement");
    r.wall = parse_number<std::int64_t>(f[5], line_no, "wall");
    const int crossed = parse_number<int>(f[6], line_no, "crossed");
    if (crossed != 0 && crossed != 1) throw ParseError(line_no, "crossed must be 0 or 1");
    r.crossed = crossed == 1;
    out.push_back(r);
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void write_norm_csv(std::ostream& out, std::span<const walk3d::NormPoint> points) {
  out << kNormHeader << '\n';
  for (const auto& p : points) {
    out << p.t << ',' << format_double(p.mean) << ',' << format_double(p.std_error) << ','
        << p.nseeds << '\n';
  }
}

std::vector<walk3d::NormPoint> read_norm_csv(std::istream& in) {
  std::vector<walk3d::NormPoint> out;
  std::size_t line_no = 1;
  for (const auto& f : read_csv(in, kNormHeader)) {
    ++line_no;
    walk3d::NormPoint p;
    p.t = parse_number<std::int64_t>(f[0], line_no, "t");
    p.mean = parse_number<double>(f[1], line_no, "mean");
    p.std_error = parse_number<double>(f[2], line_no, "stderr");
    p.nseeds = parse_number<std::size_t>(f[3], line_no, "nseeds");
    out.push_back(p);
  }
  return out;
}

void write_z_csv(std::ostream& out, std::span<const ZRow> rows) {
  out << kZHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.u) << ',' << format_double(r.z1) << ',' << format_double(r.z2) << ','
        << r.sigma1 << ',' << r.sigma2 << ',' << r.seed << '\n';
  }
}

std::vector<ZRow> read_z_csv(std::istream& in) {
  std::vector<ZRow> out;
  std::size_t line_no = 1;
  for (const auto& f : read_csv(in, kZHeader)) {
    ++line_no;
    ZRow r;
    r.u = parse_number<double>(f[0], line_no, "u");
    r.z1 = parse_number<double>(f[1], line_no, "z1");
    r.z2 = parse_number<double>(f[2], line_no, "z2");
    r.sigma1 = parse_number<int>(f[3], line_no, "sigma1");
    r.sigma2 = parse_number<int>(f[4], line_no, "sigma2");
    r.seed = parse_number<std::uint64_t>(f[5], line_no, "seed");
    out.push_back(r);
  }
  return out;
}

bool valid_variant(std::string_view v) {
  return std::find(std::begin(kVariants), std::end(kVariants), v) != std::end(kVariants);
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <class T>
T setting_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("bad value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

bool setting_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("bad boolean '" + std::string(value) + "' for " + std::string(key));
}

}  // namespace

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
  if (key == "command") c.command = std::string(value);
  else if (key == "variant") {
    if (!valid_variant(value)) throw std::invalid_argument("unknown variant '" + std::string(value) + "'");
    c.variant = std::string(value);
  } else if (key == "n") c.n = setting_number<std::int64_t>(key, value);
  else if (key == "replicas") c.replicas = setting_number<std::size_t>(key, value);
  else if (key == "seed") c.seed = setting_number<std::uint64_t>(key, value);
  else if (key == "out") c.out = std::string(value);
  else if (key == "threads") c.threads = setting_number<unsigned>(key, value);
  else if (key == "quick") c.quick = setting_bool(key, value);
  else if (key == "svg") c.svg = setting_bool(key, value);
  else if (key == "free_first_step") c.free_first_step = setting_bool(key, value);
  else if (key == "checkpoints") {
    c.checkpoints.clear();
    if (!value.empty()) {
      for (const auto& f : split_csv(value)) c.checkpoints.push_back(setting_number<std::int64_t>(key, trim(f)));
    }
  } else {
    throw std::invalid_argument("unknown setting '" + std::string(key) + "'");
  }
}

std::string to_text(const RunConfig& c) {
  std::ostringstream out;
  out << "command = " << c.command << '\n'
      << "variant = " << c.variant << '\n'
      << "n = " << c.n << '\n'
      << "replicas = " << c.replicas << '\n'
      << "seed = " << c.seed << '\n'
      << "out = " << c.out << '\n'
      << "checkpoints = ";
  for (std::size_t i = 0; i < c.checkpoints.size(); ++i) out << (i ? "," : "") << c.checkpoints[i];
  out << '\n'
      << "threads = " << c.threads << '\n'
      << "quick = " << (c.quick ? "true" : "false") << '\n'
      << "svg = " << (c.svg ? "true" : "false") << '\n'
      << "free_first_step = " << (c.free_first_step ? "true" : "false") << '\n';
  return out.str();
}

RunConfig parse_config(std::istream& in) {
  RunConfig c;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
    try {
      apply_setting(c, trim(std::string_view(body).substr(0, eq)),
                    trim(std::string_view(body).substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return c;
}

}  // namespace prudent::io
