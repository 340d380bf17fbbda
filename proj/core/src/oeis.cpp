#include "powerexp/oeis.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <httplib.h>

#include "bundled.hpp"
#include "powerexp/triangle.hpp"

namespace powerexp {

namespace {

std::string env_or_empty(const char* name) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : std::string();
}

std::string require_id(std::string_view id) {
  if (!is_sequence_id(id)) {
    throw std::invalid_argument("not an OEIS id (expected A + 6 digits): '" + std::string(id) + "'");
  }
  return std::string(id);
}

// Reads a triangle row by row until `count` terms are produced.
template <typename Entry>
std::vector<ExactInt> flatten_rows(long count, Entry entry) {
  std::vector<ExactInt> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long n = 0; static_cast<long>(out.size()) < count; ++n) {
    for (long k = 0; k <= n && static_cast<long>(out.size()) < count; ++k) out.push_back(entry(n, k));
  }
  return out;
}

template <typename Term>
std::vector<ExactInt> tabulate(long count, Term term) {
  std::vector<ExactInt> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long n = 0; n < count; ++n) out.push_back(term(ExactInt(n)));
  return out;
}

ExactInt cube_difference(const ExactInt& x) { return int_pow(x + 1, 3) - int_pow(x, 3); }

std::mutex& fetch_lock(const std::string& id) {
  static std::mutex guard;
  static std::map<std::string, std::mutex> locks;
  std::lock_guard<std::mutex> hold(guard);
  return locks[id];
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_cache(const std::filesystem::path& path, const std::string& bytes) {
  std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FetchError("cannot write cache file " + tmp.string());
    out << bytes;
  }
  std::filesystem::rename(tmp, path);
}

std::string http_get(const OeisConfig& config, const std::string& id) {
  std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
  httplib::Client client(config.base_url);
  if (!client.is_valid()) throw FetchError("unusable OEIS base URL '" + config.base_url + "'");
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Get(path);
  if (!res) {
    throw FetchError("GET " + config.base_url + path + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw FetchError("GET " + config.base_url + path + " returned HTTP " + std::to_string(res->status));
  }
  return res->body;
}

}  // namespace

OeisConfig OeisConfig::from_environment() {
  OeisConfig config;
  if (auto dir = env_or_empty("POWEREXP_CACHE_DIR"); !dir.empty()) {
    config.cache_dir = dir;
  } else if (auto xdg = env_or_empty("XDG_CACHE_HOME"); !xdg.empty()) {
    config.cache_dir = std::filesystem::path(xdg) / "powerexp";
  } else if (auto home = env_or_empty("HOME"); !home.empty()) {
    config.cache_dir = std::filesystem::path(home) / ".cache" / "powerexp";
  } else {
    config.cache_dir = std::filesystem::temp_directory_path() / "powerexp-cache";
  }
  if (auto url = env_or_empty("POWEREXP_OEIS_URL"); !url.empty()) config.base_url = url;
  config.offline_only = env_or_empty("POWEREXP_OFFLINE") == "1";
  return config;
}

bool is_sequence_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (char c : id.substr(1)) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

const std::vector<std::string>& supported_sequences() {
  static const std::vector<std::string> ids = {"A000012", "A000124", "A007318", "A008458",
                                               "A028896", "A077028", "A275709", "A287326"};
  return ids;
}

long sequence_offset(std::string_view sequence_id) {
  for (const auto& id : supported_sequences()) {
    if (id == sequence_id) return 0;
  }
  throw std::invalid_argument("unsupported sequence '" + std::string(sequence_id) + "'");
}

std::vector<ExactInt> generate(std::string_view sequence_id, long count) {
  sequence_offset(sequence_id);
  if (count < 1) throw DomainError("term count must be >= 1");
  if (sequence_id == "A287326") return flatten_rows(count, [](long n, long k) { return u_coeff(n, k); });
  if (sequence_id == "A007318") return flatten_rows(count, [](long n, long k) { return binomial(n, k); });
  if (sequence_id == "A077028") return flatten_rows(count, [](long n, long k) { return rascal_coeff(n, k); });
  if (sequence_id == "A008458") {
    // a(0) = first cube difference; afterwards the step between consecutive
    // cube differences.
    return tabulate(count, [](const ExactInt& n) {
      return n.is_zero() ? cube_difference(n) : cube_difference(n) - cube_difference(n - 1);
    });
  }
  if (sequence_id == "A000124") {
    return tabulate(count, [](const ExactInt& n) { return exact_div(n * n + n + 2, 2); });
  }
  if (sequence_id == "A275709") {
    return tabulate(count, [](const ExactInt& n) { return 2 * int_pow(n, 3) + 3 * n * n; });
  }
  if (sequence_id == "A028896") {
    return tabulate(count, [](const ExactInt& n) { return 3 * n * n + 3 * n; });
  }
  return tabulate(count, [](const ExactInt&) { return ExactInt(1); });  // A000012
}

BFile parse_bfile(std::string_view text, std::string sequence_id) {
  BFile b;
  b.sequence_id = std::move(sequence_id);
  long line_no = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::istringstream fields{std::string(line)};
    std::string index_text, value_text, extra;
    if (!(fields >> index_text)) continue;  // blank
    if (index_text.front() == '#') continue;
    if (!(fields >> value_text) || (fields >> extra)) {
      throw BFileParseError("line " + std::to_string(line_no) + ": expected 'index value'", line_no);
    }
    BFileEntry entry;
    try {
      ExactInt index = ExactInt::parse(index_text);
      if (!index.fits_long()) throw std::invalid_argument("index out of range");
      entry.index = index.to_long();
      entry.value = ExactInt::parse(value_text);
    } catch (const std::exception& e) {
      throw BFileParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
    if (b.entries.empty()) {
      b.offset = entry.index;
    } else if (entry.index != b.entries.back().index + 1) {
      throw BFileParseError("line " + std::to_string(line_no) + ": gap at index " +
                                std::to_string(b.entries.back().index + 1),
                            line_no);
    }
    b.entries.push_back(std::move(entry));
  }
  return b;
}

std::string serialize_bfile(const BFile& b) {
  std::string out;
  for (const auto& e : b.entries) {
    out += std::to_string(e.index);
    out += ' ';
    out += e.value.str();
    out += '\n';
  }
  return out;
}

std::optional<std::string_view> bundled_bfile(std::string_view sequence_id) {
  for (const auto& f : detail::bundled_bfiles()) {
    if (f.sequence_id == sequence_id) return f.text;
  }
  return std::nullopt;
}

std::filesystem::path cache_path(const OeisConfig& config, std::string_view sequence_id) {
  std::string id = require_id(sequence_id);
  return config.cache_dir / ("b" + id.substr(1) + ".txt");
}

std::string bfile_url(const OeisConfig& config, std::string_view sequence_id) {
  std::string id = require_id(sequence_id);
  return config.base_url + "/" + id + "/b" + id.substr(1) + ".txt";
}

BFile fetch_bfile(std::string_view sequence_id, FetchMode mode, const OeisConfig& config) {
  std::string id = require_id(sequence_id);
  if (config.offline_only && mode != FetchMode::kOffline) {
    throw FetchError("network fetch requested for " + id + " but offline mode is enforced");
  }
  std::lock_guard<std::mutex> hold(fetch_lock(id));
  const auto path = cache_path(config, id);

  auto parse_as = [&](std::string_view text, BFileSource source) {
    BFile b = parse_bfile(text, id);
    b.source = source;
    return b;
  };

  if (mode == FetchMode::kOffline) {
    if (auto bundled = bundled_bfile(id)) return parse_as(*bundled, BFileSource::kBundled);
    if (std::filesystem::exists(path)) return parse_as(read_file(path), BFileSource::kCached);
    throw FetchError("no bundled fixture or cache entry for " + id + " (offline)");
  }
  if (mode == FetchMode::kCached && std::filesystem::exists(path)) {
    return parse_as(read_file(path), BFileSource::kCached);
  }
  std::string body = http_get(config, id);
  BFile b = parse_as(body, BFileSource::kNetwork);  // validate before caching
  write_cache(path, body);
  return b;
}

CompareReport compare_with(const BFile& reference, long count) {
  if (count < 1) throw DomainError("term count must be >= 1");
  if (static_cast<long>(reference.entries.size()) < count) {
    throw DomainError(reference.sequence_id + ": b-file has only " +
                      std::to_string(reference.entries.size()) + " terms, " + std::to_string(count) +
                      " requested");
  }
  if (reference.offset != sequence_offset(reference.sequence_id)) {
    throw DomainError(reference.sequence_id + ": b-file offset " + std::to_string(reference.offset) +
                      " differs from the generator's offset");
  }
  auto generated = generate(reference.sequence_id, count);
  CompareReport report{reference.sequence_id, count, std::nullopt};
  for (long i = 0; i < count; ++i) {
    const auto& expected = reference.entries[static_cast<std::size_t>(i)];
    if (expected.value != generated[static_cast<std::size_t>(i)]) {
      report.first_mismatch = Mismatch{expected.index, expected.value, generated[static_cast<std::size_t>(i)]};
      break;
    }
  }
  return report;
}

CompareReport compare(std::string_view sequence_id, long count, FetchMode mode, const OeisConfig& config) {
  return compare_with(fetch_bfile(sequence_id, mode, config), count);
}

std::string to_string(BFileSource source) {
  switch (source) {
    case BFileSource::kBundled: return "bundled";
    case BFileSource::kCached: return "cached";
    case BFileSource::kNetwork: return "network";
  }
  return "?";
}

}  // namespace powerexp
