#pragma once

// Generators for the OEIS sequences the triangle work relies on, plus b-file
// parsing, a caching HTTP fetcher and term-by-term comparison.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "powerexp/exact.hpp"

namespace powerexp {

enum class BFileSource { kBundled, kCached, kNetwork };

struct BFileEntry {
  long index = 0;
  ExactInt value;
  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

struct BFile {
  std::string sequence_id;  ///< "A" + 6 digits
  long offset = 0;
  std::vector<BFileEntry> entries;
  BFileSource source = BFileSource::kBundled;

  /// Equality covers id, offset and entries; `source` is provenance only.
  friend bool operator==(const BFile& a, const BFile& b) {
    return a.sequence_id == b.sequence_id && a.offset == b.offset && a.entries == b.entries;
  }
};

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(const std::string& what, long line) : std::runtime_error(what), line_(line) {}
  /// 1-based line number, or 0 when the error is not tied to a line.
  long line() const { return line_; }

 private:
  long line_;
};

class FetchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FetchMode { kOffline, kCached, kRefresh };

struct OeisConfig {
  std::filesystem::path cache_dir;
  std::string base_url = "https://oeis.org";
  bool offline_only = false;  ///< reject any mode that could touch the network

  /// POWEREXP_CACHE_DIR, else $XDG_CACHE_HOME/powerexp, else
  /// $HOME/.cache/powerexp; POWEREXP_OEIS_URL overrides the base URL and
  /// POWEREXP_OFFLINE=1 sets offline_only.
  static OeisConfig from_environment();
};

bool is_sequence_id(std::string_view id);

/// The eight sequences `generate` knows.
const std::vector<std::string>& supported_sequences();

/// First `count` terms at the sequence's standard offset. Throws
/// std::invalid_argument for unsupported ids and DomainError for count < 1.
std::vector<ExactInt> generate(std::string_view sequence_id, long count);

/// Offset of the first generated term.
long sequence_offset(std::string_view sequence_id);

/// Lines are "index value"; blank lines and lines starting with '#' are
/// skipped. Indices must be consecutive.
BFile parse_bfile(std::string_view text, std::string sequence_id = {});
std::string serialize_bfile(const BFile& b);

/// Verbatim bundled b-file text, if one ships with the library.
std::optional<std::string_view> bundled_bfile(std::string_view sequence_id);

std::filesystem::path cache_path(const OeisConfig& config, std::string_view sequence_id);
std::string bfile_url(const OeisConfig& config, std::string_view sequence_id);

/// kOffline: bundled fixture, else cache, else FetchError.
/// kCached: cache, else one HTTP GET that also writes the cache.
/// kRefresh: always GET and overwrite the cache.
/// Fetches of the same id are serialized.
BFile fetch_bfile(std::string_view sequence_id, FetchMode mode, const OeisConfig& config);

struct Mismatch {
  long index = 0;
  ExactInt expected;  ///< b-file value
  ExactInt actual;    ///< generated value
};

struct CompareReport {
  std::string sequence_id;
  long terms_compared = 0;
  std::optional<Mismatch> first_mismatch;
  bool ok() const { return !first_mismatch; }
};

/// Compares generate() against the first `count` b-file terms. Throws
/// DomainError when the b-file is shorter than `count` or starts at a
/// different offset.
CompareReport compare_with(const BFile& reference, long count);
CompareReport compare(std::string_view sequence_id, long count, FetchMode mode, const OeisConfig& config);

std::string to_string(BFileSource source);
std::string render_text(const CompareReport& report);
std::string render_json(const CompareReport& report);

}  // namespace powerexp
