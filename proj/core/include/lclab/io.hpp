#pragma once

// File formats shared by the command-line tool: custom arithmetic-function
// tables, the triangle cache, and machine-readable reports.

#include "lclab/arith_fn.hpp"
#include "lclab/concavity.hpp"
#include "lclab/report.hpp"
#include "lclab/triangle.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lclab {

inline constexpr int kTriangleSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

/// Malformed custom-g file; the message carries "path:line:".
class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable, corrupt, or mismatched triangle cache data.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a custom g: one value per line (line k holds g(k)) as an integer or
/// "p/q"; '#' starts a comment, blank lines are skipped. Throws IngestError on
/// parse failures and NormalizationError when g(1) != 1.
ArithFn ingest_custom_g(const std::filesystem::path& path);
ArithFn parse_custom_g(std::string_view text, std::string_view source_name);

/// one | id | square | sigma | sigma_k=K | custom=PATH
ArithFn parse_g_selector(std::string_view selector);
/// one | id
HKind parse_h_selector(std::string_view selector);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(std::string_view data);

/// Cache/export document for an integer-scaled triangle.
std::string triangle_to_json(const Triangle& tri);
/// Inverse of triangle_to_json. `g` supplies the function values and must
/// carry the stored label. Throws CacheError on schema, checksum, or label
/// problems.
Triangle triangle_from_json(std::string_view json, const ArithFn& g);

/// One JSON file per (g, h, N, column limit) in a directory. A stored entry
/// with at least the requested rows and columns serves smaller requests by
/// truncation. Writes go to a temporary file that is then renamed.
class TriangleCache {
 public:
  explicit TriangleCache(std::filesystem::path dir);

  /// Smallest adequate entry, or nullopt. Corrupt or stale entries are
  /// skipped with a line on `warnings` when given.
  std::optional<Triangle> load(const ArithFn& g, HKind h, std::size_t max_row,
                               std::size_t column_limit, std::ostream* warnings = nullptr) const;
  std::filesystem::path store(const Triangle& tri) const;
  std::filesystem::path path_for(const ArithFn& g, HKind h, std::size_t max_row,
                                 std::size_t column_limit) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

/// Loads from `cache` when possible, otherwise builds and stores.
Triangle obtain_triangle(const ArithFn& g, HKind h, std::size_t max_row,
                         std::optional<std::size_t> column_limit, const TriangleCache* cache,
                         std::ostream* warnings = nullptr);

enum class TriangleFormat { kTable, kJson, kCsv };
TriangleFormat parse_triangle_format(std::string_view name);

/// table: "n: A_{n,1} ... A_{n,n}" rationals; json: rational strings per row;
/// csv: "n,scale,B_1,...,B_n" with B_m = L_n A_{n,m}.
void write_triangle(std::ostream& out, const Triangle& tri, TriangleFormat format);

std::string report_to_json(const CheckReport& report);
std::string report_to_json(const ConcavityReport& report);

}  // namespace lclab
