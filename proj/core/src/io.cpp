#include "lclab/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace lclab {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string sanitize(std::string_view label) {
  std::string out;
  for (char c : label) {
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Canonical text the checksum covers.
std::string checksum_payload(const json& doc) {
  json body = doc;
  body.erase("checksum");
  return body.dump();
}

}  // namespace

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

ArithFn parse_custom_g(std::string_view text, std::string_view source_name) {
  std::vector<Rational> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    try {
      values.push_back(parse_rational(line));
    } catch (const std::invalid_argument& e) {
      throw IngestError(std::string(source_name) + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (end == text.size()) break;
  }
  if (values.empty()) throw IngestError(std::string(source_name) + ": no values");
  std::string digest;
  for (const auto& v : values) digest += to_string(v) + '\n';
  std::string label = "custom:" + std::filesystem::path(source_name).filename().string() + "#" +
                      fnv1a_hex(digest).substr(0, 8);
  return ArithFn::from_table(std::move(values), std::move(label));
}

ArithFn ingest_custom_g(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::runtime_error& e) {
    throw IngestError(e.what());
  }
  return parse_custom_g(text, path.string());
}

ArithFn parse_g_selector(std::string_view selector) {
  if (selector == "one") return ArithFn::one();
  if (selector == "id") return ArithFn::id();
  if (selector == "square") return ArithFn::square();
  if (selector == "sigma") return ArithFn::sigma();
  if (selector.starts_with("sigma_k=")) {
    const std::string_view k = selector.substr(8);
    unsigned value = 0;
    if (k.empty() || k.size() > 4 ||
        !std::all_of(k.begin(), k.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw std::invalid_argument("bad sigma_k power: '" + std::string(k) + "'");
    }
    for (char c : k) value = value * 10 + static_cast<unsigned>(c - '0');
    return ArithFn::sigma_k(value);
  }
  if (selector.starts_with("custom=")) return ingest_custom_g(std::string(selector.substr(7)));
  throw std::invalid_argument("unknown g '" + std::string(selector) +
                              "' (expected one|id|square|sigma|sigma_k=K|custom=PATH)");
}

HKind parse_h_selector(std::string_view selector) {
  if (selector == "one") return HKind::kOne;
  if (selector == "id") return HKind::kId;
  throw std::invalid_argument("unknown h '" + std::string(selector) + "' (expected one|id)");
}

std::string triangle_to_json(const Triangle& tri) {
  json doc;
  doc["schema"] = "lclab.triangle";
  doc["version"] = kTriangleSchemaVersion;
  doc["g"] = tri.g().label();
  doc["h"] = to_string(tri.h());
  doc["n"] = tri.max_row();
  doc["column_limit"] = tri.column_limit();
  json scales = json::array();
  json rows = json::array();
  for (std::size_t n = 0; n <= tri.max_row(); ++n) {
    scales.push_back(to_string(tri.row_scale(n)));
    json row = json::array();
    for (const auto& v : tri.scaled_row(n)) row.push_back(to_string(v));
    rows.push_back(std::move(row));
  }
  doc["row_scales"] = std::move(scales);
  if (tri.has_scale_steps()) {
    doc["scale_steps"] = std::vector<unsigned long>(tri.scale_steps().begin(), tri.scale_steps().end());
  } else {
    doc["scale_steps"] = nullptr;
  }
  doc["rows"] = std::move(rows);
  doc["checksum"] = fnv1a_hex(checksum_payload(doc));
  return doc.dump();
}

Triangle triangle_from_json(std::string_view text, const ArithFn& g) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CacheError(std::string("unparsable triangle document: ") + e.what());
  }
  try {
    if (doc.at("schema") != "lclab.triangle") throw CacheError("not a triangle document");
    if (doc.at("version").get<int>() != kTriangleSchemaVersion) {
      throw CacheError("triangle schema version " + doc.at("version").dump() + " != " +
                       std::to_string(kTriangleSchemaVersion));
    }
    if (doc.at("checksum").get<std::string>() != fnv1a_hex(checksum_payload(doc))) {
      throw CacheError("triangle checksum mismatch");
    }
    if (doc.at("g").get<std::string>() != g.label()) {
      throw CacheError("triangle was built for g = " + doc.at("g").get<std::string>() +
                       ", not " + g.label());
    }
    const HKind h = parse_h_selector(doc.at("h").get<std::string>());
    const auto limit = doc.at("column_limit").get<std::size_t>();
    std::vector<Integer> scales;
    for (const auto& s : doc.at("row_scales")) scales.emplace_back(s.get<std::string>(), 10);
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : doc.at("rows")) {
      auto& row = rows.emplace_back();
      for (const auto& v : r) row.emplace_back(v.get<std::string>(), 10);
    }
    std::vector<unsigned long> steps;
    if (!doc.at("scale_steps").is_null()) steps = doc.at("scale_steps").get<std::vector<unsigned long>>();
    if (rows.size() != doc.at("n").get<std::size_t>() + 1) throw CacheError("row count mismatch");
    return Triangle(g, h, limit, std::move(rows), std::move(scales), std::move(steps));
  } catch (const json::exception& e) {
    throw CacheError(std::string("malformed triangle document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CacheError(std::string("malformed triangle document: ") + e.what());
  }
}

TriangleCache::TriangleCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TriangleCache::path_for(const ArithFn& g, HKind h, std::size_t max_row,
                                              std::size_t column_limit) const {
  return dir_ / (sanitize(g.label()) + "__" + to_string(h) + "__n" + std::to_string(max_row) +
                 "__m" + std::to_string(std::min(column_limit, max_row)) + ".json");
}

std::optional<Triangle> TriangleCache::load(const ArithFn& g, HKind h, std::size_t max_row,
                                            std::size_t column_limit,
                                            std::ostream* warnings) const {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir_, ec)) return std::nullopt;
  const std::string prefix = sanitize(g.label()) + "__" + to_string(h) + "__n";
  const std::size_t want_cols = std::min(column_limit, max_row);
  std::optional<Triangle> best;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
    const std::string name = entry.path().filename().string();
    if (!name.starts_with(prefix) || entry.path().extension() != ".json") continue;
    try {
      Triangle tri = triangle_from_json(read_file(entry.path()), g);
      if (tri.h() != h || tri.max_row() < max_row) continue;
      if (!tri.is_full() && tri.column_limit() < want_cols) continue;
      if (!best || tri.max_row() < best->max_row()) best = std::move(tri);
    } catch (const std::exception& e) {
      if (warnings) *warnings << "warning: ignoring cache entry " << entry.path().string() << ": " << e.what() << " (recomputing)\n";
    }
  }
  if (!best) return std::nullopt;
  return best->truncated(max_row, want_cols);
}

std::filesystem::path TriangleCache::store(const Triangle& tri) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(tri.g(), tri.h(), tri.max_row(), tri.column_limit());
  std::random_device rd;
  const auto tmp = target.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp);
    out << triangle_to_json(tri);
    if (!out) throw CacheError("short write to " + tmp);
  }
  std::filesystem::rename(tmp, target);
  return target;
}

Triangle obtain_triangle(const ArithFn& g, HKind h, std::size_t max_row,
                         std::optional<std::size_t> column_limit, const TriangleCache* cache,
                         std::ostream* warnings) {
  const std::size_t limit = std::min(column_limit.value_or(max_row), max_row);
  if (cache) {
    if (auto hit = cache->load(g, h, max_row, limit, warnings)) return std::move(*hit);
  }
  Triangle tri = build_triangle(g, h, max_row, limit);
  if (cache) {
    try {
      cache->store(tri);
    } catch (const std::exception& e) {
      if (warnings) *warnings << "warning: could not write cache: " << e.what() << "\n";
    }
  }
  return tri;
}

TriangleFormat parse_triangle_format(std::string_view name) {
  if (name == "table") return TriangleFormat::kTable;
  if (name == "json") return TriangleFormat::kJson;
  if (name == "csv") return TriangleFormat::kCsv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected table|json|csv)");
}

void write_triangle(std::ostream& out, const Triangle& tri, TriangleFormat format) {
  const std::size_t last = std::min(tri.max_row(), tri.is_full() ? tri.max_row() : tri.column_limit());
  switch (format) {
    case TriangleFormat::kTable:
      for (std::size_t n = 1; n <= last; ++n) {
        out << n << ":";
        for (const auto& v : tri.row(n)) out << ' ' << to_string(v);
        out << '\n';
      }
      break;
    case TriangleFormat::kJson: {
      json doc;
      doc["schema"] = "lclab.triangle-view";
      doc["version"] = kTriangleSchemaVersion;
      doc["g"] = tri.g().label();
      doc["h"] = to_string(tri.h());
      doc["n"] = last;
      json rows = json::array();
      for (std::size_t n = 1; n <= last; ++n) {
        json row = json::array();
        for (const auto& v : tri.row(n)) row.push_back(to_string(v));
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
      out << doc.dump() << '\n';
      break;
    }
    case TriangleFormat::kCsv:
      out << "n,scale";
      for (std::size_t m = 1; m <= last; ++m) out << ",m" << m;
      out << '\n';
      for (std::size_t n = 1; n <= last; ++n) {
        out << n << ',' << to_string(tri.row_scale(n));
        for (const auto& v : tri.scaled_row(n)) out << ',' << to_string(v);
        out << '\n';
      }
      break;
  }
}

namespace {

json coords(const std::vector<Coord>& list) {
  json out = json::array();
  for (const auto& c : list) out.push_back({c.n, c.m});
  return out;
}

}  // namespace

std::string report_to_json(const CheckReport& report) {
  json doc;
  doc["schema"] = "lclab.report";
  doc["version"] = kReportSchemaVersion;
  doc["kind"] = "check";
  doc["name"] = report.name;
  doc["pass"] = report.pass;
  doc["comparisons"] = report.comparisons;
  doc["first_mismatch"] = report.first_mismatch
                              ? json{report.first_mismatch->n, report.first_mismatch->m}
                              : json(nullptr);
  doc["detail"] = report.detail;
  return doc.dump();
}

std::string report_to_json(const ConcavityReport& report) {
  json doc;
  doc["schema"] = "lclab.report";
  doc["version"] = kReportSchemaVersion;
  doc["kind"] = "concavity";
  doc["mode"] = to_string(report.mode);
  doc["pass"] = report.pass;
  doc["from"] = report.from;
  doc["to"] = report.to;
  if (report.mode == ConcavityMode::kVertical) doc["n_to"] = report.n_to;
  doc["c"] = report.c ? json(to_string(*report.c)) : json(nullptr);
  doc["clipped"] = report.clipped;
  doc["failures"] = coords(report.failures);
  doc["ties"] = coords(report.ties);
  json columns = json::array();
  for (const auto& col : report.columns) {
    columns.push_back({{"m", col.m},
                       {"bound", col.bound},
                       {"last_center", col.last_center},
                       {"clipped", col.clipped},
                       {"pass", col.pass}});
  }
  doc["columns"] = std::move(columns);
  return doc.dump();
}

}  // namespace lclab
