#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lclab/concavity.hpp"
#include "lclab/io.hpp"
#include "lclab/triangle.hpp"

namespace fs = std::filesystem;
using lclab::ArithFn;
using lclab::HKind;
using lclab::Rational;
using lclab::make_rational;

namespace {

class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = fs::temp_directory_path() / ("lclab-test-" + std::to_string(rng()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return path_ / name;
  }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect_same_triangle(const lclab::Triangle& a, const lclab::Triangle& b) {
  ASSERT_EQ(a.max_row(), b.max_row());
  ASSERT_EQ(a.column_limit(), b.column_limit());
  for (std::size_t n = 0; n <= a.max_row(); ++n) {
    ASSERT_EQ(a.row_scale(n), b.row_scale(n));
    ASSERT_TRUE(std::ranges::equal(a.scaled_row(n), b.scaled_row(n)));
  }
  ASSERT_TRUE(std::ranges::equal(a.scale_steps(), b.scale_steps()));
}

}  // namespace

TEST(Ingest, Examples) {
  TempDir dir;
  const ArithFn ones = lclab::ingest_custom_g(dir.write("ones.txt", "1\n1\n1\n"));
  EXPECT_EQ(ones.domain_limit(), std::optional<std::uint64_t>(3));
  for (std::uint64_t n = 1; n <= 3; ++n) EXPECT_EQ(ones.eval(n), Rational(1));

  const ArithFn st = lclab::ingest_custom_g(dir.write("st.txt", "# sigma/n\n1\n3/2\n\n4/3\n7/4\n"));
  const ArithFn ref = lclab::tilde(ArithFn::sigma());
  for (std::uint64_t n = 1; n <= 4; ++n) EXPECT_EQ(st.eval(n), ref.eval(n));
  EXPECT_EQ(st.label().rfind("custom:st.txt#", 0), 0u);

  EXPECT_THROW(lclab::ingest_custom_g(dir.write("bad.txt", "2\n1\n")), lclab::NormalizationError);
  EXPECT_THROW(lclab::ingest_custom_g(dir.path() / "missing.txt"), lclab::IngestError);
  try {
    lclab::parse_custom_g("1\n2\nthree\n", "f.txt");
    FAIL() << "expected a parse error";
  } catch (const lclab::IngestError& e) {
    EXPECT_NE(std::string(e.what()).find("f.txt:3"), std::string::npos) << e.what();
  }
}

TEST(Ingest, LabelsFollowContent) {
  const ArithFn a = lclab::parse_custom_g("1\n2\n", "g.txt");
  const ArithFn b = lclab::parse_custom_g("1\n3\n", "g.txt");
  EXPECT_NE(a.label(), b.label());
  EXPECT_EQ(a.label(), lclab::parse_custom_g("# same values\n1\n2\n", "g.txt").label());
}

TEST(Selectors, Parse) {
  EXPECT_EQ(lclab::parse_g_selector("sigma").label(), "sigma");
  EXPECT_EQ(lclab::parse_g_selector("sigma_k=3").eval(2), Rational(9));
  EXPECT_THROW(lclab::parse_g_selector("tau"), std::invalid_argument);
  EXPECT_THROW(lclab::parse_g_selector("sigma_k=x"), std::invalid_argument);
  EXPECT_EQ(lclab::parse_h_selector("id"), HKind::kId);
  EXPECT_THROW(lclab::parse_h_selector("square"), std::invalid_argument);
}

TEST(CacheDocument, RoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<lclab::Triangle> cases = {
      lclab::build_triangle(ArithFn::sigma(), HKind::kId, 40),
      lclab::build_triangle(ArithFn::one(), HKind::kOne, 25),
      lclab::build_triangle(lclab::tilde(ArithFn::sigma()), HKind::kOne, 20, 4),
  };
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> values{Rational(1)};
    for (int i = 1; i < 18; ++i) values.push_back(make_rational(num(rng), den(rng)));
    cases.push_back(lclab::build_triangle(ArithFn::from_table(values, "r" + std::to_string(trial)),
                                          trial % 2 ? HKind::kId : HKind::kOne, 18));
  }
  for (const auto& tri : cases) {
    const std::string text = lclab::triangle_to_json(tri);
    expect_same_triangle(tri, lclab::triangle_from_json(text, tri.g()));
    EXPECT_EQ(text, lclab::triangle_to_json(lclab::triangle_from_json(text, tri.g())));
  }
}

TEST(CacheDocument, RejectsTampering) {
  const ArithFn g = ArithFn::sigma();
  const std::string text = lclab::triangle_to_json(lclab::build_triangle(g, HKind::kId, 6));
  EXPECT_THROW(lclab::triangle_from_json(text, ArithFn::one()), lclab::CacheError);

  std::string bumped = text;
  const auto at = bumped.find("\"version\":1");
  ASSERT_NE(at, std::string::npos);
  bumped.replace(at, 11, "\"version\":2");
  EXPECT_THROW(lclab::triangle_from_json(bumped, g), lclab::CacheError);

  std::string edited = text;
  const auto row = edited.find("\"59\"");
  ASSERT_NE(row, std::string::npos);
  edited.replace(row, 4, "\"58\"");
  EXPECT_THROW(lclab::triangle_from_json(edited, g), lclab::CacheError);
  EXPECT_THROW(lclab::triangle_from_json("{not json", g), lclab::CacheError);
}

TEST(Cache, StoreLoadAndTruncate) {
  TempDir dir;
  const lclab::TriangleCache cache(dir.path());
  const ArithFn g = ArithFn::sigma();
  EXPECT_FALSE(cache.load(g, HKind::kId, 10, 10).has_value());

  std::ostringstream warnings;
  const auto cold = lclab::obtain_triangle(g, HKind::kId, 60, std::nullopt, &cache, &warnings);
  EXPECT_TRUE(fs::exists(cache.path_for(g, HKind::kId, 60, 60)));

  const auto hit = cache.load(g, HKind::kId, 30, 30);
  ASSERT_TRUE(hit.has_value());
  expect_same_triangle(*hit, lclab::build_triangle(g, HKind::kId, 30));
  const auto narrow = lclab::obtain_triangle(g, HKind::kId, 50, 3, &cache, &warnings);
  expect_same_triangle(narrow, lclab::build_triangle(g, HKind::kId, 50, 3));
  EXPECT_TRUE(warnings.str().empty()) << warnings.str();

  // Cache hit and cold compute give the same report.
  const auto warm = lclab::obtain_triangle(g, HKind::kId, 60, std::nullopt, &cache, &warnings);
  EXPECT_EQ(lclab::report_to_json(lclab::horizontal_check(warm, 1, 60)),
            lclab::report_to_json(lclab::horizontal_check(cold, 1, 60)));
  EXPECT_EQ(lclab::report_to_json(lclab::vertical_check(warm, 1, 5, 59)),
            lclab::report_to_json(lclab::vertical_check(cold, 1, 5, 59)));
}

TEST(Cache, CorruptEntryFallsBackWithWarning) {
  TempDir dir;
  const lclab::TriangleCache cache(dir.path());
  const ArithFn g = ArithFn::one();
  const auto path = cache.store(lclab::build_triangle(g, HKind::kId, 12));
  std::string text = slurp(path);
  text.replace(text.find("\"274\""), 5, "\"275\"");
  std::ofstream(path, std::ios::trunc) << text;

  std::ostringstream warnings;
  EXPECT_FALSE(cache.load(g, HKind::kId, 12, 12, &warnings).has_value());
  EXPECT_NE(warnings.str().find("checksum"), std::string::npos) << warnings.str();

  warnings.str("");
  const auto tri = lclab::obtain_triangle(g, HKind::kId, 12, std::nullopt, &cache, &warnings);
  EXPECT_FALSE(warnings.str().empty());
  EXPECT_EQ(tri.scaled(6, 2), lclab::Integer(274));
  // The recomputed entry replaced the corrupt one.
  std::ostringstream quiet;
  EXPECT_TRUE(cache.load(g, HKind::kId, 12, 12, &quiet).has_value());
  EXPECT_TRUE(quiet.str().empty());
}

TEST(Output, Formats) {
  const auto tri = lclab::build_triangle(ArithFn::one(), HKind::kId, 6);
  std::ostringstream csv;
  lclab::write_triangle(csv, tri, lclab::TriangleFormat::kCsv);
  EXPECT_NE(csv.str().find("6,720,120,274,225,85,15,1\n"), std::string::npos) << csv.str();

  std::ostringstream json;
  lclab::write_triangle(json, lclab::build_triangle(ArithFn::sigma(), HKind::kId, 4),
                        lclab::TriangleFormat::kJson);
  EXPECT_NE(json.str().find("[\"7/4\",\"59/24\",\"3/4\",\"1/24\"]"), std::string::npos) << json.str();
  EXPECT_THROW(lclab::parse_triangle_format("xml"), std::invalid_argument);
}
