#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "support.hpp"
#include "wha/io.hpp"
#include "wha/simples.hpp"

using namespace wha;
using oracle::H;
using oracle::Q;

namespace fs = std::filesystem;

namespace {

const Field<Rational> kQ;

H get(const std::string& name) { return *builtin(kQ, name); }

fs::path temp_dir() {
  fs::path d = fs::temp_directory_path() / ("wha_catalog_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::create_directories(d);
  return d;
}

Json sweedler_json() { return algebra_to_json(get("sweedler")); }

void expect_input_error(const Json& j, const std::string& fragment) {
  try {
    algebra_from_json(j, kQ);
    ADD_FAILURE() << "accepted: " << fragment;
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Catalog, NamesAndDimensions) {
  const std::vector<std::pair<std::string, std::size_t>> dims = {
      {"k", 1}, {"kc2", 2}, {"fun-c2", 2}, {"sweedler", 4}, {"pairgpd2", 4}, {"pairgpd3", 9},
      {"sum:kc2,pairgpd2", 6}, {"sum:sweedler,fun-c2", 6}, {"sum:sweedler,pairgpd2", 8}};
  ASSERT_EQ(builtin_catalog_names().size(), dims.size());
  for (const auto& [name, n] : dims) EXPECT_EQ(get(name).dim(), n) << name;
  EXPECT_FALSE(builtin(kQ, "nope"));
  EXPECT_FALSE(builtin(kQ, "sum:k"));
  EXPECT_FALSE(builtin(kQ, "sum:k,nope"));
}

TEST(Catalog, HandWrittenFilesMatchBuiltins) {
  EXPECT_EQ(load_algebra(WHA_DATA_DIR "/sweedler.wha.json", kQ), get("sweedler"));
  Field<ModP> f7(7);
  EXPECT_EQ(load_algebra(WHA_DATA_DIR "/kc3-f7.wha.json", f7), *builtin(f7, "kc3"));
}

TEST(Catalog, DirectSumAcrossFieldsRejected) {
  Field<ModP> f5(5), f7(7);
  EXPECT_THROW(direct_sum(*builtin(f5, "kc2"), *builtin(f7, "kc2")), InputError);
}

TEST(AlgebraIo, RoundTripThroughFiles) {
  auto dir = temp_dir();
  for (const auto& name : builtin_catalog_names()) {
    H h = get(name);
    auto path = (dir / "a.wha.json").string();
    save_algebra(h, path);
    EXPECT_EQ(load_algebra(path, kQ), h) << name;
  }
  Field<ModP> f5(5);
  auto h5 = *builtin(f5, "sweedler");
  EXPECT_EQ(algebra_from_json(algebra_to_json(h5), f5), h5);
  fs::remove_all(dir);
}

TEST(AlgebraIo, SerializationIsDeterministic) {
  for (const auto& name : builtin_catalog_names())
    EXPECT_EQ(algebra_to_json(get(name)).dump(), algebra_to_json(get(name)).dump()) << name;
}

TEST(AlgebraIo, RejectsMalformedInput) {
  Json j = sweedler_json();
  j["extra"] = 1;
  expect_input_error(j, "extra: unknown field");

  j = sweedler_json();
  j.erase("counit");
  expect_input_error(j, "counit: missing field");

  j = sweedler_json();
  j["mult"].push_back(j["mult"][0]);
  expect_input_error(j, "duplicate entry");

  j = sweedler_json();
  j["unit"][0] = "1/0";
  expect_input_error(j, "malformed scalar '1/0'");

  j = sweedler_json();
  j["unit"][0] = 1;
  expect_input_error(j, "scalar must be a string");

  j = sweedler_json();
  j["version"] = 2;
  expect_input_error(j, "version");

  j = sweedler_json();
  j["format"] = "other";
  expect_input_error(j, "format");

  j = sweedler_json();
  j["field"] = "Fp:5";
  expect_input_error(j, "field: file declares Fp:5");

  j = sweedler_json();
  j["comult"][0][1] = 4u;
  expect_input_error(j, "out of range");

  j = sweedler_json();
  j["antipode"][0] = Json::array({0, "1"});
  expect_input_error(j, "expected [i, j, \"c\"]");

  j = sweedler_json();
  j["basis"][1] = "1";
  expect_input_error(j, "duplicate label");

  j = sweedler_json();
  j["dim"] = 0;
  expect_input_error(j, "dim");
}

TEST(AlgebraIo, FileErrors) {
  EXPECT_THROW(load_algebra("/nonexistent/x.wha.json", kQ), InputError);
  auto dir = temp_dir();
  auto path = (dir / "bad.wha.json").string();
  {
    std::ofstream out(path);
    out << "{\"format\": ";
  }
  EXPECT_THROW(load_algebra(path, kQ), InputError);
  fs::remove_all(dir);
}

TEST(ModuleIo, RoundTripAndErrors) {
  for (const auto& name : {"kc2", "sweedler", "pairgpd2"}) {
    H h = get(name);
    for (const auto& m : simple_modules(h)) {
      auto back = module_from_json(h, module_to_json(h, m));
      EXPECT_EQ(back.side, m.side) << name;
      EXPECT_EQ(back.dim, m.dim) << name;
      EXPECT_EQ(back.action, m.action) << name;
    }
  }
  H h = get("sweedler");
  Json j = module_to_json(h, regular_module(h.algebra(), Side::right));
  EXPECT_EQ(module_from_json(h, j).side, Side::right);
  Json bad = j;
  bad["side"] = "middle";
  EXPECT_THROW(module_from_json(h, bad), InputError);
  bad = j;
  bad["action"].erase("gx");
  EXPECT_THROW(module_from_json(h, bad), InputError);
  bad = j;
  bad["action"]["y"] = bad["action"]["x"];
  EXPECT_THROW(module_from_json(h, bad), InputError);
}

// Arbitrary constants survive the round trip, including large and negative scalars.
TEST(IoProperty, RandomConstantsRoundTrip) {
  std::mt19937 rng(8080);
  std::uniform_int_distribution<int> small(-9, 9), size(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = size(rng);
    auto rnd = [&] {
      if (rng() % 3) return Q(0);
      Q big(1);
      for (int k = 0; k < 4; ++k) big *= Q(1000003);
      return rng() % 2 ? Q(small(rng)) / Q(small(rng) == 0 ? 7 : 11) : big * Q(small(rng));
    };
    Matrix<Q> mult(n, n * n), comult(n * n, n), anti(n, n);
    Vector<Q> unit(n), counit(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n * n; ++c) mult(r, c) = rnd(), comult(c, r) = rnd();
    for (std::size_t r = 0; r < n; ++r) {
      unit[r] = r == 0 ? Q(1) : rnd(), counit[r] = rnd();
      for (std::size_t c = 0; c < n; ++c) anti(r, c) = rnd();
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e\"" + std::to_string(i) + "·");
    H h(kQ, labels, mult, unit, comult, counit, anti);
    EXPECT_EQ(algebra_from_json(Json::parse(algebra_to_json(h).dump()), kQ), h);
  }
}
