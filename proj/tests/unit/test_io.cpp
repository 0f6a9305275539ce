#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "multirec/errors.hpp"
#include "multirec/figures.hpp"
#include "multirec/io.hpp"
#include "multirec/presets.hpp"
#include "multirec/rotation.hpp"

using namespace multirec;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("multirec-test-" + std::to_string(std::hash<std::string>{}(
                                                               std::to_string(reinterpret_cast<std::uintptr_t>(this)))));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void writeFile(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("word JSON is bottom row first") {
  const auto f = FiniteWord::fromRowsTopFirst({{1, 0, 0}, {0, 1, 1}});
  const auto j = toJson(f);
  CHECK(j.dump() == "[[0,1,1],[1,0,0]]");
  CHECK(finiteWordFromJson(j) == f);
  const FiniteWord cube(Size{2, 3, 2}, {0, 1, 1, 0, 1, 1, 0, 0, 1, 0, 1, 0});
  CHECK(finiteWordFromJson(toJson(cube)) == cube);
  CHECK_THROWS_AS(finiteWordFromJson(Json::parse("[[0,1],[1]]")), InvalidInput);
  CHECK_THROWS_AS(finiteWordFromJson(Json::parse("[[0,-1],[1,1]]")), InvalidInput);
  CHECK_THROWS_AS(finiteWordFromJson(Json::parse("3")), InvalidInput);
}

TEST_CASE("morphism JSON") {
  for (const auto& name : morphismPresetNames()) {
    const auto phi = morphismPreset(name).phi;
    CHECK(morphismFromJson(toJson(phi)) == phi);
  }
  const auto j = Json::parse(R"({"k":2,"dims":[2,2],"images":{"0":[[0,0],[0,0]],"1":[[1,1],[1,0]]}})");
  const auto phi = morphismFromJson(j);
  CHECK(phi == morphismPreset("sierpinski").phi);

  TempDir dir;
  writeFile(dir.path / "m.json", j.dump());
  CHECK(loadMorphism(dir.path / "m.json") == phi);
  writeFile(dir.path / "bad.json", "{not json");
  CHECK_THROWS_AS(loadMorphism(dir.path / "bad.json"), InvalidInput);
  CHECK_THROWS_AS(loadMorphism(dir.path / "missing.json"), NotFound);
  CHECK_THROWS_AS(morphismFromJson(Json::parse(R"({"k":2,"dims":[2,2],"images":{"0":[[0,0],[0,0]]}})")),
                  InvalidInput);
  CHECK_THROWS_AS(morphismFromJson(Json::parse(R"({"k":2,"dims":[2,2],"images":{"0":[[0,0],[0,0]],"1":[[1,2],[1,0]]}})")),
                  InvalidInput);
}

TEST_CASE("quadratic numbers and rotation specs in JSON") {
  const QuadExt x = QuadExt(Rational(1, 3)) + QuadExt::sqrt(2).scaled(Rational(-2, 7)) + QuadExt::sqrt(15);
  CHECK(quadExtFromJson(toJson(x)) == x);
  CHECK(quadExtFromJson(Json(3)) == QuadExt(3));
  CHECK(quadExtFromJson(Json("5/4")) == QuadExt(Rational(5, 4)));
  CHECK(quadExtFromJson(Json::parse(R"([[1,"-1"],[2,"1"]])")) == QuadExt::sqrt(2) - QuadExt(1));

  const auto spec = defaultSturmianSpec();
  const auto back = rotationSpecFromJson(toJson(spec));
  forEachCell(Size{30, 30}, [&](const Point& p) { REQUIRE(rotationLetter(back, p) == rotationLetter(spec, p)); });
  CHECK_THROWS_AS(rotationSpecFromJson(Json::parse(R"({"alpha":["1/2"],"cuts":["1/3"]})")), InvalidInput);
  CHECK_THROWS_AS(rotationSpecFromJson(Json::parse(R"({"alpha":[[[2,"1/2"]]],"cuts":["1/3"],"orientation":"left"})")),
                  InvalidInput);
}

TEST_CASE("text grids") {
  const auto f = FiniteWord::fromRowsTopFirst({{1, 0, 0}, {0, 1, 1}});
  CHECK(toText(f) == "1 0 0\n0 1 1\n");
  PartialGrid g(Size{2, 2});
  g.set(Point{1, 0}, 3);
  CHECK(toText(g) == "? ?\n? 3\n");
  CHECK(formatGolden(g, 4) == "dims=2x2 alphabet=4\n? ?\n? 3\n");
  const auto parsed = parseGolden(formatGolden(g, 4));
  CHECK(parsed.value(1, 0) == 3);
  CHECK(parsed.value(0, 0) == -1);
  CHECK(parsed.token(0, 1) == "?");
  CHECK_THROWS_AS(parseGolden("dims=2x2\n0 0\n0 0\n"), InvalidInput);
  CHECK_THROWS_AS(parseGolden("dims=2x2 alphabet=2\n0 0\n0\n"), InvalidInput);
  CHECK_THROWS_AS(parseGolden("dims=2x2 alphabet=2\n0 0\n"), InvalidInput);
  CHECK_THROWS_AS(parseGolden("dims=1x1 alphabet=2\nx\n").value(0, 0), InvalidInput);
}

TEST_CASE("rendering") {
  const auto w = presetWord("sierpinski");
  const auto pbm = lines(render(*w, RenderSpec{RenderFormat::Pbm, Size{32, 32}}));
  REQUIRE(pbm.size() == 34);
  CHECK(pbm[0] == "P1");
  CHECK(pbm[1] == "32 32");
  for (std::int64_t r = 0; r < 32; ++r) {
    const std::int64_t y = 31 - r;
    std::istringstream in(pbm[static_cast<std::size_t>(r + 2)]);
    for (std::int64_t x = 0; x < 32; ++x) {
      int v;
      in >> v;
      REQUIRE(v == ((x & y) == 0 ? 1 : 0));
    }
  }
  const auto pgm = lines(render(*w, RenderSpec{RenderFormat::Pgm, Size{4, 2}}));
  CHECK(pgm == std::vector<std::string>{"P2", "4 2", "255", "255 0 255 0", "255 255 255 255"});
  CHECK(render(*w, RenderSpec{RenderFormat::Csv, Size{4, 2}}) == "1,0,1,0\n1,1,1,1\n");
  CHECK(render(*w, RenderSpec{RenderFormat::Json, Size{2, 2}}) == "[[1,1],[1,0]]\n");
  CHECK(render(*w, RenderSpec{RenderFormat::Text, Size{2, 2}}) == "1 0\n1 1\n");

  const auto three = makeWord(2, 3, [](const Point& p) { return Letter(p[0] % 3); });
  CHECK_THROWS_AS(render(*three, RenderSpec{RenderFormat::Pbm, Size{3, 1}}), InvalidInput);
  CHECK(render(*three, RenderSpec{RenderFormat::Pgm, Size{3, 1}}) == "P2\n3 1\n255\n0 127 255\n");
  CHECK_THROWS_AS(parseRenderFormat("png"), InvalidInput);
  CHECK(parseRenderFormat("pgm") == RenderFormat::Pgm);
}

TEST_CASE("tuples") {
  CHECK(parseTuple("27x8") == Point{27, 8});
  CHECK(parseTuple("1,3") == Point{1, 3});
  CHECK(parseTuple("6,10,15") == Point{6, 10, 15});
  CHECK_THROWS_AS(parseTuple("1,,3"), InvalidInput);
  CHECK_THROWS_AS(parseTuple("1xa"), InvalidInput);
  CHECK_THROWS_AS(parseTuple("2x"), InvalidInput);
}

TEST_CASE("presets") {
  const auto names = morphismPresetNames();
  for (const auto* n : {"preimage-3x2", "sierpinski", "ssurdo-3x3", "surd-not-ssurdo-2x2", "suffnotnec-3x3", "power-3x3"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(morphismPreset("nope"), NotFound);
  CHECK_THROWS_AS(presetWord("nope"), NotFound);
  for (const auto& n : wordPresetNames()) CHECK(presetWord(n)->dimension() >= 1);

  // Rows listed bottom to top.
  const auto snn = morphismPreset("suffnotnec-3x3").phi;
  const std::vector<std::vector<Letter>> zero{{0, 0, 1}, {0, 0, 0}, {1, 1, 0}}, one{{1, 1, 0}, {0, 1, 0}, {1, 1, 1}};
  for (std::int64_t y = 0; y < 3; ++y)
    for (std::int64_t x = 0; x < 3; ++x) {
      CHECK(snn.image(0).at(Point{x, y}) == zero[y][x]);
      CHECK(snn.image(1).at(Point{x, y}) == one[y][x]);
    }
  const auto ss = morphismPreset("surd-not-ssurdo-2x2").phi;
  CHECK(ss.image(0).cells() == std::vector<Letter>{1, 1, 1, 1});
  CHECK(ss.image(1).at(Point{0, 0}) == 1);
  CHECK(ss.image(1).at(Point{1, 0}) == 0);
}

TEST_CASE("figure harness") {
  TempDir empty;
  CHECK_THROWS_AS(verifyFigures(empty.path), FixtureMissing);

  for (const auto& c : verifyFigures(fixtureDir())) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }

  TempDir broken;
  for (const auto& e : fs::directory_iterator(fixtureDir())) fs::copy(e.path(), broken.path / e.path().filename());
  auto text = [&] {
    std::ifstream in(broken.path / "sierpinski.txt");
    std::stringstream b;
    b << in.rdbuf();
    return b.str();
  }();
  text[text.find('\n') + 1] = text[text.find('\n') + 1] == '1' ? '0' : '1';
  writeFile(broken.path / "sierpinski.txt", text);
  fs::remove(broken.path / "der1.txt");
  bool sawSierpinski = false;
  CHECK_THROWS_AS(verifyFigures(broken.path), FixtureMissing);
  writeFile(broken.path / "der1.txt", "dims=1x1 alphabet=1\n0\n");
  for (const auto& c : verifyFigures(broken.path)) {
    if (c.name == "sierpinski") {
      sawSierpinski = true;
      CHECK_FALSE(c.passed);
      CHECK(c.mismatches == 1);
    }
    if (c.name == "der1") CHECK_FALSE(c.passed);
  }
  CHECK(sawSierpinski);
}

TEST_CASE("bijective comparison") {
  const auto g = parseGolden("dims=3x1 alphabet=2\n? a b\n");
  PartialGrid ok(Size{3, 1});
  ok.set(Point{1, 0}, 7);
  ok.set(Point{2, 0}, 2);
  CHECK(compareBijective("x", g, ok).passed);
  PartialGrid merged(Size{3, 1});
  merged.set(Point{1, 0}, 7);
  merged.set(Point{2, 0}, 7);
  CHECK_FALSE(compareBijective("x", g, merged).passed);
  PartialGrid origin = ok;
  origin.set(Point{0, 0}, 1);
  CHECK_FALSE(compareBijective("x", g, origin).passed);
}
