#include "multirec/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "multirec/errors.hpp"

namespace multirec {

namespace {

Json nest(const FiniteWord& f, Point& i, std::size_t axis) {
  Json arr = Json::array();
  for (std::int64_t v = 0; v < f.size()[axis]; ++v) {
    i[axis] = v;
    arr.push_back(axis == 0 ? Json(f.at(i)) : nest(f, i, axis - 1));
  }
  return arr;
}

void shapeOf(const Json& j, std::vector<std::int64_t>& dims) {
  if (!j.is_array()) return;
  if (j.empty()) throw InvalidInput("empty array in word");
  dims.push_back(static_cast<std::int64_t>(j.size()));
  shapeOf(j.front(), dims);
}

void fill(const Json& j, FiniteWord& f, Point& i, std::size_t axis) {
  if (!j.is_array() || static_cast<std::int64_t>(j.size()) != f.size()[axis])
    throw InvalidInput("ragged array in word");
  for (std::int64_t v = 0; v < f.size()[axis]; ++v) {
    i[axis] = v;
    if (axis == 0) {
      if (!j[v].is_number_integer() || j[v].get<std::int64_t>() < 0) throw InvalidInput("letters must be naturals");
      f.set(i, j[v].get<Letter>());
    } else {
      fill(j[v], f, i, axis - 1);
    }
  }
}

}  // namespace

Json toJson(const FiniteWord& f) {
  Point i(f.dim());
  return nest(f, i, f.dim() - 1);
}

FiniteWord finiteWordFromJson(const Json& j) {
  std::vector<std::int64_t> outer;
  shapeOf(j, outer);
  if (outer.empty() || outer.size() > kMaxDim) throw InvalidInput("word must be a nested array");
  Point dims(outer.size());
  for (std::size_t k = 0; k < outer.size(); ++k) dims[k] = outer[outer.size() - 1 - k];
  FiniteWord f{Size(dims)};
  Point i(dims.dim());
  fill(j, f, i, dims.dim() - 1);
  return f;
}

Json toJson(const Morphism& phi) {
  Json images = Json::object();
  for (Letter a = 0; a < phi.alphabetSize(); ++a) images[std::to_string(a)] = toJson(phi.image(a));
  return {{"k", phi.alphabetSize()}, {"dims", std::vector<std::int64_t>(phi.dims().begin(), phi.dims().end())},
          {"images", images}};
}

Morphism morphismFromJson(const Json& j) {
  try {
    const auto k = j.at("k").get<std::size_t>();
    const auto dimsRaw = j.at("dims").get<std::vector<std::int64_t>>();
    const Size dims{Point(std::span<const std::int64_t>(dimsRaw))};
    std::vector<FiniteWord> images;
    for (std::size_t a = 0; a < k; ++a) images.push_back(finiteWordFromJson(j.at("images").at(std::to_string(a))));
    return Morphism(k, dims, std::move(images));
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("bad morphism json: ") + e.what());
  }
}

Morphism loadMorphism(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("cannot open " + path.string());
  try {
    return morphismFromJson(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("bad json: ") + e.what());
  }
}

Json toJson(const QuadExt& x) {
  Json arr = Json::array();
  for (const auto& [r, c] : x.terms()) arr.push_back({r, c.toString()});
  return arr;
}

QuadExt quadExtFromJson(const Json& j) {
  if (j.is_number_integer()) return QuadExt(j.get<std::int64_t>());
  if (j.is_string()) return QuadExt(Rational::parse(j.get<std::string>()));
  QuadExt x;
  try {
    for (const auto& t : j) x = x + QuadExt::term(Rational::parse(t.at(1).get<std::string>()), t.at(0).get<std::int64_t>());
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("bad quadratic number: ") + e.what());
  }
  return x;
}

Json toJson(const RotationWordSpec& spec) {
  Json alpha = Json::array(), cuts = Json::array();
  for (const auto& a : spec.alpha) alpha.push_back(toJson(a));
  for (const auto& c : spec.partition.cuts()) cuts.push_back(toJson(c));
  return {{"alpha", alpha},
          {"rho", toJson(spec.rho)},
          {"cuts", cuts},
          {"orientation", spec.partition.orientation() == Orientation::Lower ? "lower" : "upper"}};
}

RotationWordSpec rotationSpecFromJson(const Json& j) {
  RotationWordSpec spec;
  try {
    for (const auto& a : j.at("alpha")) spec.alpha.push_back(quadExtFromJson(a));
    spec.rho = j.contains("rho") ? quadExtFromJson(j["rho"]) : QuadExt(0);
    std::vector<QuadExt> cuts;
    for (const auto& c : j.at("cuts")) cuts.push_back(quadExtFromJson(c));
    const std::string o = j.value("orientation", "lower");
    if (o != "lower" && o != "upper") throw InvalidInput("orientation must be lower or upper");
    spec.partition = IntervalPartition(std::move(cuts), o == "lower" ? Orientation::Lower : Orientation::Upper);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("bad rotation spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

namespace {

template <class Cell>
std::string textGrid(std::int64_t w, std::int64_t h, Cell cell) {
  std::ostringstream out;
  for (std::int64_t y = h - 1; y >= 0; --y) {
    for (std::int64_t x = 0; x < w; ++x) {
      if (x) out << ' ';
      const auto v = cell(x, y);
      if (v < 0) out << '?';
      else out << v;
    }
    out << '\n';
  }
  return out.str();
}

void require2d(const Point& s) {
  if (s.dim() != 2) throw DimensionError("text grids are 2-D");
}

}  // namespace

std::string toText(const FiniteWord& f) {
  if (f.dim() == 1) return textGrid(f.size()[0], 1, [&](auto x, auto) { return std::int64_t(f.at(Point{x})); });
  require2d(f.size());
  return textGrid(f.size()[0], f.size()[1], [&](auto x, auto y) { return std::int64_t(f.at(Point{x, y})); });
}

std::string toText(const PartialGrid& g) {
  require2d(g.size());
  return textGrid(g.size()[0], g.size()[1], [&](auto x, auto y) { return std::int64_t(g.at(Point{x, y})); });
}

const std::string& GoldenGrid::token(std::int64_t x, std::int64_t y) const {
  if (x < 0 || y < 0 || x >= width || y >= height) throw InvalidInput("cell outside golden grid");
  return rowsTopFirst[static_cast<std::size_t>(height - 1 - y)][static_cast<std::size_t>(x)];
}

int GoldenGrid::value(std::int64_t x, std::int64_t y) const {
  const auto& t = token(x, y);
  if (t == "?") return -1;
  try {
    return std::stoi(t);
  } catch (const std::logic_error&) {
    throw InvalidInput("non-numeric golden cell '" + t + "'");
  }
}

GoldenGrid parseGolden(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  static const std::regex re(R"(dims=(\d+)x(\d+) alphabet=(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(header, m, re)) throw InvalidInput("bad golden header '" + header + "'");
  GoldenGrid g;
  g.width = std::stoll(m[1]);
  g.height = std::stoll(m[2]);
  g.alphabet = std::stoul(m[3]);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> row;
    for (std::string t; ls >> t;) row.push_back(t);
    if (static_cast<std::int64_t>(row.size()) != g.width) throw InvalidInput("golden row has wrong width");
    g.rowsTopFirst.push_back(std::move(row));
  }
  if (static_cast<std::int64_t>(g.rowsTopFirst.size()) != g.height) throw InvalidInput("golden has wrong height");
  return g;
}

GoldenGrid readGolden(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureMissing(path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parseGolden(buf.str());
}

std::string formatGolden(const PartialGrid& g, std::size_t alphabet) {
  require2d(g.size());
  return "dims=" + std::to_string(g.size()[0]) + "x" + std::to_string(g.size()[1]) +
         " alphabet=" + std::to_string(alphabet) + "\n" + toText(g);
}

std::filesystem::path fixtureDir() {
  if (const char* env = std::getenv("MULTIREC_FIXTURE_DIR")) return env;
  return MULTIREC_FIXTURE_DIR;
}

RenderFormat parseRenderFormat(const std::string& name) {
  if (name == "text") return RenderFormat::Text;
  if (name == "json") return RenderFormat::Json;
  if (name == "csv") return RenderFormat::Csv;
  if (name == "pbm") return RenderFormat::Pbm;
  if (name == "pgm") return RenderFormat::Pgm;
  throw InvalidInput("unknown format '" + name + "'");
}

std::string render(const FiniteWord& f, RenderFormat format, std::size_t alphabet) {
  if (format == RenderFormat::Json) return toJson(f).dump() + "\n";
  if (format == RenderFormat::Text) return toText(f);
  const std::int64_t w = f.size()[0];
  const std::int64_t h = f.dim() == 1 ? 1 : f.size()[1];
  if (f.dim() > 2) throw DimensionError("only 1-D and 2-D words can be rendered as images");
  auto cell = [&](std::int64_t x, std::int64_t y) { return f.dim() == 1 ? f.at(Point{x}) : f.at(Point{x, y}); };
  std::ostringstream out;
  if (format == RenderFormat::Csv) {
    for (std::int64_t y = h - 1; y >= 0; --y)
      for (std::int64_t x = 0; x < w; ++x) out << cell(x, y) << (x + 1 < w ? "," : "\n");
    return out.str();
  }
  if (format == RenderFormat::Pbm) {
    if (alphabet > 2) throw InvalidInput("PBM needs a binary alphabet");
    out << "P1\n" << w << ' ' << h << '\n';
  } else {
    out << "P2\n" << w << ' ' << h << "\n255\n";
  }
  const std::size_t top = std::max<std::size_t>(alphabet, 2) - 1;
  for (std::int64_t y = h - 1; y >= 0; --y) {
    for (std::int64_t x = 0; x < w; ++x) {
      if (x) out << ' ';
      const Letter a = cell(x, y);
      if (format == RenderFormat::Pbm) out << (a == 1 ? 1 : 0);
      else out << (a * 255 / top);
    }
    out << '\n';
  }
  return out.str();
}

std::string render(const WordSource& w, const RenderSpec& spec) {
  return render(factorAt(w, Point(w.dimension()), spec.box), spec.format, w.alphabetSize());
}

Point parseTuple(const std::string& text) {
  std::vector<std::int64_t> v;
  std::string item;
  for (char c : text + ",") {
    if (c == ',' || c == 'x' || c == 'X') {
      if (item.empty()) throw InvalidInput("bad tuple '" + text + "'");
      try {
        std::size_t used = 0;
        v.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument("trailing");
      } catch (const std::logic_error&) {
        throw InvalidInput("bad tuple '" + text + "'");
      }
      item.clear();
    } else {
      item += c;
    }
  }
  if (v.size() > kMaxDim) throw DimensionError("too many coordinates");
  return Point(std::span<const std::int64_t>(v));
}

}  // namespace multirec
