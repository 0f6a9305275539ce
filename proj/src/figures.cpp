#include "multirec/figures.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "multirec/algebra.hpp"
#include "multirec/errors.hpp"
#include "multirec/generators.hpp"
#include "multirec/presets.hpp"

namespace multirec {

namespace fs = std::filesystem;

PartialGrid toGrid(const FiniteWord& f) {
  PartialGrid g(f.size());
  forEachCell(f.size(), [&](const Point& p) { g.set(p, f.at(p)); });
  return g;
}

FigureCheck compareExact(const std::string& name, const GoldenGrid& golden, const PartialGrid& ours) {
  FigureCheck c;
  c.name = name;
  if (ours.size() != golden.size()) {
    c.detail = "size " + toString(ours.size()) + " vs golden " + toString(golden.size());
    return c;
  }
  forEachCell(ours.size(), [&](const Point& p) {
    if (golden.value(p[0], p[1]) != ours.at(p)) {
      if (c.mismatches == 0) c.detail = "first mismatch at " + toString(p);
      ++c.mismatches;
    }
  });
  c.passed = c.mismatches == 0;
  return c;
}

FigureCheck compareBijective(const std::string& name, const GoldenGrid& golden, const PartialGrid& ours) {
  FigureCheck c;
  c.name = name;
  if (ours.size() != golden.size()) {
    c.detail = "size mismatch";
    return c;
  }
  std::map<std::int32_t, std::string> fwd;
  std::map<std::string, std::int32_t> back;
  forEachCell(ours.size(), [&](const Point& p) {
    const auto& t = golden.token(p[0], p[1]);
    const std::int32_t v = ours.at(p);
    bool ok;
    if (t == "?" || v < 0) {
      ok = t == "?" && v < 0;
    } else {
      auto [f, fn] = fwd.emplace(v, t);
      auto [b, bn] = back.emplace(t, v);
      ok = f->second == t && b->second == v;
    }
    if (!ok) {
      if (c.mismatches == 0) c.detail = "first mismatch at " + toString(p);
      ++c.mismatches;
    }
  });
  c.passed = c.mismatches == 0;
  if (c.passed) c.detail = std::to_string(fwd.size()) + " code classes";
  return c;
}

std::map<int, ReturnWord> readReturnCodes(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureMissing(path.string());
  std::map<int, ReturnWord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int code;
    ls >> code;
    ReturnWord r;
    for (std::string col; ls >> col;) {
      std::vector<Letter> cells;
      for (auto it = col.rbegin(); it != col.rend(); ++it) cells.push_back(static_cast<Letter>(*it - '0'));
      r.letters.emplace_back(Size{1, static_cast<std::int64_t>(cells.size())}, cells);
    }
    out.emplace(code, std::move(r));
  }
  return out;
}

namespace {

FigureCheck guarded(const std::string& name, const std::function<FigureCheck()>& fn) {
  try {
    return fn();
  } catch (const FixtureMissing&) {
    throw;
  } catch (const std::exception& e) {
    FigureCheck c;
    c.name = name;
    c.detail = e.what();
    return c;
  }
}

PartialGrid morphicBlock(const std::string& preset, int n) {
  const auto p = morphismPreset(preset);
  return toGrid(p.phi.iterate(p.start, n));
}

PartialGrid prefixGrid(const WordPtr& w, const Size& s) { return toGrid(prefixOf(*w, s)); }

const Size kDerivativeBox{27, 8};
const Size kDerivativeSize{1, 2};

// Cells with the same Greek label, each as a set of residues.
std::map<std::string, std::set<Point>> labelClasses(const GoldenGrid& g) {
  std::map<std::string, std::set<Point>> out;
  for (std::int64_t y = 0; y < g.height; ++y)
    for (std::int64_t x = 0; x < g.width; ++x)
      if (g.token(x, y) != "0") out[g.token(x, y)].insert(Point{x, y});
  return out;
}

std::set<Point> nonZero(const CyclicSubgroup& c) {
  std::set<Point> out;
  for (const auto& e : c.elements)
    if (!e.isZero()) out.insert(e);
  return out;
}

}  // namespace

FigureCheck checkPreimage(const fs::path& dir) {
  return guarded("preimage", [&] {
    return compareExact("preimage", readGolden(dir / "preimage.txt"), morphicBlock("preimage-3x2", 3));
  });
}

FigureCheck checkSurdNotSsurdo(const fs::path& dir) {
  return guarded("surd-not-ssurdo", [&] {
    const auto g = readGolden(dir / "surd_not_ssurdo.txt");
    return compareExact("surd-not-ssurdo", g, prefixGrid(presetWord("surd-not-ssurdo-2x2"), g.size()));
  });
}

FigureCheck checkSierpinski(const fs::path& dir) {
  return guarded("sierpinski", [&] {
    return compareExact("sierpinski", readGolden(dir / "sierpinski.txt"), morphicBlock("sierpinski", 2));
  });
}

FigureCheck checkUrRowsNonUr(const fs::path& dir) {
  return guarded("urrows-non-ur", [&] {
    const auto g = readGolden(dir / "urrows_non_ur.txt");
    return compareExact("urrows-non-ur", g, prefixGrid(fibRowsWord(), g.size()));
  });
}

FigureCheck checkUrNonRecurrentRows(const fs::path& dir) {
  return guarded("ur-non-recurrent-rows", [&] {
    const auto g = readGolden(dir / "ur_non_recurrent_rows.txt");
    return compareExact("ur-non-recurrent-rows", g, prefixGrid(toeplitzRowsWord(), g.size()));
  });
}

FigureCheck checkDer1(const fs::path& dir) {
  return guarded("der1", [&] {
    const auto g = readGolden(dir / "der1.txt");
    const auto w = presetWord("surd-not-ssurdo-2x2");
    const auto d = derivativePerDirection(*w, kDerivativeSize, kDerivativeBox, kDerivativeHorizon);
    return compareExact("der1", g, d.grid);
  });
}

FigureCheck checkDer2(const fs::path& dir) {
  return guarded("der2", [&] {
    const auto g = readGolden(dir / "der2.txt");
    const auto w = presetWord("surd-not-ssurdo-2x2");
    const auto d = derivativeUniform(*w, kDerivativeSize, kDerivativeBox, kDerivativeHorizon);
    return compareBijective("der2", g, d.grid);
  });
}

FigureCheck checkReturnCodes(const fs::path& dir) {
  return guarded("return-codes", [&] {
    FigureCheck c;
    c.name = "return-codes";
    const auto table = readReturnCodes(dir / "return_codes.txt");
    const auto w = presetWord("surd-not-ssurdo-2x2");
    const auto d = derivativeUniform(*w, kDerivativeSize, kDerivativeBox, kDerivativeHorizon);
    std::set<ReturnWord> expected, ours(d.table.words().begin(), d.table.words().end());
    for (const auto& [code, r] : table) expected.insert(r);
    for (const auto& r : expected)
      if (!ours.count(r)) ++c.mismatches;
    for (const auto& r : ours)
      if (!expected.count(r)) ++c.mismatches;
    c.passed = c.mismatches == 0 && ours.size() == table.size();
    c.detail = std::to_string(ours.size()) + " uniform codes, " + std::to_string(table.size()) + " in golden";
    return c;
  });
}

FigureCheck checkSubgroups5(const fs::path& dir) {
  return guarded("subgroups-s5", [&] {
    FigureCheck c;
    c.name = "subgroups-s5";
    const auto g = readGolden(dir / "subgroups_s5.txt");
    const auto fam = familyC(5, 2);
    std::set<std::set<Point>> groups;
    for (const auto& sg : fam.subgroups) groups.insert(nonZero(sg));
    const auto classes = labelClasses(g);
    for (const auto& [label, cells] : classes)
      if (!groups.count(cells)) ++c.mismatches;
    if (classes.size() != groups.size()) ++c.mismatches;
    c.passed = c.mismatches == 0;
    c.detail = std::to_string(fam.subgroups.size()) + " subgroups";
    return c;
  });
}

FigureCheck checkSubgroups6(const fs::path& dir) {
  return guarded("subgroups-s6", [&] {
    FigureCheck c;
    c.name = "subgroups-s6";
    std::ifstream in(dir / "subgroups_s6.txt");
    if (!in) throw FixtureMissing((dir / "subgroups_s6.txt").string());
    const auto fam = familyC(6, 2);
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      ++rows;
      std::istringstream ls(line);
      std::string name, tok;
      ls >> name;
      std::set<Point> gens, elems;
      bool afterBar = false;
      while (ls >> tok) {
        if (tok == "|") {
          afterBar = true;
          continue;
        }
        (afterBar ? elems : gens).insert(parseTuple(tok));
      }
      bool found = false;
      for (std::size_t i = 0; i < fam.subgroups.size(); ++i) {
        if (nonZero(fam.subgroups[i]) != elems) continue;
        const std::set<Point> ours(fam.generators[i].begin(), fam.generators[i].end());
        found = ours == gens;
      }
      if (!found) {
        if (c.mismatches == 0) c.detail = "no subgroup matches " + name;
        ++c.mismatches;
      }
    }
    if (rows != fam.subgroups.size()) ++c.mismatches;
    c.passed = c.mismatches == 0;
    if (c.passed) c.detail = std::to_string(fam.subgroups.size()) + " subgroups";
    return c;
  });
}

std::vector<FigureCheck> verifyFigures(const fs::path& dir) {
  bool any = false;
  if (fs::is_directory(dir))
    for (const auto& e : fs::directory_iterator(dir)) any = any || e.path().extension() == ".txt";
  if (!any) throw FixtureMissing("no golden fixtures in " + dir.string());
  return {checkPreimage(dir),  checkSurdNotSsurdo(dir), checkSierpinski(dir), checkUrRowsNonUr(dir),
          checkUrNonRecurrentRows(dir), checkDer1(dir), checkDer2(dir), checkReturnCodes(dir),
          checkSubgroups5(dir), checkSubgroups6(dir)};
}

}  // namespace multirec
