#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "multirec/algebra.hpp"
#include "multirec/derive.hpp"
#include "multirec/errors.hpp"
#include "multirec/figures.hpp"
#include "multirec/io.hpp"
#include "multirec/morphic_analysis.hpp"
#include "multirec/presets.hpp"
#include "multirec/recurrence.hpp"
#include "multirec/rotation.hpp"

using namespace multirec;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerification = 2, kBudget = 3 };

Json loadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("no preset or file named '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("bad json: ") + e.what());
  }
}

// Morphism files may carry an optional "start" letter.
struct LoadedMorphism {
  Morphism phi;
  Letter start;
};

LoadedMorphism resolveMorphism(const std::string& name) {
  const auto names = morphismPresetNames();
  if (std::find(names.begin(), names.end(), name) != names.end()) {
    auto p = morphismPreset(name);
    return {p.phi, p.start};
  }
  const Json j = loadJson(name);
  auto phi = morphismFromJson(j);
  Letter start = j.value("start", Letter{1});
  if (!j.contains("start")) {
    start = 0;
    while (start < phi.alphabetSize() && !checkProlongable(phi, start)) ++start;
    if (start == phi.alphabetSize()) throw NotProlongable("no prolongable letter in " + name);
  }
  return {phi, start};
}

WordPtr resolveWord(const std::string& name) {
  const auto names = wordPresetNames();
  if (std::find(names.begin(), names.end(), name) != names.end()) return presetWord(name);
  const Json j = loadJson(name);
  if (j.contains("alpha")) return rotationWord(rotationSpecFromJson(j));
  const auto m = resolveMorphism(name);
  return fixedPoint(m.phi, m.start, name);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + out);
  f << text;
}

Json pointJson(const Point& p) { return std::vector<std::int64_t>(p.begin(), p.end()); }

Json optJson(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json reportJson(const GapReport& r) {
  return {{"direction", pointJson(r.direction)}, {"size", pointJson(r.size)},
          {"origin", pointJson(r.origin)},       {"horizon", r.horizon},
          {"occurrences", r.occurrences.size()}, {"maxGap", optJson(r.maxGap)},
          {"claim", optJson(r.claim)},           {"verdict", toString(r.verdict)}};
}

Json summaryJson(const SizeSummary& s) {
  return {{"size", pointJson(s.size)},
          {"bound", optJson(s.bound)},
          {"verdict", toString(s.verdict)},
          {"combinations", s.combinations},
          {"worst", reportJson(s.worst)}};
}

Json conditionJson(const ConditionVerdict& c) {
  Json pos = Json::array();
  for (const auto& p : c.positions) pos.push_back(pointJson(p));
  return {{"condition", c.condition},
          {"holds", c.holds},
          {"witness", c.witness ? Json(*c.witness) : Json(nullptr)},
          {"positions", pos},
          {"size", c.size}};
}

Json witnessJson(const Witness2x2& w) {
  return {{"case", w.caseTag},           {"direction", pointJson(w.direction)},
          {"transposed", w.transposed},  {"parameter", w.parameter},
          {"firstIndex", w.firstIndex},  {"lastIndex", w.lastIndex},
          {"expected", w.expected},      {"pattern", w.pattern}};
}

bool allBounded(const std::vector<SizeSummary>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& s) { return s.verdict == Verdict::BoundedWitnessed; });
}

// Text form of the subgroup table: name, generators, then the nonzero elements.
std::string subgroupTable(const SubgroupFamily& fam) {
  std::ostringstream out;
  for (std::size_t i = 0; i < fam.subgroups.size(); ++i) {
    out << "H" << i + 1;
    for (const auto& g : fam.generators[i]) out << ' ' << toString(g);
    out << " |";
    for (const auto& e : fam.subgroups[i].elements)
      if (!e.isZero()) out << ' ' << toString(e);
    out << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multidimensional words: generation, recurrence checks and derivatives"};
  app.require_subcommand(1);

  std::string out;
  app.add_option("-o,--out", out, "Write output to a file instead of stdout");

  // generate
  auto* gen = app.add_subcommand("generate", "Render a finite block of a word");
  std::string genWord, genBox = "27x8", genFormat = "text";
  gen->add_option("--preset,--word", genWord, "Word preset or JSON file")->required();
  gen->add_option("--box", genBox, "Block size, e.g. 32x32");
  gen->add_option("--format", genFormat, "text|json|csv|pbm|pgm");

  // extract
  auto* ext = app.add_subcommand("extract", "Directional word w_{q,s}");
  std::string extWord, extDir = "1,1", extSize = "1x1", extOrigin;
  std::int64_t extLen = 10;
  bool extJson = false;
  ext->add_option("--preset,--word", extWord, "Word preset or JSON file")->required();
  ext->add_option("--dir", extDir, "Direction q");
  ext->add_option("--size", extSize, "Block size s");
  ext->add_option("--origin", extOrigin, "Start position");
  ext->add_option("--len", extLen, "Number of letters")->check(CLI::PositiveNumber);
  ext->add_flag("--json", extJson, "JSON output");

  // check
  auto* chk = app.add_subcommand("check", "Empirical recurrence check");
  std::string chkWord, chkMode = "surd", chkBudget;
  unsigned chkWorkers = 0;
  bool chkJson = false;
  chk->add_option("--word,--preset", chkWord, "Word preset or JSON file")->required();
  chk->add_option("--mode", chkMode, "ur|urd|surd|ssurdo")
      ->check(CLI::IsMember({"ur", "urd", "surd", "ssurdo"}));
  chk->add_option("--budget", chkBudget, "L,Q,S,P,B");
  chk->add_option("--workers", chkWorkers, "Worker threads (0: all cores)");
  chk->add_flag("--json", chkJson, "JSON output");

  // classify
  auto* cls = app.add_subcommand("classify", "Sufficient conditions and the 2x2 characterization");
  std::string clsPreset, clsBudget;
  bool clsAll = false;
  int clsParam = 3;
  cls->add_option("--preset,--morphism", clsPreset, "Morphism preset or JSON file");
  cls->add_flag("--all-2x2", clsAll, "Classify every binary morphism of size 2");
  cls->add_option("--budget", clsBudget, "L,Q,S,P,B for the empirical cross-check");
  cls->add_option("--parameter", clsParam, "Odd parameter n of the witness directions");

  // subgroups
  auto* sub = app.add_subcommand("subgroups", "The family C(s) of cyclic subgroups");
  std::int64_t subS = 5;
  std::size_t subD = 2;
  bool subJson = false;
  sub->add_option("--s", subS, "Modulus")->check(CLI::Range(2, 1000));
  sub->add_option("--d", subD, "Dimension")->check(CLI::Range(1, 4));
  sub->add_flag("--json", subJson, "JSON output");

  // derive
  auto* der = app.add_subcommand("derive", "Return-word derivative");
  std::string derWord = "surd-not-ssurdo-2x2", derSize = "1x2", derBox = "27x8", derScheme = "per-direction";
  std::int64_t derHorizon = kDerivativeHorizon;
  bool derJson = false, derGrid = false;
  der->add_option("--word,--preset", derWord, "Word preset or JSON file");
  der->add_option("--size", derSize, "Block size s");
  der->add_option("--box", derBox, "Box of cells to code");
  der->add_option("--scheme", derScheme, "per-direction|uniform")
      ->check(CLI::IsMember({"per-direction", "uniform"}));
  der->add_option("--horizon", derHorizon, "Scan horizon along each direction");
  der->add_flag("--json", derJson, "JSON output");
  der->add_flag("--grid", derGrid, "Golden-style grid output");

  // verify-figures
  auto* ver = app.add_subcommand("verify-figures", "Regenerate every golden and diff");
  std::string verDir = fixtureDir().string();
  ver->add_option("--dir", verDir, "Fixture directory");

  // presets
  auto* pre = app.add_subcommand("presets", "List the named words and morphisms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      const auto w = resolveWord(genWord);
      emit(render(*w, RenderSpec{parseRenderFormat(genFormat), Size(parseTuple(genBox))}), out);
      return kOk;
    }

    if (*ext) {
      const auto w = resolveWord(extWord);
      const Direction q = normalizeDirection(parseTuple(extDir));
      const Size s(parseTuple(extSize));
      const Point o = extOrigin.empty() ? Point(w->dimension()) : parseTuple(extOrigin);
      const auto shifted = extOrigin.empty() ? w : translateOrigin(w, Position(o));
      Json arr = Json::array();
      std::ostringstream text;
      for (std::int64_t l = 0; l < extLen; ++l) {
        const auto block = directionalLetter(*shifted, q, s, l);
        arr.push_back(toJson(block));
        text << "l=" << l << '\n' << toText(block);
      }
      emit(extJson ? arr.dump() + "\n" : text.str(), out);
      return kOk;
    }

    if (*chk) {
      const auto w = resolveWord(chkWord);
      auto budget = chkBudget.empty() ? RecurrenceBudget{} : RecurrenceBudget::parse(chkBudget);
      budget.workers = chkWorkers;
      budget.validate();
      Json arr = Json::array();
      std::ostringstream text;
      bool bounded = true;
      if (chkMode == "ur") {
        for (const auto& r : checkUREmpirical(*w, budget)) {
          arr.push_back({{"size", pointJson(r.size)}, {"b", optJson(r.b)}});
          text << "size " << toString(r.size) << ": b = " << (r.b ? std::to_string(*r.b) : "none") << '\n';
          bounded = bounded && r.b.has_value();
        }
      } else if (chkMode == "urd") {
        for (const auto& r : checkURDEmpirical(*w, budget)) {
          arr.push_back(reportJson(r));
          text << "q=" << toString(r.direction) << " s=" << toString(r.size) << ": " << toString(r.verdict);
          if (r.maxGap) text << " gap " << *r.maxGap;
          text << '\n';
          bounded = bounded && r.verdict == Verdict::BoundedWitnessed;
        }
      } else {
        const auto sums = chkMode == "surd" ? checkSURDEmpirical(*w, budget) : checkSSURDOEmpirical(*w, budget);
        for (const auto& s : sums) {
          arr.push_back(summaryJson(s));
          text << "s=" << toString(s.size) << ": " << toString(s.verdict);
          if (s.bound) text << " bound " << *s.bound;
          text << " (" << s.combinations << " combinations)\n";
        }
        bounded = allBounded(sums);
      }
      emit(chkJson ? arr.dump(2) + "\n" : text.str(), out);
      return bounded ? kOk : kBudget;
    }

    if (*cls) {
      if (clsAll == !clsPreset.empty()) throw InvalidInput("give exactly one of --preset or --all-2x2");
      std::optional<RecurrenceBudget> budget;
      if (!clsBudget.empty()) budget = RecurrenceBudget::parse(clsBudget);
      Json arr = Json::array();
      bool ok = true;
      if (clsAll) {
        for (const auto& phi : enumerate2x2()) {
          Json row = {{"morphism", toJson(phi)}, {"verdict", toString(classify2x2(phi))}};
          if (classify2x2(phi) == Surd2x2::NotSurd) {
            const auto wit = nonSurd2x2Witness(phi, clsParam);
            const bool verified = verifyWitness(*fixedPoint(phi, 1), wit);
            row["witness"] = witnessJson(wit);
            row["verified"] = verified;
            ok = ok && verified;
          } else if (budget) {
            const auto sums = checkSURDEmpirical(*fixedPoint(phi, 1), *budget, mainMorphicClaimFn(2));
            row["empirical"] = allBounded(sums) ? "bounded" : "unbounded";
            ok = ok && allBounded(sums);
          }
          arr.push_back(row);
        }
      } else {
        const auto m = resolveMorphism(clsPreset);
        Json row = {{"morphism", toJson(m.phi)}, {"letter", m.start}};
        Json conds = Json::array();
        conds.push_back(conditionJson(checkMainMorphic(m.phi, m.start)));
        conds.push_back(conditionJson(checkCor1(m.phi, m.start)));
        conds.push_back(conditionJson(checkPower(m.phi, m.start, 2)));
        if (isPrime(m.phi.dims()[0])) conds.push_back(conditionJson(checkHyperplane(m.phi, m.start)));
        row["conditions"] = conds;
        if (m.phi.dims().dim() == 2 && m.phi.dims()[0] == 2 && m.phi.alphabetSize() == 2 && m.start == 1) {
          const auto v = classify2x2(m.phi);
          row["verdict"] = toString(v);
          if (v == Surd2x2::NotSurd) row["witness"] = witnessJson(nonSurd2x2Witness(m.phi, clsParam));
        }
        if (budget) {
          const auto sums = checkSURDEmpirical(*fixedPoint(m.phi, m.start), *budget);
          Json e = Json::array();
          for (const auto& s : sums) e.push_back(summaryJson(s));
          row["empirical"] = e;
        }
        arr.push_back(row);
      }
      emit(arr.dump(2) + "\n", out);
      return ok ? kOk : kVerification;
    }

    if (*sub) {
      const auto fam = familyC(subS, subD);
      if (subJson) {
        Json arr = Json::array();
        for (std::size_t i = 0; i < fam.subgroups.size(); ++i) {
          Json gens = Json::array(), elems = Json::array();
          for (const auto& g : fam.generators[i]) gens.push_back(pointJson(g));
          for (const auto& e : fam.subgroups[i].elements) elems.push_back(pointJson(e));
          arr.push_back({{"generators", gens}, {"elements", elems}});
        }
        emit(arr.dump() + "\n", out);
      } else {
        emit(subgroupTable(fam), out);
      }
      return kOk;
    }

    if (*der) {
      const auto w = resolveWord(derWord);
      const Size s(parseTuple(derSize)), box(parseTuple(derBox));
      const auto d = derScheme == "uniform" ? derivativeUniform(*w, s, box, derHorizon)
                                            : derivativePerDirection(*w, s, box, derHorizon);
      if (derJson) {
        Json cells = Json::array();
        for (auto c : d.grid.cells()) cells.push_back(c);
        Json table = Json::array();
        for (const auto& r : d.table.words()) table.push_back(toString(r));
        emit(Json{{"scheme", toString(d.scheme)}, {"box", pointJson(box)}, {"cells", cells}, {"table", table}}.dump() +
                 "\n",
             out);
      } else if (derGrid) {
        emit(formatGolden(d.grid, d.distinctCodes()), out);
      } else {
        std::string text = toText(d.grid);
        for (std::size_t c = 0; c < d.table.size(); ++c)
          text += std::to_string(c) + ": " + toString(d.table.word(static_cast<int>(c))) + "\n";
        emit(text, out);
      }
      return kOk;
    }

    if (*ver) {
      bool ok = true;
      for (const auto& c : verifyFigures(verDir)) {
        std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
        ok = ok && c.passed;
      }
      return ok ? kOk : kVerification;
    }

    if (*pre) {
      std::cout << "morphisms:\n";
      for (const auto& n : morphismPresetNames()) std::cout << "  " << n << ": " << morphismPreset(n).description << '\n';
      std::cout << "words:\n";
      for (const auto& n : wordPresetNames()) std::cout << "  " << n << '\n';
      return kOk;
    }
  } catch (const ScheduleExhausted& e) {
    std::cerr << e.what() << '\n';
    return kBudget;
  } catch (const ReturnScanFailed& e) {
    std::cerr << e.what() << '\n';
    return kBudget;
  } catch (const FixtureMissing& e) {
    std::cerr << e.what() << '\n';
    return kVerification;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
