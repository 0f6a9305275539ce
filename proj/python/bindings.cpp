#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "multirec/algebra.hpp"
#include "multirec/derive.hpp"
#include "multirec/errors.hpp"
#include "multirec/figures.hpp"
#include "multirec/generators.hpp"
#include "multirec/io.hpp"
#include "multirec/morphic_analysis.hpp"
#include "multirec/presets.hpp"
#include "multirec/recurrence.hpp"

namespace py = pybind11;
using namespace multirec;

namespace {

using Coords = std::vector<std::int64_t>;

Point pt(const Coords& v) { return Point(std::span<const std::int64_t>(v)); }

// Nested lists indexed [y][x], bottom row first.
py::object nested(const FiniteWord& f) { return py::module_::import("json").attr("loads")(toJson(f).dump()); }

Morphism morphismFromPy(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return morphismPreset(obj.cast<std::string>()).phi;
  const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return morphismFromJson(Json::parse(text));
}

py::dict reportDict(const GapReport& r) {
  py::dict d;
  d["direction"] = r.direction.toVector();
  d["size"] = r.size.toVector();
  d["origin"] = r.origin.toVector();
  d["occurrences"] = r.occurrences;
  d["max_gap"] = r.maxGap;
  d["claim"] = r.claim;
  d["verdict"] = toString(r.verdict);
  return d;
}

RecurrenceBudget budget(std::int64_t L, std::int64_t Q, std::int64_t S, std::int64_t P, std::int64_t B,
                        unsigned workers) {
  RecurrenceBudget b;
  b.horizon = L;
  b.maxDir = Q;
  b.maxSize = S;
  b.maxOrigin = P;
  b.blockBound = B;
  b.workers = workers;
  b.validate();
  return b;
}

}  // namespace

PYBIND11_MODULE(_multirec, m) {
  m.doc() = "Multidimensional infinite words and their directional recurrence";

  py::register_exception<Error>(m, "MultirecError", PyExc_ValueError);

  m.def("thue_morse", [](std::uint64_t n) { return thueMorse(n); });
  m.def("fibonacci", [](std::uint64_t n) { return fibonacciWord(n); });
  m.def("morphism_presets", &morphismPresetNames);
  m.def("word_presets", &wordPresetNames);

  m.def(
      "letter", [](const std::string& word, const Coords& p) { return presetWord(word)->at(pt(p)); },
      py::arg("word"), py::arg("position"));
  m.def(
      "prefix", [](const std::string& word, const Coords& size) { return nested(prefixOf(*presetWord(word), Size(pt(size)))); },
      py::arg("word"), py::arg("size"));
  m.def(
      "directional",
      [](const std::string& word, const Coords& q, const Coords& s, std::int64_t count) {
        const auto w = presetWord(word);
        py::list out;
        for (std::int64_t l = 0; l < count; ++l) out.append(nested(directionalLetter(*w, normalizeDirection(pt(q)), Size(pt(s)), l)));
        return out;
      },
      py::arg("word"), py::arg("direction"), py::arg("size"), py::arg("count"));
  m.def(
      "render",
      [](const std::string& word, const Coords& box, const std::string& format) {
        return render(*presetWord(word), RenderSpec{parseRenderFormat(format), Size(pt(box))});
      },
      py::arg("word"), py::arg("box"), py::arg("format") = "text");

  m.def(
      "measure_gaps",
      [](const std::string& word, const Coords& q, const Coords& s, const Coords& origin, std::int64_t L) {
        return reportDict(measureGaps(*presetWord(word), normalizeDirection(pt(q)), Size(pt(s)), Position(pt(origin)), L));
      },
      py::arg("word"), py::arg("direction"), py::arg("size"), py::arg("origin"), py::arg("horizon"));
  m.def(
      "check_surd",
      [](const std::string& word, std::int64_t L, std::int64_t Q, std::int64_t S, unsigned workers) {
        py::list out;
        for (const auto& s : checkSURDEmpirical(*presetWord(word), budget(L, Q, S, 1, 1, workers))) {
          py::dict d;
          d["size"] = s.size.toVector();
          d["bound"] = s.bound;
          d["verdict"] = toString(s.verdict);
          d["combinations"] = s.combinations;
          out.append(d);
        }
        return out;
      },
      py::arg("word"), py::arg("horizon") = 5000, py::arg("max_dir") = 5, py::arg("max_size") = 3,
      py::arg("workers") = 0);
  m.def(
      "ur_window_bound",
      [](const std::string& word, const Coords& s, std::int64_t B) { return urWindowBound(*presetWord(word), Size(pt(s)), B); },
      py::arg("word"), py::arg("size"), py::arg("block_bound") = 256);

  m.def(
      "classify_2x2", [](const py::object& phi) { return toString(classify2x2(morphismFromPy(phi))); }, py::arg("morphism"));
  m.def(
      "non_surd_witness",
      [](const py::object& phi, int n) {
        const auto w = nonSurd2x2Witness(morphismFromPy(phi), n);
        py::dict d;
        d["case"] = w.caseTag;
        d["direction"] = w.direction.toVector();
        d["transposed"] = w.transposed;
        d["first_index"] = w.firstIndex;
        d["last_index"] = w.lastIndex;
        d["expected"] = w.expected;
        d["pattern"] = w.pattern;
        return d;
      },
      py::arg("morphism"), py::arg("parameter") = 3);
  m.def(
      "check_condition",
      [](const py::object& phiObj, const std::string& condition, Letter a, int power) {
        const auto phi = morphismFromPy(phiObj);
        ConditionVerdict v;
        if (condition == "main-morphic") v = checkMainMorphic(phi, a);
        else if (condition == "cor1") v = checkCor1(phi, a);
        else if (condition == "power") v = checkPower(phi, a, power);
        else if (condition == "hyperplane") v = checkHyperplane(phi, a);
        else throw InvalidInput("unknown condition '" + condition + "'");
        py::dict d;
        d["condition"] = v.condition;
        d["holds"] = v.holds;
        d["witness"] = v.witness;
        std::vector<Coords> pos;
        for (const auto& p : v.positions) pos.push_back(p.toVector());
        d["positions"] = pos;
        d["size"] = v.size;
        return d;
      },
      py::arg("morphism"), py::arg("condition"), py::arg("letter") = 1, py::arg("power") = 2);
  m.def("enumerate_2x2", [] {
    py::list out;
    for (const auto& phi : enumerate2x2())
      out.append(py::module_::import("json").attr("loads")(toJson(phi).dump()));
    return out;
  });

  m.def(
      "subgroups",
      [](std::int64_t s, std::size_t d) {
        const auto fam = familyC(s, d);
        py::list out;
        for (std::size_t i = 0; i < fam.subgroups.size(); ++i) {
          std::vector<Coords> gens, elems;
          for (const auto& g : fam.generators[i]) gens.push_back(g.toVector());
          for (const auto& e : fam.subgroups[i].elements) elems.push_back(e.toVector());
          out.append(py::make_tuple(gens, elems));
        }
        return out;
      },
      py::arg("s"), py::arg("d") = 2);

  m.def(
      "derivative",
      [](const std::string& word, const Coords& s, const Coords& box, const std::string& scheme, std::int64_t L) {
        const auto w = presetWord(word);
        const auto d = scheme == "uniform" ? derivativeUniform(*w, Size(pt(s)), Size(pt(box)), L)
                                           : derivativePerDirection(*w, Size(pt(s)), Size(pt(box)), L);
        if (box.size() != 2) throw DimensionError("derivative grids are returned for 2-D boxes only");
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(box[1]), std::vector<int>(static_cast<std::size_t>(box[0])));
        forEachCell(d.box, [&](const Point& p) { rows[p[1]][p[0]] = d.grid.at(p); });
        std::vector<std::string> table;
        for (const auto& r : d.table.words()) table.push_back(toString(r));
        return py::make_tuple(rows, table);
      },
      py::arg("word"), py::arg("size"), py::arg("box"), py::arg("scheme") = "per-direction",
      py::arg("horizon") = kDerivativeHorizon);

  m.def(
      "verify_figures",
      [](const std::string& dir) {
        py::list out;
        for (const auto& c : verifyFigures(dir.empty() ? fixtureDir() : std::filesystem::path(dir)))
          out.append(py::make_tuple(c.name, c.passed, c.mismatches, c.detail));
        return out;
      },
      py::arg("directory") = "");
}
