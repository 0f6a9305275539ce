#include "multirec/presets.hpp"

#include <map>

#include "multirec/errors.hpp"
#include "multirec/generators.hpp"
#include "multirec/rotation.hpp"

namespace multirec {

namespace {

using Rows = std::vector<std::vector<Letter>>;

MorphismPreset make(std::string name, std::vector<Rows> images, std::string description) {
  return {name, Morphism::fromRowsTopFirst(images), 1, std::move(description)};
}

const std::vector<MorphismPreset>& registry() {
  static const std::vector<MorphismPreset> presets = {
      make("preimage-3x2", {{{1, 1, 0}, {0, 1, 1}}, {{1, 0, 1}, {1, 1, 0}}},
           "size (3,2) morphism, phi(0) = [[1,1,0],[0,1,1]]"),
      make("preimage-3x2-caption", {{{1, 1, 0}, {0, 0, 1}}, {{1, 0, 1}, {1, 1, 0}}},
           "size (3,2) morphism, phi(0) = [[1,1,0],[0,0,1]]"),
      make("sierpinski", {{{0, 0}, {0, 0}}, {{1, 0}, {1, 1}}}, "Sierpinski gasket"),
      make("ssurdo-3x3", {{{1, 0, 0}, {1, 0, 1}, {1, 0, 0}}, {{1, 0, 1}, {1, 0, 1}, {1, 0, 0}}},
           "SSURDO fixed point"),
      make("surd-not-ssurdo-2x2", {{{1, 1}, {1, 1}}, {{0, 0}, {1, 0}}}, "SURD but not SSURDO"),
      make("suffnotnec-3x3", {{{1, 1, 0}, {0, 0, 0}, {0, 0, 1}}, {{1, 1, 1}, {0, 1, 0}, {1, 1, 0}}},
           "not recurrent along (1,3)"),
      make("power-3x3", {{{0, 0, 0}, {1, 1, 1}, {0, 1, 0}}, {{0, 1, 0}, {1, 0, 1}, {1, 1, 0}}},
           "second power has common positions"),
      make("cor1-example", {{{0, 0}, {1, 0}}, {{0, 1}, {1, 0}}}, "common letter at the origin"),
      make("hyperplane-3x3", {{{0, 1, 0}, {0, 1, 0}, {0, 1, 0}}, {{1, 1, 0}, {1, 1, 0}, {1, 1, 0}}},
           "columns of ones at x=0 in phi(1) and x=1 in both images"),
  };
  return presets;
}

}  // namespace

std::vector<std::string> morphismPresetNames() {
  std::vector<std::string> out;
  for (const auto& p : registry()) out.push_back(p.name);
  return out;
}

MorphismPreset morphismPreset(const std::string& name) {
  for (const auto& p : registry())
    if (p.name == name) return p;
  throw NotFound("no morphism preset named '" + name + "'");
}

std::vector<std::string> wordPresetNames() {
  auto out = morphismPresetNames();
  for (const char* n : {"thue-morse", "thue-morse-gcd", "fibonacci", "fib-rows", "toeplitz-rows", "sturmian", "toeplitz"})
    out.emplace_back(n);
  return out;
}

WordPtr presetWord(const std::string& name) {
  if (name == "thue-morse") return thueMorseWord();
  if (name == "thue-morse-gcd") return gcdWord(thueMorseWord(), 2);
  if (name == "fibonacci") return fibonacciWordSource();
  if (name == "fib-rows") return fibRowsWord();
  if (name == "toeplitz-rows") return toeplitzRowsWord();
  if (name == "sturmian") return rotationWord(defaultSturmianSpec());
  if (name == "toeplitz") return toeplitzConstruct(ToeplitzSchedule{});
  const auto p = morphismPreset(name);
  return fixedPoint(p.phi, p.start, p.name);
}

}  // namespace multirec
