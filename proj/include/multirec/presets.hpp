#pragma once

#include <string>
#include <vector>

#include "multirec/morphism.hpp"

namespace multirec {

struct MorphismPreset {
  std::string name;
  Morphism phi;
  Letter start;
  std::string description;
};

std::vector<std::string> morphismPresetNames();
MorphismPreset morphismPreset(const std::string& name);

// Morphism presets plus the non-morphic words.
std::vector<std::string> wordPresetNames();
WordPtr presetWord(const std::string& name);

}  // namespace multirec
