#ifndef GHAM_PRESETS_HPP
#define GHAM_PRESETS_HPP

#include "gham/step_graphon.hpp"

#include <string>
#include <vector>

namespace gham {

// Built-in four-block study graphons. Throws std::invalid_argument for an
// unknown name; the message lists the valid names.
StepGraphon preset_graphon(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace gham

#endif
