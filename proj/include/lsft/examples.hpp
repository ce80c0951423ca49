#pragma once

#include <string>
#include <vector>

#include "lsft/diagram.hpp"

namespace lsft {

// Built-in diagram sources, by name.
std::vector<std::string> example_names();
// Throws DiagramError("UnknownExample") for other names.
std::string example_source(const std::string& name);

std::string middle_text(const MiddleData& m);

}  // namespace lsft
