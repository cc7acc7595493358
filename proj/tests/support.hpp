#ifndef KNOTREP_TESTS_SUPPORT_HPP
#define KNOTREP_TESTS_SUPPORT_HPP

#include <string>

#include "knotrep/diagram.hpp"

#ifndef KNOTREP_FIXTURE_DIR
#error "KNOTREP_FIXTURE_DIR must be defined by the build"
#endif

namespace knotrep::tests {

inline std::string fixture_path(const std::string& name) {
  return std::string(KNOTREP_FIXTURE_DIR) + "/" + name;
}

inline Diagram fixture_diagram(const std::string& name) {
  return parse_knot_file(fixture_path(name));
}

}  // namespace knotrep::tests

#endif
