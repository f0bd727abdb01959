#pragma once

#include <string>
#include <string_view>

#include "drs/drs.hpp"

namespace drs::testing {

inline std::string source_path(std::string_view relative) { return std::string(DRS_SOURCE_DIR) + "/" + std::string(relative); }

inline std::string fixture_path(std::string_view name) { return source_path("tests/fixtures/" + std::string(name)); }

inline std::string fixture_text(std::string_view name) { return read_file(fixture_path(name)); }

inline ClausalForm fixture(std::string_view name) { return parse_corpus(fixture_text(name)).at(0); }

inline ClausalForm form_of(std::string_view text) { return parse_corpus(text).at(0); }

}  // namespace drs::testing
