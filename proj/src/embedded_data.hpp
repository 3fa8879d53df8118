#pragma once

#include <string_view>

namespace nefkit::embedded {

// Contents of data/*.json, compiled into the library.
std::string_view exceptions_json();
std::string_view gw2c5_json();
std::string_view g2c5_json();

} // namespace nefkit::embedded
