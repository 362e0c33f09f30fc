#pragma once

#include <string>

namespace dal {

/// Shortest decimal text that parses back to exactly the same double.
/// Used for every CSV field so outputs are byte-reproducible.
std::string format_double(double value);

}  // namespace dal
