#ifndef CANON_CATALOG_DATA_HPP
#define CANON_CATALOG_DATA_HPP

#include <string_view>

namespace canon::detail {

/// JSON text of a built-in catalog, empty when the name is unknown.
std::string_view catalog_source(std::string_view name);

} // namespace canon::detail

#endif
