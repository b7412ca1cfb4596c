#pragma once

#include <string_view>
#include <vector>

namespace neutro::fixtures {

/// Names of the bundled relation documents (embedded at build time from the
/// fixtures/ directory), e.g. "example2_R" or "tanks_radar_rules".
std::vector<std::string_view> names();

/// Document text for one bundled fixture; IoError for an unknown name.
std::string_view text(std::string_view name);

}  // namespace neutro::fixtures
