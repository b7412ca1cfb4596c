#include "neutro/fixtures.hpp"

#include "neutro/error.hpp"
#include "neutro/fixtures_data.hpp"

namespace neutro::fixtures {

std::vector<std::string_view> names() {
  std::vector<std::string_view> out;
  out.reserve(detail::kFixtures.size());
  for (const auto& f : detail::kFixtures) out.push_back(f.name);
  return out;
}

std::string_view text(std::string_view name) {
  for (const auto& f : detail::kFixtures) {
    if (f.name == name) return f.text;
  }
  fail(ErrorKind::IoError, "no bundled fixture named '" + std::string(name) + "'");
}

}  // namespace neutro::fixtures
