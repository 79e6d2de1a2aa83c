#include "dfilab/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "dfilab/error.hpp"

namespace dfilab {

Caps Caps::parse(std::string_view spec) {
  Caps caps;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;

    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::InvalidInput, "caps entry without '=': " + std::string(item));
    auto key = item.substr(0, eq);
    auto text = item.substr(eq + 1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      throw Error(ErrorCode::InvalidInput, "bad caps value: " + std::string(item));

    if (key == "lattice") caps.lattice_elements = value;
    else if (key == "oracle") caps.oracle_generators = value;
    else if (key == "complex") caps.complex_faces = value;
    else if (key == "budget") caps.buchberger_steps = value;
    else if (key == "search") caps.search_complexes = value;
    else throw Error(ErrorCode::InvalidInput, "unknown caps key: " + std::string(key));
  }
  return caps;
}

Caps Caps::from_env() {
  const char* env = std::getenv("DFILAB_CAPS");
  return env ? parse(env) : Caps{};
}

}  // namespace dfilab
