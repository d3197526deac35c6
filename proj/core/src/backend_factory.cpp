#include "ahp/backend_factory.hpp"

#include <charconv>
#include <string>

#include "ahp/free_backend.hpp"
#include "ahp/free_product.hpp"

namespace ahp {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("backend: bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::shared_ptr<const Group> make_backend(std::string_view descriptor, const DehnOptions& dehn_options) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("backend: expected free:N, zmzn:m,n or dehn:<file>, got '" + std::string(descriptor) + "'");
  }
  const auto kind = descriptor.substr(0, colon);
  const auto arg = descriptor.substr(colon + 1);
  if (kind == "free") {
    return std::make_shared<FreeGroup>(parse_int(arg, "rank"));
  }
  if (kind == "zmzn") {
    const auto comma = arg.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("backend: zmzn needs two orders, e.g. zmzn:2,3");
    }
    return std::make_shared<FreeProductGroup>(parse_int(arg.substr(0, comma), "order"),
                                              parse_int(arg.substr(comma + 1), "order"));
  }
  if (kind == "dehn") {
    if (arg.empty()) {
      throw std::invalid_argument("backend: dehn needs a presentation file");
    }
    return std::make_shared<DehnGroup>(Presentation::load(std::string(arg)), dehn_options, std::string(arg));
  }
  throw std::invalid_argument("backend: unknown kind '" + std::string(kind) + "'");
}

}  // namespace ahp
