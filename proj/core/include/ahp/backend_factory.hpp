#pragma once

#include <memory>
#include <string_view>

#include "ahp/dehn.hpp"
#include "ahp/group.hpp"

namespace ahp {

/// Builds a backend from its --backend spelling:
///   free:N          free group of rank N
///   zmzn:m,n        Z/m * Z/n
///   dehn:<path>     C'(1/6) presentation file
std::shared_ptr<const Group> make_backend(std::string_view descriptor, const DehnOptions& dehn_options = {});

}  // namespace ahp
