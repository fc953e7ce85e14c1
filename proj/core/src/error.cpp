#include "kmlat/error.hpp"

#include <utility>

namespace kmlat {

Error::Error(std::string code, const std::string& message)
  : std::runtime_error(message), code_(std::move(code)) {}

} // namespace kmlat
