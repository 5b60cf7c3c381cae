#pragma once

#include <stdexcept>
#include <string>

namespace lgft {

// Every domain error carries a stable kind tag plus the offending symbol,
// so callers (and the command line tool) can report both.
class NamedError : public std::runtime_error {
public:
    NamedError(std::string kind, std::string detail)
        : std::runtime_error(kind + ": " + detail),
          kind_(std::move(kind)),
          detail_(std::move(detail)) {}

    const std::string& kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    std::string kind_;
    std::string detail_;
};

}  // namespace lgft
