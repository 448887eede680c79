#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace coherent {

// Domain failure with a stable variant name.  The CLI maps these to exit
// code 1 and a JSON report on stderr; the variant string is the contract.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string variant, const std::string& message,
                std::map<std::string, std::string> details = {})
        : std::runtime_error(message),
          variant_(std::move(variant)),
          details_(std::move(details)) {}

    const std::string& variant() const noexcept { return variant_; }
    const std::map<std::string, std::string>& details() const noexcept { return details_; }

private:
    std::string variant_;
    std::map<std::string, std::string> details_;
};

}
