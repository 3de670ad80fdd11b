#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dmod {

enum class ErrorCode {
    zero_inverse,
    not_prime,
    domain_mismatch,
    parse_error,
    unknown_variable,
    index_out_of_range,
    zero_order_term,
    not_critical,
    no_stabilization,
    state_budget_exceeded,
    singular_curve,
    refuse_char2,
    invalid_argument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the toolkit carries one of the codes above so the
/// command line can map it onto an exit status.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// Input errors (bad flags, malformed text) as opposed to failures of a
    /// computation on well-formed input.
    bool is_usage_error() const noexcept;

   private:
    ErrorCode code_;
};

class ParseError : public Error {
   public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorCode::parse_error, "at position " + std::to_string(position) + ": " + what),
          position_(position),
          detail_(what) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& detail() const noexcept { return detail_; }

   private:
    std::size_t position_;
    std::string detail_;
};

}  // namespace dmod
