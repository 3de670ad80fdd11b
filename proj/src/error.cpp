#include "dmod/error.hpp"

namespace dmod {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::zero_inverse: return "ZeroInverse";
        case ErrorCode::not_prime: return "NotPrime";
        case ErrorCode::domain_mismatch: return "DomainMismatch";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::unknown_variable: return "UnknownVariable";
        case ErrorCode::index_out_of_range: return "IndexOutOfRange";
        case ErrorCode::zero_order_term: return "ZeroOrderTerm";
        case ErrorCode::not_critical: return "NotCritical";
        case ErrorCode::no_stabilization: return "NoStabilization";
        case ErrorCode::state_budget_exceeded: return "StateBudgetExceeded";
        case ErrorCode::singular_curve: return "SingularCurve";
        case ErrorCode::refuse_char2: return "RefuseChar2";
        case ErrorCode::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

bool Error::is_usage_error() const noexcept {
    switch (code_) {
        case ErrorCode::parse_error:
        case ErrorCode::unknown_variable:
        case ErrorCode::not_prime:
        case ErrorCode::refuse_char2:
        case ErrorCode::invalid_argument:
        case ErrorCode::zero_order_term:
            return true;
        default:
            return false;
    }
}

}  // namespace dmod
