#pragma once

#include <stdexcept>
#include <string>

namespace posetprob {

enum class errc {
    cycle_detected,
    would_create_cycle,
    index_out_of_range,
    same_element,
    comparable_pair,
    size_limit_exceeded,
    not_nested,
    is_chain,
    cell_outside_shape,
    non_integral_result,
    not_reducible,
    invalid_shape,
    invalid_case,
    out_of_range,
    parse_error,
    engine_not_applicable,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::cycle_detected: return "CycleDetected";
        case errc::would_create_cycle: return "WouldCreateCycle";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::same_element: return "SameElement";
        case errc::comparable_pair: return "ComparablePair";
        case errc::size_limit_exceeded: return "SizeLimitExceeded";
        case errc::not_nested: return "NotNested";
        case errc::is_chain: return "IsChain";
        case errc::cell_outside_shape: return "CellOutsideShape";
        case errc::non_integral_result: return "NonIntegralResult";
        case errc::not_reducible: return "NotReducible";
        case errc::invalid_shape: return "InvalidShape";
        case errc::invalid_case: return "InvalidCase";
        case errc::out_of_range: return "OutOfRange";
        case errc::parse_error: return "ParseError";
        case errc::engine_not_applicable: return "EngineNotApplicable";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) raise(code, what);
}

}  // namespace posetprob
