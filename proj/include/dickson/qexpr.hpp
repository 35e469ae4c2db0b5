#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dickson/frame.hpp"

namespace dickson {

// Rejection of a generator expression, carrying the byte offset of the
// first character that could not be consumed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Parses an expression in the generators Q0..Q{n-1} with integer
// coefficients, +, -, *, ^, parentheses and unary minus. Whitespace is
// ignored. Example: "Q0^2*Q1 + 2*(Q1 - 1)".
DicksonPoly parse_q_expression(const FramePtr& frame, std::string_view src);

}  // namespace dickson
