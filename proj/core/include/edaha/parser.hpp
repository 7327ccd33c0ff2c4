#pragma once
// Expression language for the eval command.
//
//   scalars   integers, i, Q, p, s, + - * / ^n, juxtaposition, pexp(<fraction>)
//   matrices  DA, DAinv, DB, S, I, OA(<word>), OB(<word>)
//
// Division is only allowed by scalars whose denominators factor cyclotomically
// or by units of the pexp ring.

#include "edaha/operators.hpp"

#include <stdexcept>
#include <string>

namespace edaha {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EvalResult {
    bool isMatrix = false;
    RingElement scalar;
    Mat3R matrix;
    // Set when the whole expression is a single pexp(...) call.
    bool isPexp = false;
    FormalFraction fraction;

    std::string str() const;
};

EvalResult evalExpression(const std::string& text);

}  // namespace edaha
