#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace excol {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Algorithms that materialize tables over all subsets of a ground set refuse
// to run past this many active vertices unless the caller raises the cap.
// Memory is the binding constraint, not time.
inline constexpr int kDefaultTableCap = 30;

// Hard limit for dense bitmask indices (one machine word with headroom).
inline constexpr int kHardMaskBits = 62;

// Default cap on the number of vertices whose colors are enumerated
// exhaustively by the trimmed pipeline.
inline constexpr int kDefaultEnumCap = 20;

// Input violates a documented precondition.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (DIMACS, lists file, family file).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance exceeds a configured resource budget. Never a wrong answer.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A self-check that can only fail on an implementation bug fired.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace excol
