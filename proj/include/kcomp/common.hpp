#ifndef KCOMP_COMMON_HPP
#define KCOMP_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kcomp {

using BigInt = boost::multiprecision::cpp_int;

// Number of variables up to which exhaustive valuation sweeps are allowed.
inline constexpr int kBruteForceCap = 24;

// Largest friendly-decomposition width the compiler accepts by default.
inline constexpr int kDefaultWidthCap = 14;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file or text.
struct ParseError : Error {
  using Error::Error;
};

// Structurally invalid argument (bad domain, invalid decomposition, ...).
struct InputError : Error {
  using Error::Error;
};

// Instance exceeds a desk-scale cap.
struct CapacityError : Error {
  using Error::Error;
};

// A caller violated a documented precondition (missing class flag, ...).
struct ContractError : Error {
  using Error::Error;
};

// A constant Boolean function, used where clause forms and diagrams cannot
// represent constants directly.
struct Constant {
  bool value = false;
  friend bool operator==(const Constant&, const Constant&) = default;
};

}  // namespace kcomp

#endif
