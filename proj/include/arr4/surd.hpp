#pragma once

#include <stdexcept>

#include "arr4/scalar.hpp"

namespace arr4 {

/// Raised when a square root of a negative integer is requested.
class NegativeRadicand : public std::domain_error {
 public:
  NegativeRadicand() : std::domain_error("negative radicand") {}
};

Integer floor_div(const Integer& a, const Integer& b);  // b > 0
Integer ceil_div(const Integer& a, const Integer& b);   // b > 0

/// floor(sqrt(x)) and ceil(sqrt(x)) for x >= 0.
Integer isqrt_floor(const Integer& x);
Integer isqrt_ceil(const Integer& x);

/// floor((base + sqrt(radicand)) / den), den > 0.
Integer floor_plus_sqrt(const Integer& base, const Integer& radicand, const Integer& den);
/// ceil((base - sqrt(radicand)) / den), den > 0.
Integer ceil_minus_sqrt(const Integer& base, const Integer& radicand, const Integer& den);

/// Sign of (value - sqrt(radicand)), exact.
int compare_with_sqrt(const Integer& value, const Integer& radicand);

}  // namespace arr4
