#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace upl {

/// Exact rational number. All computation in this library is exact; no
/// floating point enters any decision path.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Parses "p", "p/q", or a finite decimal string like "-2.375" into an exact
/// rational. Exponents and non-finite forms are rejected.
Rat parse_rat(const std::string& text);

/// Canonical rendering: lowest terms, positive denominator, "p" when the
/// denominator is one, "p/q" otherwise.
std::string rat_str(const Rat& r);

/// Decimal approximation with the given number of significant digits. For
/// plotting convenience only.
std::string rat_decimal(const Rat& r, int significant_digits = 12);

Rat rat_sum(const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);

}  // namespace upl
