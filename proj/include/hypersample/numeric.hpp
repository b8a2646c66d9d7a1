#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace hypersample {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Binomial coefficient with the usual extension: 0 whenever m is outside
// [0, n] or n < 0.
BigInt binomial_coefficient(std::int64_t n, std::int64_t m);

// Exact rational value of a double (every finite double is rational).
BigRat rational_from_double(double x);

inline double to_double(const BigRat& x) { return x.template convert_to<double>(); }

// x^e for integer e >= 0, exact.
BigRat rational_pow(const BigRat& x, std::uint64_t e);

} // namespace hypersample
