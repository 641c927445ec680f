#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace klm {

/// Exact arbitrary-precision integer. Every quantity in this library is an
/// exact integer, a polynomial over exact integers, or a signed integer
/// combination of partitions; nothing is ever rounded.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Decimal rendering used by all serialization (JSON/CSV carry big integers
/// as strings so they survive every consumer).
std::string to_decimal(const BigInt& v);
BigInt parse_decimal(const std::string& s);

}  // namespace klm
