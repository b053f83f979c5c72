#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ncpark {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int n);
// Generalized binomial a(a-1)...(a-k+1)/k!, defined for every integer a and k >= 0.
Integer binomial(const Integer& a, int k);
Integer catalan(int n);
// C_n^{(k)} = binom(kn+1, n) / (kn+1), evaluated as the polynomial
// (kn)(kn-1)...(kn-n+2) / n! in k so that negative k is allowed.
// C_n^{(k)} counts the (k-1)-element multichains of NC_n.
Integer fuss_catalan(int n, int k);
Integer stirling2(int n, int k);
Integer power(const Integer& base, int exponent);

enum class NumberKind { catalan, fuss_catalan, stirling2, binomial };

// Dispatcher over the kernels above: catalan(a), fuss_catalan(n=a, k=b),
// stirling2(a, b), binomial(a, b).
Integer combinatorial_number(NumberKind kind, int a, int b = 0);

// Converts an exact integer that is known to fit into a signed 64-bit value.
long long to_int64(const Integer& x);

}  // namespace ncpark
