#include "ncpark/numbers.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace ncpark {

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(const Integer& a, int k) {
    if (k < 0) return 0;
    Integer num = 1;
    for (int i = 0; i < k; ++i) num *= (a - i);
    return num / factorial(k);
}

Integer catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: negative argument");
    return binomial(2 * n, n) / (n + 1);
}

Integer fuss_catalan(int n, int k) {
    if (n < 0) throw std::invalid_argument("fuss_catalan: negative n");
    if (n == 0) return 1;
    Rational value = 1;
    const Integer kn = Integer(k) * n;
    for (int i = 0; i <= n - 2; ++i) value *= Rational(kn - i);
    value /= Rational(factorial(n));
    if (boost::multiprecision::denominator(value) != 1)
        throw std::logic_error("fuss_catalan: non-integral value");
    return boost::multiprecision::numerator(value);
}

Integer stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n) + 1,
                                        std::vector<Integer>(static_cast<std::size_t>(n) + 2, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Integer(j) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    if (k > n) return 0;
    return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer power(const Integer& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("power: negative exponent");
    Integer r = 1;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

Integer combinatorial_number(NumberKind kind, int a, int b) {
    switch (kind) {
        case NumberKind::catalan: return catalan(a);
        case NumberKind::fuss_catalan: return fuss_catalan(a, b);
        case NumberKind::stirling2: return stirling2(a, b);
        case NumberKind::binomial: return binomial(a, b);
    }
    throw std::invalid_argument("combinatorial_number: unknown kind");
}

long long to_int64(const Integer& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw std::overflow_error("to_int64: value out of range");
    return static_cast<long long>(x);
}

}  // namespace ncpark
