#pragma once

#include <string>
#include <vector>

#include "ncpark/numbers.hpp"

namespace ncpark {

// Bivariate power series in x and t truncated at x^nx and t^nt, with exact
// rational coefficients. Coefficients are stored in ordinary form; the
// exponential reading a! [x^a t^b] is available through exponential().
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(int nx, int nt);

    static TruncatedSeries constant(int nx, int nt, const Rational& c);
    static TruncatedSeries x(int nx, int nt);
    static TruncatedSeries t(int nx, int nt);

    int nx() const { return nx_; }
    int nt() const { return nt_; }

    // Ordinary coefficient [x^a t^b]; zero outside the truncation window.
    Rational ordinary(int a, int b) const;
    void set(int a, int b, const Rational& c);
    // a! [x^a t^b].
    Rational exponential(int a, int b) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& c);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    // Derivative in x; the x^nx coefficient of the result is zero.
    TruncatedSeries derivative_x() const;
    // this(inner(x, t), t). Throws std::invalid_argument unless inner has no
    // term free of x.
    TruncatedSeries compose_x(const TruncatedSeries& inner) const;

    // Nonzero coefficients as "a,b" -> exponential value, rationals written p/q.
    std::string to_json() const;

private:
    void check_shape(const TruncatedSeries& o) const;
    std::size_t slot(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(nt_ + 1) + static_cast<std::size_t>(b); }

    int nx_ = 0;
    int nt_ = 0;
    std::vector<Rational> c_;
};

// The following require s to have a zero constant term.
TruncatedSeries exp_series(const TruncatedSeries& s);
// log(1 + s).
TruncatedSeries log1p_series(const TruncatedSeries& s);
// (1 + s)^r for an integer r of any sign.
TruncatedSeries pow1p_series(const TruncatedSeries& s, int r);

// Largest x order accepted by chain_series.
inline constexpr int kMaxSeriesOrder = 8;

// Generating function of multichains phi_1 <= ... <= phi_k in the noncrossing
// 2-partition posets, x exponential in n and t marking the rank of phi_k.
// Computed as the fixed point of C = exp(x (t C + 1)^k) - 1 for any integer
// k: k = 0 gives exp(x) - 1 and k = -1 the Whitney numbers of the first kind.
// Throws std::out_of_range unless 1 <= nx <= 8 and nt >= 0.
TruncatedSeries chain_series(int k, int nx, int nt);
// The same series as the compositional inverse in x of
// log(1 + x) (1 + t x)^(-k), by Newton iteration.
TruncatedSeries chain_series_by_inversion(int k, int nx, int nt);
// Right side of C_k = C_{k-i} o (x (t C_k + 1)^i), built from independent
// fixed points of both series. Requires 0 <= i <= k.
TruncatedSeries chain_series_recomposed(int k, int i, int nx, int nt);

}  // namespace ncpark
