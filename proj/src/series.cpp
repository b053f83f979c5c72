#include "ncpark/series.hpp"

#include <sstream>
#include <stdexcept>

namespace ncpark {

TruncatedSeries::TruncatedSeries(int nx, int nt) : nx_(nx), nt_(nt) {
    if (nx < 0 || nt < 0) throw std::invalid_argument("TruncatedSeries: negative truncation order");
    c_.assign(static_cast<std::size_t>(nx + 1) * static_cast<std::size_t>(nt + 1), Rational(0));
}

TruncatedSeries TruncatedSeries::constant(int nx, int nt, const Rational& c) {
    TruncatedSeries s(nx, nt);
    s.set(0, 0, c);
    return s;
}

TruncatedSeries TruncatedSeries::x(int nx, int nt) {
    TruncatedSeries s(nx, nt);
    if (nx >= 1) s.set(1, 0, 1);
    return s;
}

TruncatedSeries TruncatedSeries::t(int nx, int nt) {
    TruncatedSeries s(nx, nt);
    if (nt >= 1) s.set(0, 1, 1);
    return s;
}

Rational TruncatedSeries::ordinary(int a, int b) const {
    if (a < 0 || b < 0 || a > nx_ || b > nt_) return 0;
    return c_[slot(a, b)];
}

void TruncatedSeries::set(int a, int b, const Rational& c) {
    if (a < 0 || b < 0 || a > nx_ || b > nt_) throw std::out_of_range("TruncatedSeries::set: outside the window");
    c_[slot(a, b)] = c;
}

Rational TruncatedSeries::exponential(int a, int b) const { return ordinary(a, b) * Rational(factorial(a)); }

void TruncatedSeries::check_shape(const TruncatedSeries& o) const {
    if (nx_ != o.nx_ || nt_ != o.nt_) throw std::invalid_argument("TruncatedSeries: truncation orders differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_shape(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check_shape(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (auto& v : c_) v *= c;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_shape(b);
    TruncatedSeries out(a.nx_, a.nt_);
    for (int a1 = 0; a1 <= a.nx_; ++a1)
        for (int b1 = 0; b1 <= a.nt_; ++b1) {
            const Rational& u = a.c_[a.slot(a1, b1)];
            if (u == 0) continue;
            for (int a2 = 0; a1 + a2 <= a.nx_; ++a2)
                for (int b2 = 0; b1 + b2 <= a.nt_; ++b2) {
                    const Rational& v = b.c_[b.slot(a2, b2)];
                    if (v != 0) out.c_[out.slot(a1 + a2, b1 + b2)] += u * v;
                }
        }
    return out;
}

TruncatedSeries TruncatedSeries::derivative_x() const {
    TruncatedSeries out(nx_, nt_);
    for (int a = 1; a <= nx_; ++a)
        for (int b = 0; b <= nt_; ++b) out.set(a - 1, b, ordinary(a, b) * a);
    return out;
}

TruncatedSeries TruncatedSeries::compose_x(const TruncatedSeries& inner) const {
    check_shape(inner);
    for (int b = 0; b <= nt_; ++b)
        if (inner.ordinary(0, b) != 0)
            throw std::invalid_argument("compose_x: inner series has a term free of x");
    TruncatedSeries out(nx_, nt_);
    TruncatedSeries power = constant(nx_, nt_, 1);
    for (int a = 0; a <= nx_; ++a) {
        // Coefficient of x^a in this, as a series in t, times inner^a.
        TruncatedSeries coeff(nx_, nt_);
        for (int b = 0; b <= nt_; ++b) coeff.set(0, b, ordinary(a, b));
        out += coeff * power;
        power = power * inner;
    }
    return out;
}

std::string TruncatedSeries::to_json() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int a = 0; a <= nx_; ++a)
        for (int b = 0; b <= nt_; ++b) {
            Rational v = exponential(a, b);
            if (v == 0) continue;
            if (!first) os << ',';
            first = false;
            os << '"' << a << ',' << b << "\":\"" << v << '"';
        }
    os << '}';
    return os.str();
}

namespace {

void require_no_constant(const TruncatedSeries& s, const char* what) {
    if (s.ordinary(0, 0) != 0) throw std::invalid_argument(std::string(what) + ": series has a constant term");
}

// sum_m coeff(m) s^m over the m for which s^m can still be nonzero.
template <class Coeff>
TruncatedSeries substitute(const TruncatedSeries& s, Coeff coeff) {
    TruncatedSeries out(s.nx(), s.nt());
    TruncatedSeries power = TruncatedSeries::constant(s.nx(), s.nt(), 1);
    for (int m = 0; m <= s.nx() + s.nt(); ++m) {
        out += power * coeff(m);
        power = power * s;
    }
    return out;
}

}  // namespace

TruncatedSeries exp_series(const TruncatedSeries& s) {
    require_no_constant(s, "exp_series");
    return substitute(s, [](int m) { return Rational(1) / Rational(factorial(m)); });
}

TruncatedSeries log1p_series(const TruncatedSeries& s) {
    require_no_constant(s, "log1p_series");
    return substitute(s, [](int m) {
        if (m == 0) return Rational(0);
        return Rational(m % 2 ? 1 : -1, m);
    });
}

TruncatedSeries pow1p_series(const TruncatedSeries& s, int r) {
    require_no_constant(s, "pow1p_series");
    return substitute(s, [r](int m) { return Rational(binomial(Integer(r), m)); });
}

namespace {

void check_series_args(int nx, int nt) {
    if (nx < 1 || nx > kMaxSeriesOrder) throw std::out_of_range("chain_series: x order outside 1..8");
    if (nt < 0) throw std::out_of_range("chain_series: negative t order");
}

}  // namespace

TruncatedSeries chain_series(int k, int nx, int nt) {
    check_series_args(nx, nt);
    const TruncatedSeries x = TruncatedSeries::x(nx, nt);
    const TruncatedSeries t = TruncatedSeries::t(nx, nt);
    const TruncatedSeries one = TruncatedSeries::constant(nx, nt, 1);
    TruncatedSeries c(nx, nt);
    // Each step fixes one more power of x; one extra step confirms the limit.
    for (int step = 0; step <= nx + 1; ++step) {
        TruncatedSeries next = exp_series(x * pow1p_series(t * c, k)) - one;
        if (next == c) return c;
        c = std::move(next);
    }
    throw std::logic_error("chain_series: fixed-point iteration did not settle");
}

TruncatedSeries chain_series_by_inversion(int k, int nx, int nt) {
    check_series_args(nx, nt);
    const TruncatedSeries x = TruncatedSeries::x(nx, nt);
    const TruncatedSeries t = TruncatedSeries::t(nx, nt);
    // f(y) = log(1 + y) (1 + t y)^(-k), written with y in the x slot.
    const TruncatedSeries f = log1p_series(x) * pow1p_series(t * x, -k);
    const TruncatedSeries df = f.derivative_x();
    const TruncatedSeries one = TruncatedSeries::constant(nx, nt, 1);
    TruncatedSeries g = x;
    // Newton doubles the number of correct x orders at each step.
    for (int step = 0; step <= 2 * nx + 2; ++step) {
        TruncatedSeries residual = f.compose_x(g) - x;
        if (residual == TruncatedSeries(nx, nt)) return g;
        TruncatedSeries slope = df.compose_x(g);
        g -= residual * pow1p_series(slope - one, -1);
    }
    throw std::logic_error("chain_series_by_inversion: Newton iteration did not settle");
}

TruncatedSeries chain_series_recomposed(int k, int i, int nx, int nt) {
    if (i < 0 || i > k) throw std::out_of_range("chain_series_recomposed: i outside 0..k");
    const TruncatedSeries ck = chain_series(k, nx, nt);
    const TruncatedSeries inner = TruncatedSeries::x(nx, nt) * pow1p_series(TruncatedSeries::t(nx, nt) * ck, i);
    return chain_series(k - i, nx, nt).compose_x(inner);
}

}  // namespace ncpark
