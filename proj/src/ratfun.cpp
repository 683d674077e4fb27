#include "biggl/ratfun.hpp"

#include <stdexcept>

namespace biggl {

namespace {

Poly from_coeffs(const std::vector<Rat>& c) {
    Poly p;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) p += Poly::monomial(Mono(uv(), int(i)), c[i]);
    return p;
}

}  // namespace

std::pair<Poly, Poly> upoly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("upoly_divmod: zero divisor");
    std::vector<Rat> ra = a.univariate_coeffs(uv());
    std::vector<Rat> rb = b.univariate_coeffs(uv());
    while (!rb.empty() && rb.back() == 0) rb.pop_back();
    std::vector<Rat> q(ra.size(), Rat(0));
    while (true) {
        while (!ra.empty() && ra.back() == 0) ra.pop_back();
        if (ra.size() < rb.size()) break;
        size_t shift = ra.size() - rb.size();
        Rat f = ra.back() / rb.back();
        q[shift] = f;
        for (size_t i = 0; i < rb.size(); ++i) ra[shift + i] -= f * rb[i];
    }
    return {from_coeffs(q), from_coeffs(ra)};
}

Poly upoly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = upoly_divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    auto c = x.univariate_coeffs(uv());
    return x / c.back();  // monic
}

RatFun::RatFun(const Poly& num, const Poly& den) : num_(num), den_(den) { normalize(); }

void RatFun::normalize() {
    if (den_.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = upoly_gcd(num_, den_);
    if (g.total_degree() > 0) {
        num_ = upoly_divmod(num_, g).first;
        den_ = upoly_divmod(den_, g).first;
    }
    Rat lead = den_.univariate_coeffs(uv()).back();
    num_ = num_ / lead;
    den_ = den_ / lead;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.num_.is_zero()) throw std::invalid_argument("RatFun: division by zero");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatFun::str() const {
    if (den_ == Poly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace biggl
