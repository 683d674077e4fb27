#pragma once

#include "biggl/poly.hpp"

namespace biggl {

// Univariate rational function in u with exact rational coefficients,
// kept with coprime numerator/denominator and a monic denominator.
class RatFun {
public:
    RatFun() : num_(0), den_(1) {}
    RatFun(const Rat& c) : num_(c), den_(1) {}
    RatFun(const Poly& num, const Poly& den = Poly(1));

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun operator-() const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

// gcd of univariate polynomials in u (monic result; zero if both are zero).
Poly upoly_gcd(const Poly& a, const Poly& b);
// Quotient and remainder of univariate division in u.
std::pair<Poly, Poly> upoly_divmod(const Poly& a, const Poly& b);

}  // namespace biggl
