#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace geogrowth {

// Quotient of two polynomials in canonical form:
//  - gcd(num, den) = 1;
//  - num and den scaled by a common rational so all coefficients are
//    integers with overall content 1;
//  - the lowest-degree nonzero coefficient of den is positive.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}

    RationalFunction(Polynomial num, Polynomial den) {
        if (den.is_zero()) throw std::domain_error("zero denominator");
        normalize(std::move(num), std::move(den));
    }

    explicit RationalFunction(Polynomial num)
        : RationalFunction(std::move(num), Polynomial::constant(1)) {}

    static RationalFunction constant(Rational c) {
        return RationalFunction(Polynomial::constant(std::move(c)));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    // Equality by cross-multiplication of canonical forms.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }

    std::string str() const {
        if (den_ == Polynomial::constant(1)) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void normalize(Polynomial num, Polynomial den) {
        if (num.is_zero()) {
            num_ = Polynomial();
            den_ = Polynomial::constant(1);
            return;
        }
        Polynomial g = Polynomial::gcd(num, den);
        num = Polynomial::divmod(num, g).first;
        den = Polynomial::divmod(den, g).first;

        // Common rational scale making both integer and jointly primitive.
        Integer den_lcm(1);
        for (const auto* p : {&num, &den})
            for (const auto& c : p->coefficients()) {
                Integer d = c.get_den();
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
            }
        Integer content(0);
        for (const auto* p : {&num, &den})
            for (const auto& c : p->coefficients()) {
                Integer n = c.get_num() * (den_lcm / c.get_den());
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
            }
        Rational scale(den_lcm, content);
        scale.canonicalize();
        num = num * scale;
        den = den * scale;

        for (const auto& c : den.coefficients()) {
            if (c == 0) continue;
            if (c < 0) {
                num = -num;
                den = -den;
            }
            break;
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    Polynomial num_;
    Polynomial den_;
};

// First max_len+1 Taylor coefficients of f at z=0, via the linear
// recurrence induced by the denominator. Requires den(0) != 0.
inline std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t max_len) {
    const Polynomial& num = f.num();
    const Polynomial& den = f.den();
    Rational d0 = den.coeff(0);
    if (d0 == 0) throw std::domain_error("not a power series: denominator vanishes at 0");
    std::vector<Rational> a(max_len + 1, Rational(0));
    for (std::size_t k = 0; k <= max_len; ++k) {
        Rational acc = num.coeff(k);
        std::size_t jmax = std::min<std::size_t>(k, static_cast<std::size_t>(std::max(den.degree(), 0)));
        for (std::size_t j = 1; j <= jmax; ++j) acc -= den.coeff(j) * a[k - j];
        a[k] = acc / d0;
    }
    return a;
}

}  // namespace geogrowth
