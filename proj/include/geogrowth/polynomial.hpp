#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace geogrowth {

using Rational = mpq_class;
using Integer = mpz_class;

// Univariate polynomial in z with exact rational coefficients.
// Invariant: coeffs has no trailing zero; the zero polynomial is the
// empty vector. degree() of the zero polynomial is -1.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(Rational c) {
        return Polynomial(std::vector<Rational>{std::move(c)});
    }

    static Polynomial constant(long c) { return constant(Rational(c)); }

    // c * z^k
    static Polynomial monomial(Rational c, std::size_t k) {
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    static Polynomial z() { return monomial(Rational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    Rational leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Rational> v = a.coeffs_;
        for (auto& c : v) c = -c;
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        std::vector<Rational> v = a.coeffs_;
        for (auto& x : v) x *= c;
        return Polynomial(std::move(v));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rational> rem = a.coeffs_;
        int db = b.degree();
        if (a.degree() < db) return {Polynomial(), a};
        std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
        for (int i = a.degree(); i >= db; --i) {
            if (rem[i] == 0) continue;
            Rational f = rem[i] / b.coeffs_.back();
            quot[i - db] = f;
            for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs_[j];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    // Canonical gcd: primitive integer coefficients, positive
    // lowest-degree nonzero coefficient (the convention all growth
    // denominators follow, constant term 1).
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.primitive_part();
    }

    // Scale to integer coefficients with content 1 and positive
    // lowest-degree nonzero coefficient.
    Polynomial primitive_part() const {
        if (is_zero()) return *this;
        Integer den_lcm(1);
        for (const auto& c : coeffs_) {
            Integer d = c.get_den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
        Integer num_gcd(0);
        for (const auto& c : coeffs_) {
            Integer n = c.get_num() * (den_lcm / c.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
        Rational scale(den_lcm, num_gcd);
        scale.canonicalize();
        Polynomial p = *this * scale;
        for (const auto& c : p.coeffs_) {
            if (c == 0) continue;
            if (c < 0) p = -p;
            break;
        }
        return p;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!out.empty()) out += coeffs_[i] > 0 ? " + " : " - ";
            else if (coeffs_[i] < 0) out += "-";
            Rational a = abs(coeffs_[i]);
            if (i == 0) {
                out += a.get_str();
            } else {
                if (a != 1) out += a.get_str() + "*";
                out += "z";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace geogrowth
