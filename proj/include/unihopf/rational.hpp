#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <ostream>
#include <string>

#include "unihopf/errors.hpp"

namespace unihopf {

// Exact rational scalar over arbitrary-precision integers. Always kept in
// lowest terms with positive denominator, so equality and printing are
// canonical. No floating point anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw ValidationError("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p/q" or "p" exactly; rejects anything else.
    static Rational parse(const std::string& s) {
        if (s.empty()) throw ValidationError("Rational: empty string");
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(mpq_class(mpz_class(s, 10)));
            }
            const std::string num = s.substr(0, slash);
            const std::string den = s.substr(slash + 1);
            if (num.empty() || den.empty())
                throw ValidationError("Rational: malformed '" + s + "'");
            mpz_class n(num, 10), d(den, 10);
            if (d == 0) throw ValidationError("Rational: zero denominator in '" + s + "'");
            mpq_class q(n, d);
            q.canonicalize();
            return Rational(q);
        } catch (const std::invalid_argument&) {
            throw ValidationError("Rational: not a rational: '" + s + "'");
        }
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ValidationError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_.get_str();
    }

private:
    mpq_class v_;
};

} // namespace unihopf
