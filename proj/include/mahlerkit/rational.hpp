#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <iosfwd>

namespace mahlerkit {

// Arbitrary-precision rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<long int>(n)) {}
    Rational(long n, long d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(static_cast<long int>(n), static_cast<long int>(d));
        q_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    // Parses "a/b" or "a".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        mpz_class num, den = 1;
        if (slash == std::string::npos) {
            if (num.set_str(s, 10) != 0)
                throw std::invalid_argument("Rational: bad integer '" + s + "'");
        } else {
            if (num.set_str(s.substr(0, slash), 10) != 0 ||
                den.set_str(s.substr(slash + 1), 10) != 0)
                throw std::invalid_argument("Rational: bad fraction '" + s + "'");
        }
        return Rational(num, den);
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sgn() const { return mpq_sgn(q_.get_mpq_t()); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    Rational abs() const { return sgn() < 0 ? -*this : *this; }

    Rational pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw std::invalid_argument("Rational: 0^negative");
            return (Rational(1) / *this).pow(-e);
        }
        Rational base = *this, acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace mahlerkit
