#ifndef REFLEX_RATIONAL_HPP
#define REFLEX_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "reflex/errors.hpp"

namespace reflex {

/// Arbitrary-precision rational, always reduced with positive denominator.
///
/// Thin value wrapper over mpq_class so that generic code never sees GMP
/// expression templates.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw InputError("rational with zero denominator");
        v_ = mpq_class(mpz_class(num), mpz_class(den));
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    const mpq_class& raw() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    int sign() const noexcept { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InputError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational inverse() const {
        if (is_zero()) throw InputError("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    /// "p" or "p/q".
    std::string str() const { return v_.get_str(); }

    /// Parses "p" or "p/q" (optional sign, surrounding whitespace allowed).
    static Rational parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        if (s.empty()) throw ParseError("empty rational literal");
        const auto slash = s.find('/');
        auto valid_int = [](std::string_view t) {
            std::size_t i = 0;
            if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
            return true;
        };
        auto to_mpz = [](std::string t) {
            if (!t.empty() && t[0] == '+') t.erase(0, 1);
            return mpz_class(t, 10);
        };
        if (slash == std::string::npos) {
            if (!valid_int(s)) throw ParseError("bad rational literal '" + std::string(text) + "'");
            return Rational(mpq_class(to_mpz(s)));
        }
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
            throw ParseError("bad rational literal '" + std::string(text) + "'");
        mpz_class d = to_mpz(den);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(mpq_class(to_mpz(num), d));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

}  // namespace reflex

#endif
