#ifndef REFLEX_QUADRATIC_HPP
#define REFLEX_QUADRATIC_HPP

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>

#include "reflex/errors.hpp"
#include "reflex/rational.hpp"

namespace reflex {

/// True iff d > 1 and no prime square divides d.
inline bool is_squarefree_above_one(long d) {
    if (d <= 1) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

/// Element a + b*sqrt(D) of Q(sqrt(D)), D square-free and > 1.
///
/// A value built from a plain rational carries D = 0 ("context not yet
/// fixed") and adopts the D of whatever it is combined with. Mixing two
/// different nonzero D is an InputError.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(long v) : a_(v) {}             // NOLINT(google-explicit-constructor)
    QuadraticNumber(int v) : a_(v) {}              // NOLINT(google-explicit-constructor)
    QuadraticNumber(Rational v) : a_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (!is_squarefree_above_one(d))
            throw InputError("quadratic field parameter must be square-free and > 1, got " +
                             std::to_string(d));
    }

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& surd_part() const noexcept { return b_; }
    long discriminant() const noexcept { return d_; }

    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }

    /// a^2 - D b^2.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadraticNumber conjugate() const { return raw(a_, -b_, d_); }

    QuadraticNumber& operator+=(const QuadraticNumber& o) {
        d_ = join(d_, o.d_);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadraticNumber& operator-=(const QuadraticNumber& o) {
        d_ = join(d_, o.d_);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadraticNumber& operator*=(const QuadraticNumber& o) {
        d_ = join(d_, o.d_);
        Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d_);
        Rational b = a_ * o.b_ + o.a_ * b_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadraticNumber& operator/=(const QuadraticNumber& o) { return *this *= o.inverse(); }

    friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
    friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
    friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
    friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
    friend QuadraticNumber operator-(const QuadraticNumber& x) { return raw(-x.a_, -x.b_, x.d_); }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
    }

    QuadraticNumber inverse() const {
        const Rational n = norm();
        if (n.is_zero()) throw InputError("inverse of zero");
        return raw(a_ / n, -b_ / n, d_);
    }

    /// Canonical "a+b*sqrt(D)"; both parts always present.
    std::string str(long context_d) const {
        const long d = d_ != 0 ? d_ : context_d;
        return a_.str() + "+" + b_.str() + "*sqrt(" + std::to_string(d) + ")";
    }

    /// Parses "a+b*sqrt(D)" (also "a-b*sqrt(D)"); whitespace ignored.
    static QuadraticNumber parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        const auto star = s.rfind("*sqrt(");
        if (star == std::string::npos || s.back() != ')')
            throw ParseError("expected a+b*sqrt(D), got '" + std::string(text) + "'");
        const std::string dtext = s.substr(star + 6, s.size() - star - 7);
        long d = 0;
        try {
            std::size_t used = 0;
            d = std::stol(dtext, &used);
            if (used != dtext.size()) throw ParseError("");
        } catch (const std::exception&) {
            throw ParseError("bad sqrt argument in '" + std::string(text) + "'");
        }
        const std::string ab = s.substr(0, star);
        std::size_t split = std::string::npos;
        for (std::size_t i = 1; i < ab.size(); ++i) {
            if ((ab[i] == '+' || ab[i] == '-') && std::isdigit(static_cast<unsigned char>(ab[i - 1]))) {
                split = i;
                break;
            }
        }
        if (split == std::string::npos)
            throw ParseError("expected a+b*sqrt(D), got '" + std::string(text) + "'");
        std::string btext = ab.substr(split);
        if (btext.size() > 1 && btext[0] == '+' && (btext[1] == '-' || btext[1] == '+'))
            btext.erase(0, 1);
        if (!is_squarefree_above_one(d))
            throw ParseError("sqrt argument must be square-free and > 1 in '" + std::string(text) + "'");
        return QuadraticNumber(Rational::parse(ab.substr(0, split)), Rational::parse(btext), d);
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) {
        return os << x.str(x.d_);
    }

private:
    static QuadraticNumber raw(Rational a, Rational b, long d) {
        QuadraticNumber q;
        q.a_ = std::move(a);
        q.b_ = std::move(b);
        q.d_ = d;
        return q;
    }

    static long join(long x, long y) {
        if (x == 0) return y;
        if (y == 0 || x == y) return x;
        throw InputError("mixing elements of Q(sqrt(" + std::to_string(x) + ")) and Q(sqrt(" +
                         std::to_string(y) + "))");
    }

    Rational a_;
    Rational b_;
    long d_ = 0;
};

}  // namespace reflex

#endif
