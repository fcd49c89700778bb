#ifndef REFLEX_FIELD_HPP
#define REFLEX_FIELD_HPP

#include <concepts>
#include <string>
#include <string_view>

#include "reflex/errors.hpp"
#include "reflex/quadratic.hpp"
#include "reflex/rational.hpp"

namespace reflex {

/// Exact field the scalars of one representation live in.
/// quadratic_d == 0 means Q, otherwise Q(sqrt(quadratic_d)).
struct FieldContext {
    long quadratic_d = 0;

    static FieldContext rational() { return {}; }
    static FieldContext quadratic(long d) {
        if (!is_squarefree_above_one(d))
            throw InputError("quadratic field parameter must be square-free and > 1");
        return {d};
    }

    bool is_quadratic() const noexcept { return quadratic_d != 0; }
    std::string describe() const {
        return is_quadratic() ? "quadratic " + std::to_string(quadratic_d) : "rational";
    }
    friend bool operator==(const FieldContext&, const FieldContext&) = default;
};

template <class F>
concept ExactField = requires(F a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { b.is_zero() } -> std::convertible_to<bool>;
    { b.inverse() } -> std::convertible_to<F>;
    F(0);
    F(Rational{});
};

/// Text syntax and context checks per scalar type.
template <class F>
struct field_traits;

template <>
struct field_traits<Rational> {
    static bool accepts(const FieldContext& ctx) { return !ctx.is_quadratic(); }

    static Rational parse(std::string_view text, const FieldContext& ctx) {
        if (ctx.is_quadratic()) throw ParseError("rational scalar type used with quadratic field");
        if (text.find("sqrt") != std::string_view::npos)
            throw ParseError("quadratic literal '" + std::string(text) + "' in a rational field");
        return Rational::parse(text);
    }

    static std::string format(const Rational& x, const FieldContext&) { return x.str(); }
};

template <>
struct field_traits<QuadraticNumber> {
    static bool accepts(const FieldContext& ctx) { return ctx.is_quadratic(); }

    static QuadraticNumber parse(std::string_view text, const FieldContext& ctx) {
        if (!ctx.is_quadratic()) throw ParseError("quadratic scalar type used with rational field");
        if (text.find("sqrt") == std::string_view::npos)
            throw ParseError("rational literal '" + std::string(text) +
                             "' in a quadratic field; write a+b*sqrt(D)");
        QuadraticNumber q = QuadraticNumber::parse(text);
        if (q.discriminant() != ctx.quadratic_d)
            throw ParseError("literal '" + std::string(text) + "' does not belong to Q(sqrt(" +
                             std::to_string(ctx.quadratic_d) + "))");
        return q;
    }

    static std::string format(const QuadraticNumber& x, const FieldContext& ctx) {
        return x.str(ctx.quadratic_d);
    }
};

template <class F>
std::string format_scalar(const F& x, const FieldContext& ctx) {
    return field_traits<F>::format(x, ctx);
}

template <class F>
F parse_scalar(std::string_view text, const FieldContext& ctx) {
    return field_traits<F>::parse(text, ctx);
}

}  // namespace reflex

#endif
