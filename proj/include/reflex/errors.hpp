#ifndef REFLEX_ERRORS_HPP
#define REFLEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reflex {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad index, wrong size, zero scale...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Malformed text (scalar token, representation file, family spec).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A matrix that was expected to be a generalized reflection is not one.
class ReflectionError : public Error {
public:
    enum class Kind { NotRankOne, NotDiagonalizable, NotInvertible, NotSquare };

    ReflectionError(Kind kind, const std::string& what)
        : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

inline const char* to_string(ReflectionError::Kind k) {
    switch (k) {
    case ReflectionError::Kind::NotRankOne: return "NotRankOne";
    case ReflectionError::Kind::NotDiagonalizable: return "NotDiagonalizable";
    case ReflectionError::Kind::NotInvertible: return "NotInvertible";
    case ReflectionError::Kind::NotSquare: return "NotSquare";
    }
    return "?";
}

/// A theorem checker was invoked on input outside its hypotheses.
class TheoremInapplicable : public Error {
public:
    using Error::Error;
};

/// The supplied exterior-power map is not an invertible intertwiner.
class PsiNotIntertwining : public Error {
public:
    using Error::Error;
};

/// An identity that must hold for valid input failed during lifting.
/// Always indicates invalid input or a defect upstream.
class StructureViolation : public Error {
public:
    using Error::Error;
};

}  // namespace reflex

#endif
