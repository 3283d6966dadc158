#pragma once

#include <stdexcept>
#include <string>

namespace abelweb {

enum class ErrorKind {
    Parse,
    DivisionByZero,
    PoleAtCenter,
    IdenticallySingular,
    ConstantInput,
    InvalidWeb,
    SearchExhausted,
    DegenerateMap,
    TooFewFoliations,
    DegeneratePair,
    ZeroPivotCoefficient,
    NotPurelyUnivariate,
    TrivialEquation,
    NoRationalExpression,
    NotStabilized,
    RankBoundExceeded,
    DegenerateQuadruple,
    InvalidParameter,
    AlphabetMismatch,
    OnCut,
    PrecisionNotReached,
    UnknownName,
    EvaluationFailure,
    NotConstant,
    Format,
};

const char *error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string &what)
        : Error(ErrorKind::Parse, "at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

} // namespace abelweb
