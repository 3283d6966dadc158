#include "abelweb/errors.hpp"

namespace abelweb {

const char *error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtCenter: return "PoleAtCenter";
    case ErrorKind::IdenticallySingular: return "IdenticallySingular";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::InvalidWeb: return "InvalidWeb";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::DegenerateMap: return "DegenerateMap";
    case ErrorKind::TooFewFoliations: return "TooFewFoliations";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::ZeroPivotCoefficient: return "ZeroPivotCoefficient";
    case ErrorKind::NotPurelyUnivariate: return "NotPurelyUnivariate";
    case ErrorKind::TrivialEquation: return "TrivialEquation";
    case ErrorKind::NoRationalExpression: return "NoRationalExpression";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::RankBoundExceeded: return "RankBoundExceeded";
    case ErrorKind::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::OnCut: return "OnCut";
    case ErrorKind::PrecisionNotReached: return "PrecisionNotReached";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::EvaluationFailure: return "EvaluationFailure";
    case ErrorKind::NotConstant: return "NotConstant";
    case ErrorKind::Format: return "FormatError";
    }
    return "Error";
}

} // namespace abelweb
