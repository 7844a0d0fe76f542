#ifndef KGBOUND_ERROR_HPP
#define KGBOUND_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgb
{

enum class ErrorCode
{
    InvalidArgument,
    DegenerateProblem,
    NoAdmissibleBranch,
    UnsupportedSigma,
    UnrealRadicand,
    EnergyOutOfWindow,
    NotBound,
    NonNormalizable,
    NoBracket,
    ConvergenceFailure,
    UnsupportedRegime,
};

constexpr std::string_view to_string(ErrorCode code)
{
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DegenerateProblem: return "DegenerateProblem";
        case ErrorCode::NoAdmissibleBranch: return "NoAdmissibleBranch";
        case ErrorCode::UnsupportedSigma: return "UnsupportedSigma";
        case ErrorCode::UnrealRadicand: return "UnrealRadicand";
        case ErrorCode::EnergyOutOfWindow: return "EnergyOutOfWindow";
        case ErrorCode::NotBound: return "NotBound";
        case ErrorCode::NonNormalizable: return "NonNormalizable";
        case ErrorCode::NoBracket: return "NoBracket";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::UnsupportedRegime: return "UnsupportedRegime";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so it can be surfaced verbatim.
class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace kgb

#endif // KGBOUND_ERROR_HPP
