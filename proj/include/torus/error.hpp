#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torus {

/// Stable error categories. The CLI prints `errc_name(code)` as a machine-readable prefix.
enum class Errc {
    InvalidArgument,
    NotDivisible,
    DivByZero,
    ZeroInput,
    NonAdmissible,
    ZeroAlpha,
    KnotCase,
    LinkCase,
    NearPole,
    NotAPole,
    NonFinite,
    FormulaMismatch,
    Internal,
};

constexpr std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidArgument: return "INVALID_ARGUMENT";
    case Errc::NotDivisible: return "NOT_DIVISIBLE";
    case Errc::DivByZero: return "DIV_BY_ZERO";
    case Errc::ZeroInput: return "ZERO_INPUT";
    case Errc::NonAdmissible: return "NON_ADMISSIBLE";
    case Errc::ZeroAlpha: return "ZERO_ALPHA";
    case Errc::KnotCase: return "KNOT_CASE";
    case Errc::LinkCase: return "LINK_CASE";
    case Errc::NearPole: return "NEAR_POLE";
    case Errc::NotAPole: return "NOT_A_POLE";
    case Errc::NonFinite: return "NON_FINITE";
    case Errc::FormulaMismatch: return "FORMULA_MISMATCH";
    case Errc::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace torus
