#pragma once

#include <stdexcept>
#include <string>

namespace ltsig {

// Every failure the library can report.  The CLI maps these onto process
// exit codes: input problems exit 2, domain-precondition failures exit 3,
// internal assertion failures exit 4.
enum class errc {
    odd_size,
    not_unimodular,
    not_coprime,
    not_palindromic,
    not_real,
    parity_violation,
    not_prime_power,
    not_homology_sphere_cover,
    parse_error,
    validation_error,
    duplicate_name,
    unknown_knot,
    bad_alpha,
    io_error,
};

inline const char* errc_name(errc e) {
    switch (e) {
        case errc::odd_size: return "OddSize";
        case errc::not_unimodular: return "NotUnimodular";
        case errc::not_coprime: return "NotCoprime";
        case errc::not_palindromic: return "NotPalindromic";
        case errc::not_real: return "NotReal";
        case errc::parity_violation: return "ParityViolation";
        case errc::not_prime_power: return "NotPrimePower";
        case errc::not_homology_sphere_cover: return "NotHomologySphereCover";
        case errc::parse_error: return "ParseError";
        case errc::validation_error: return "ValidationError";
        case errc::duplicate_name: return "DuplicateName";
        case errc::unknown_knot: return "UnknownKnot";
        case errc::bad_alpha: return "BadAlpha";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

inline int errc_exit_code(errc e) {
    switch (e) {
        case errc::not_prime_power:
        case errc::not_homology_sphere_cover:
            return 3;
        case errc::parity_violation:
        case errc::not_real:
            return 4;
        default:
            return 2;
    }
}

class Error : public std::runtime_error {
  public:
    Error(errc kind, const std::string& detail)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + detail),
          kind_(kind) {}

    errc kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return errc_exit_code(kind_); }

  private:
    errc kind_;
};

[[noreturn]] inline void raise(errc kind, const std::string& detail) {
    throw Error(kind, detail);
}

}  // namespace ltsig
