#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "modgal/galrep.hpp"

namespace modgal {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at offset " + std::to_string(pos) + ": " + msg), position(pos) {}
    std::size_t position;
};

class DuplicateTerm : public ParseError {
public:
    DuplicateTerm(std::size_t pos, std::uint64_t exponent)
        : ParseError(pos, "duplicate term x^" + std::to_string(exponent)), exponent(exponent) {}
    std::uint64_t exponent;
};

class NotSquarefree : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integer polynomial c_0 + c_1 x + ... + c_n x^n with an optional (k, ell) label.
struct ProjPolyRecord {
    std::uint64_t k = 0;
    std::uint64_t ell = 0;
    std::vector<std::int64_t> coeffs;
    std::vector<std::string> warnings;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    friend bool operator==(const ProjPolyRecord& a, const ProjPolyRecord& b) { return a.coeffs == b.coeffs; }
};

/// Parses sums of `c*x^e`, `x^e`, `c*x`, `x` and `c`. Exponents may be
/// braced (`x^{14}`); whitespace is ignored. A non-monic result is accepted
/// with a warning.
ProjPolyRecord parse_poly(std::string_view text);

ProjPolyRecord load_poly_file(const std::filesystem::path& path);

/// Dense polynomial over F_p, coefficients ascending, no trailing zeros.
class ModPoly {
public:
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    static ModPoly x(std::uint64_t p) { return ModPoly(p, {0, 1}); }

    std::uint64_t modulus() const { return p_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

    ModPoly monic() const;
    ModPoly derivative() const;
    std::uint64_t evaluate(std::uint64_t x) const;

    friend bool operator==(const ModPoly&, const ModPoly&) = default;

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

ModPoly poly_sub(const ModPoly& a, const ModPoly& b);
ModPoly poly_mul(const ModPoly& a, const ModPoly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<ModPoly, ModPoly> poly_divmod(const ModPoly& a, const ModPoly& b);
ModPoly poly_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m);
ModPoly poly_powmod(ModPoly base, std::uint64_t exp, const ModPoly& m);

ModPoly reduce_mod(const ProjPolyRecord& r, std::uint64_t p);

/// Monic gcd; gcd(0, 0) = 0.
ModPoly poly_gcd_mod(const ModPoly& f, const ModPoly& g);

bool is_squarefree_mod(const ModPoly& f);

/// Degrees of the irreducible factors of a squarefree polynomial, sorted.
std::vector<std::uint64_t> ddf(const ModPoly& f);

enum class OutcomeStatus { Match, AmbiguousPass, SkippedRamified, SkippedEll, Fail };

std::string_view to_string(OutcomeStatus s);
OutcomeStatus outcome_status_from_string(std::string_view s);

struct PrimeOutcome {
    std::uint64_t p = 0;
    OutcomeStatus status = OutcomeStatus::Match;
    DegreePattern observed;
    std::vector<DegreePattern> predicted;

    friend bool operator==(const PrimeOutcome&, const PrimeOutcome&) = default;
};

struct OutcomeCounts {
    std::uint64_t match = 0;
    std::uint64_t ambiguous_pass = 0;
    std::uint64_t skipped_ramified = 0;
    std::uint64_t skipped_ell = 0;
    std::uint64_t fail = 0;

    friend bool operator==(const OutcomeCounts&, const OutcomeCounts&) = default;
};

/// Per-prime comparison of factorization patterns against the Frobenius
/// prediction. `outcomes` is empty when loaded from a summary document.
struct VerificationReport {
    std::uint64_t k = 0;
    std::uint64_t ell = 0;
    std::uint64_t pmax = 0;
    OutcomeCounts counts;
    std::vector<std::uint64_t> failures;
    std::vector<PrimeOutcome> outcomes;

    bool consistent() const { return counts.fail == 0; }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Checks the record's factorization pattern mod every prime p <= pmax
/// against the projective Frobenius class of Delta_k mod ell.
VerificationReport verify_record(const ProjPolyRecord& r, std::uint64_t k, std::uint64_t ell, std::uint64_t pmax);

} // namespace modgal
