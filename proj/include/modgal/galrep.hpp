#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modgal/ffield.hpp"

namespace modgal {

class RamifiedPrime : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Trace and determinant of rho_f(Frob_p): x^2 - a_p x + p^(k-1), trivial character.
struct CharpolData {
    std::uint64_t p;
    Residue trace;
    Residue det;
};

CharpolData charpol_data(std::uint64_t k, std::uint64_t ell, std::uint64_t p, const Residue& a_p);

enum class FrobeniusKind { Split, NonSplit, Ambiguous };

/// PGL_2(F_ell) conjugacy type of the projective Frobenius. `order` is the
/// order of the eigenvalue ratio; zero for Ambiguous.
struct FrobeniusClass {
    FrobeniusKind kind;
    std::uint64_t order;

    friend bool operator==(const FrobeniusClass&, const FrobeniusClass&) = default;
};

FrobeniusClass frobenius_class(const CharpolData& c);

/// Sorted cycle lengths on the ell + 1 points of P^1(F_ell).
using DegreePattern = std::vector<std::uint64_t>;

/// Admissible cycle types: one pattern, or two for Ambiguous (scalar or
/// unipotent, which the characteristic polynomial cannot separate).
std::vector<DegreePattern> predicted_degree_pattern(const FrobeniusClass& fc, std::uint64_t ell);

/// Heuristic evidence for or against ell being exceptional for Delta_k.
struct ScreeningReport {
    std::uint64_t k = 0;
    std::uint64_t ell = 0;
    std::uint64_t bound = 0;
    bool reducible_candidate = false;
    std::optional<std::uint64_t> reducible_j;
    bool dihedral_candidate = false;
    bool small_image_candidate = false;

    bool likely_unexceptional() const {
        return !reducible_candidate && !dihedral_candidate && !small_image_candidate;
    }
    std::string verdict() const { return likely_unexceptional() ? "likely unexceptional" : "possibly exceptional"; }

    friend bool operator==(const ScreeningReport&, const ScreeningReport&) = default;
};

/// Scans primes p <= bound, p != ell, of Delta_k mod ell for
///  - reducibility: a_p = p^j + p^(k-1-j) for one fixed j and all p,
///  - dihedral (by Q(sqrt(+-ell))): a_p = 0 whenever p is a non-residue mod ell,
///  - small projective image: every projective Frobenius order is <= 5.
ScreeningReport screen_exceptional(std::uint64_t k, std::uint64_t ell, std::uint64_t bound);

} // namespace modgal
