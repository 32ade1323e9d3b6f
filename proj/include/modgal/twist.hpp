#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "modgal/qseries.hpp"

namespace modgal {

class WeightIncongruent : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// a_p(f1) != p^i a_p(f2) at the recorded prime (the first one that fails).
class PrimeMismatch : public std::runtime_error {
public:
    PrimeMismatch(std::uint64_t p, const std::string& msg) : std::runtime_error(msg), prime(p) {}
    std::uint64_t prime;
};

/// Prime checks passed but a_n(f1) != n^i a_n(f2) at a composite index n.
class SeriesMismatch : public std::runtime_error {
public:
    SeriesMismatch(std::uint64_t n, const std::string& msg) : std::runtime_error(msg), index(n) {}
    std::uint64_t index;
};

class NotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrimeCheck {
    std::uint64_t p = 0;
    std::uint64_t lhs = 0; // a_p(f1) mod ell
    std::uint64_t rhs = 0; // p^i a_p(f2) mod ell

    friend bool operator==(const PrimeCheck&, const PrimeCheck&) = default;
};

/// Evidence that rho_{f1} is isomorphic to rho_{f2} twisted by chi_ell^i.
struct TwistCertificate {
    std::uint64_t ell = 0;
    std::uint64_t k1 = 0;
    std::uint64_t k2 = 0;
    std::uint64_t i = 0;
    std::uint64_t bound = 0;
    std::uint64_t extended_terms = 0;
    std::vector<PrimeCheck> checks;

    friend bool operator==(const TwistCertificate&, const TwistCertificate&) = default;
};

bool weight_congruent(std::uint64_t k1, std::uint64_t k2, std::uint64_t i, std::uint64_t ell);

/// floor(ell (ell + 1) [SL_2(Z) : Gamma_1(N)] / 12).
std::uint64_t twist_bound(std::uint64_t level, std::uint64_t ell);

/// Checks a_p(f1) = p^i a_p(f2) for every prime p <= twist_bound, p != N*ell,
/// then a_n(f1) = n^i a_n(f2) for all 1 <= n <= extended.
TwistCertificate check_twist(const QExpansion& f1, const QExpansion& f2, std::uint64_t i, std::uint64_t extended);

/// Re-validates a certificate from its stored data alone.
bool certificate_valid(const TwistCertificate& cert);

struct TwistResult {
    std::uint64_t i = 0;
    std::uint64_t k_prime = 0;
    TwistCertificate certificate;
};

inline constexpr std::uint64_t kDefaultExtendedTerms = 1000;

/// First (k', i) in (k' ascending, i ascending) order, k' a supported cusp
/// weight <= ell + 1, with Delta_k = theta^i Delta_k' mod ell.
TwistResult twist_search(std::uint64_t k, std::uint64_t ell, std::uint64_t extended = kDefaultExtendedTerms);

/// Weight k' whose projective representation matches that of Delta_k.
std::uint64_t projective_equiv(std::uint64_t k, std::uint64_t ell);

/// A published (k, ell, i, k') twist row.
struct PublishedTwist {
    std::uint64_t k;
    std::uint64_t ell;
    std::uint64_t i;
    std::uint64_t k_prime;
};

std::span<const PublishedTwist> published_twists();
std::optional<PublishedTwist> published_twist(std::uint64_t k, std::uint64_t ell);

/// Warning text when a search result disagrees with the published row.
std::optional<std::string> published_discrepancy(std::uint64_t k, std::uint64_t ell, const TwistResult& result);

} // namespace modgal
