#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "modgal/ffield.hpp"

namespace modgal {

class InsufficientPrecision : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class UnsupportedWeight : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Nebentypus. An empty table means the trivial character; otherwise the
/// values on (Z/N*ell)^* as residues mod ell, indexed by a mod N*ell.
struct DirichletCharacter {
    std::vector<std::uint64_t> table;

    bool trivial() const { return table.empty(); }
    friend bool operator==(const DirichletCharacter&, const DirichletCharacter&) = default;
};

/// Type (N, k, eps) of a mod-ell modular form.
struct FormType {
    std::uint64_t level = 1;
    std::uint64_t weight = 0;
    DirichletCharacter character;

    friend bool operator==(const FormType&, const FormType&) = default;
};

/// q-expansion a_0 + a_1 q + ... + a_n q^n over F_ell, known to precision n.
class QExpansion {
public:
    QExpansion(std::uint64_t ell, std::vector<std::uint64_t> coeffs, std::optional<FormType> type = std::nullopt);

    static QExpansion from_signed(std::uint64_t ell, std::span<const std::int64_t> coeffs,
                                  std::optional<FormType> type = std::nullopt);

    std::uint64_t ell() const { return ell_; }
    std::size_t precision() const { return coeffs_.size() - 1; }

    /// a_n; throws InsufficientPrecision past the recorded precision.
    Residue coeff(std::size_t n) const;
    std::uint64_t operator[](std::size_t n) const { return coeff(n).value(); }

    std::span<const std::uint64_t> coefficients() const { return coeffs_; }
    const std::optional<FormType>& form_type() const { return type_; }

    QExpansion truncated(std::size_t precision) const;
    QExpansion with_type(std::optional<FormType> type) const;

    friend bool operator==(const QExpansion&, const QExpansion&) = default;

private:
    std::uint64_t ell_;
    std::vector<std::uint64_t> coeffs_;
    std::optional<FormType> type_;
};

// Arithmetic truncates to the smaller precision. Products of two tagged
// forms of equal level and trivial character carry the summed weight;
// sums keep the tag only when both operands agree.
QExpansion series_mul(const QExpansion& f, const QExpansion& g);
QExpansion series_add(const QExpansion& f, const QExpansion& g);
QExpansion series_sub(const QExpansion& f, const QExpansion& g);
QExpansion series_scale(const QExpansion& f, const Residue& c);

/// Weights k with dim S_k(SL_2(Z)) = 1.
std::span<const std::uint64_t> supported_cusp_weights();
bool is_supported_cusp_weight(std::uint64_t k);

/// E_4 or E_6 reduced mod ell.
QExpansion eisenstein(std::uint64_t k, std::uint64_t ell, std::size_t precision);

/// The normalized level-1 cusp eigenform of weight k reduced mod ell,
/// built as Delta * E4^a * E6^b with Delta = (E4^3 - E6^2) / 1728.
QExpansion delta_k(std::uint64_t k, std::uint64_t ell, std::size_t precision);

/// q d/dq. Raises the weight tag by ell + 1.
QExpansion theta(const QExpansion& f);
QExpansion theta_power(const QExpansion& f, std::uint64_t times);

/// Hasse invariant: q-expansion 1, weight ell - 1.
QExpansion hasse(std::uint64_t ell, std::size_t precision);

/// [SL_2(Z) : Gamma_1(N)].
std::uint64_t index_gamma1(std::uint64_t level);

/// floor(k * [SL_2(Z) : Gamma_1(N)] / 12), at least 1.
std::uint64_t sturm_bound(std::uint64_t level, std::uint64_t weight);

/// a_n(f) == a_n(g) for every 0 <= n <= m.
bool equal_upto(const QExpansion& f, const QExpansion& g, std::size_t m);

/// Equality of two tagged eigenforms of possibly different weights: the
/// weights must be congruent mod ell - 1, then coefficients are compared up
/// to the Sturm bound of the larger weight. Returns false on incongruent
/// weights; throws std::invalid_argument if either tag is missing or the
/// levels differ.
bool same_eigenform(const QExpansion& f, const QExpansion& g);

} // namespace modgal
