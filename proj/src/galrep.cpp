#include "modgal/galrep.hpp"

#include <algorithm>
#include <string>

#include "modgal/qseries.hpp"

namespace modgal {

CharpolData charpol_data(std::uint64_t k, std::uint64_t ell, std::uint64_t p, const Residue& a_p) {
    if (a_p.modulus() != ell) throw ModulusMismatch("charpol_data: a_p not reduced mod ell");
    if (p == ell) throw RamifiedPrime("charpol_data: Frob_" + std::to_string(p) + " is ramified");
    const Residue det = mod_pow(Residue::from_unsigned(p, ell), k - 1);
    return {p, a_p, det};
}

FrobeniusClass frobenius_class(const CharpolData& c) {
    const std::uint64_t ell = c.trace.modulus();
    if (c.det.is_zero()) throw ZeroElement("frobenius_class: determinant is zero");

    const Residue two(2, ell);
    const Residue disc = c.trace * c.trace - Residue(4, ell) * c.det;
    const Residue det_inv = c.det.inverse();

    switch (legendre(disc)) {
    case 0:
        return {FrobeniusKind::Ambiguous, 0};
    case 1: {
        // lambda/mu = lambda^2 / (lambda mu) = lambda^2 / det.
        const Residue lambda = (c.trace + *sqrt_mod(disc)) / two;
        const std::uint64_t n = mult_order(lambda * lambda * det_inv);
        if ((ell - 1) % n != 0) throw std::logic_error("frobenius_class: split order does not divide ell - 1");
        return {FrobeniusKind::Split, n};
    }
    default: {
        // lambda = (t + s sqrt(c)) / 2 with s^2 c = disc.
        const Residue nr = find_nonresidue(ell);
        const Residue s = *sqrt_mod(disc / nr);
        const QuadElt lambda(c.trace / two, s / two, nr);
        const QuadElt ratio = lambda * lambda * QuadElt(det_inv, Residue::zero(ell), nr);
        const std::uint64_t n = quad_mult_order(ratio);
        if ((ell + 1) % n != 0 || n < 2) {
            throw std::logic_error("frobenius_class: non-split order does not divide ell + 1");
        }
        return {FrobeniusKind::NonSplit, n};
    }
    }
}

std::vector<DegreePattern> predicted_degree_pattern(const FrobeniusClass& fc, std::uint64_t ell) {
    switch (fc.kind) {
    case FrobeniusKind::Split: {
        DegreePattern pattern{1, 1};
        pattern.insert(pattern.end(), (ell - 1) / fc.order, fc.order);
        std::sort(pattern.begin(), pattern.end());
        return {pattern};
    }
    case FrobeniusKind::NonSplit:
        return {DegreePattern((ell + 1) / fc.order, fc.order)};
    case FrobeniusKind::Ambiguous:
        break;
    }
    return {DegreePattern(ell + 1, 1), DegreePattern{1, ell}};
}

ScreeningReport screen_exceptional(std::uint64_t k, std::uint64_t ell, std::uint64_t bound) {
    const QExpansion f = delta_k(k, ell, std::max<std::uint64_t>(bound, 1));

    ScreeningReport report;
    report.k = k;
    report.ell = ell;
    report.bound = bound;

    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : primes_up_to(bound)) {
        if (p != ell) primes.push_back(p);
    }

    const std::uint64_t period = ell - 1;
    for (std::uint64_t j = 0; j < period && !report.reducible_j; ++j) {
        const std::uint64_t other = ((k - 1) % period + period - j % period) % period;
        const bool all = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t p) {
            const Residue base = Residue::from_unsigned(p, ell);
            return f.coeff(p) == mod_pow(base, j) + mod_pow(base, other);
        });
        if (all) report.reducible_j = j;
    }
    report.reducible_candidate = report.reducible_j.has_value();

    report.dihedral_candidate = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t p) {
        return legendre(Residue::from_unsigned(p, ell)) != -1 || f.coeff(p).is_zero();
    });

    report.small_image_candidate = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t p) {
        const FrobeniusClass fc = frobenius_class(charpol_data(k, ell, p, f.coeff(p)));
        return fc.kind == FrobeniusKind::Ambiguous || fc.order <= 5;
    });
    return report;
}

} // namespace modgal
