#include "modgal/twist.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace modgal {

namespace {

constexpr std::array<PublishedTwist, 6> kPublished = {{
    {16, 13, 2, 12},
    {20, 17, 2, 16},
    {22, 11, 1, 12},
    {22, 19, 2, 18},
    {26, 13, 1, 12},
    {26, 23, 2, 22},
}};

std::uint64_t twisted(std::uint64_t n, std::uint64_t i, const Residue& a) {
    return (mod_pow(Residue::from_unsigned(n, a.modulus()), i) * a).value();
}

} // namespace

bool weight_congruent(std::uint64_t k1, std::uint64_t k2, std::uint64_t i, std::uint64_t ell) {
    const auto period = static_cast<std::int64_t>(ell - 1);
    const std::int64_t diff = static_cast<std::int64_t>(k1) - static_cast<std::int64_t>(k2) - 2 * static_cast<std::int64_t>(i);
    return diff % period == 0;
}

std::uint64_t twist_bound(std::uint64_t level, std::uint64_t ell) {
    return ell * (ell + 1) * index_gamma1(level) / 12;
}

TwistCertificate check_twist(const QExpansion& f1, const QExpansion& f2, std::uint64_t i, std::uint64_t extended) {
    if (f1.ell() != f2.ell()) throw ModulusMismatch("check_twist: series over different primes");
    const auto& t1 = f1.form_type();
    const auto& t2 = f2.form_type();
    if (!t1 || !t2) throw std::invalid_argument("check_twist: both series need a form type");
    if (t1->level != t2->level) throw std::invalid_argument("check_twist: levels differ");

    const std::uint64_t ell = f1.ell();
    if (!weight_congruent(t1->weight, t2->weight, i, ell)) {
        std::ostringstream msg;
        msg << "check_twist: " << t1->weight << " != " << t2->weight << " + 2*" << i << " mod " << ell - 1;
        throw WeightIncongruent(msg.str());
    }

    TwistCertificate cert;
    cert.ell = ell;
    cert.k1 = t1->weight;
    cert.k2 = t2->weight;
    cert.i = i;
    cert.bound = twist_bound(t1->level, ell);
    cert.extended_terms = extended;

    const std::uint64_t needed = std::max(cert.bound, extended);
    if (f1.precision() < needed || f2.precision() < needed) {
        throw InsufficientPrecision("check_twist: series precision below " + std::to_string(needed));
    }

    for (std::uint64_t p : primes_up_to(cert.bound)) {
        if ((t1->level * ell) % p == 0) continue;
        const std::uint64_t lhs = f1[p];
        const std::uint64_t rhs = twisted(p, i, f2.coeff(p));
        if (lhs != rhs) {
            std::ostringstream msg;
            msg << "check_twist: a_" << p << "(f1) = " << lhs << " but " << p << "^" << i << " a_" << p
                << "(f2) = " << rhs << " mod " << ell;
            throw PrimeMismatch(p, msg.str());
        }
        cert.checks.push_back({p, lhs, rhs});
    }

    for (std::uint64_t n = 1; n <= extended; ++n) {
        if (f1[n] != twisted(n, i, f2.coeff(n))) {
            throw SeriesMismatch(n, "check_twist: theta^i equality fails at q^" + std::to_string(n));
        }
    }
    return cert;
}

bool certificate_valid(const TwistCertificate& cert) {
    if (!is_prime(cert.ell) || cert.ell < 5) return false;
    if (cert.i > cert.ell - 2) return false;
    if (!weight_congruent(cert.k1, cert.k2, cert.i, cert.ell)) return false;
    if (cert.bound < twist_bound(1, cert.ell)) return false;

    std::vector<std::uint64_t> expected;
    for (std::uint64_t p : primes_up_to(cert.bound)) {
        if (p != cert.ell) expected.push_back(p);
    }
    if (expected.size() != cert.checks.size()) return false;
    for (std::size_t j = 0; j < expected.size(); ++j) {
        const PrimeCheck& c = cert.checks[j];
        if (c.p != expected[j] || c.lhs != c.rhs || c.lhs >= cert.ell) return false;
    }
    return true;
}

TwistResult twist_search(std::uint64_t k, std::uint64_t ell, std::uint64_t extended) {
    if (!is_supported_cusp_weight(k)) {
        throw UnsupportedWeight("twist_search: weight " + std::to_string(k) + " is not supported");
    }
    require_prime(ell, "twist_search");
    if (ell < 5) throw NotPrime("twist_search: ell must be at least 5");

    const std::uint64_t precision = std::max(twist_bound(1, ell), extended);
    const QExpansion f1 = delta_k(k, ell, precision);
    for (std::uint64_t k_prime : supported_cusp_weights()) {
        if (k_prime > ell + 1) break;
        const QExpansion f2 = delta_k(k_prime, ell, precision);
        for (std::uint64_t i = 0; i + 2 <= ell; ++i) {
            if (!weight_congruent(k, k_prime, i, ell)) continue;
            try {
                return {i, k_prime, check_twist(f1, f2, i, extended)};
            } catch (const PrimeMismatch&) {
            } catch (const SeriesMismatch&) {
            }
        }
    }
    throw NotFound("twist_search: no (i, k') with k' <= ell + 1 for k = " + std::to_string(k) +
                   ", ell = " + std::to_string(ell) + " (exceptional prime or unsupported configuration)");
}

std::uint64_t projective_equiv(std::uint64_t k, std::uint64_t ell) { return twist_search(k, ell).k_prime; }

std::span<const PublishedTwist> published_twists() { return kPublished; }

std::optional<PublishedTwist> published_twist(std::uint64_t k, std::uint64_t ell) {
    for (const auto& row : kPublished) {
        if (row.k == k && row.ell == ell) return row;
    }
    return std::nullopt;
}

std::optional<std::string> published_discrepancy(std::uint64_t k, std::uint64_t ell, const TwistResult& result) {
    const auto row = published_twist(k, ell);
    if (!row || (row->i == result.i && row->k_prime == result.k_prime)) return std::nullopt;
    std::ostringstream msg;
    msg << "published twist for (k, ell) = (" << k << ", " << ell << ") is (i, k') = (" << row->i << ", "
        << row->k_prime << ")";
    if (!weight_congruent(k, row->k_prime, row->i, ell)) {
        msg << ", which violates k = k' + 2i mod " << ell - 1;
    }
    msg << "; computed (" << result.i << ", " << result.k_prime << ")";
    return msg.str();
}

} // namespace modgal
