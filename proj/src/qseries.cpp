#include "modgal/qseries.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace modgal {

namespace {

constexpr std::array<std::uint64_t, 6> kCuspWeights = {12, 16, 18, 20, 22, 26};

void check_moduli(const QExpansion& f, const QExpansion& g, const char* what) {
    if (f.ell() != g.ell()) {
        throw ModulusMismatch(std::string(what) + ": series mod " + std::to_string(f.ell()) + " and mod " +
                              std::to_string(g.ell()));
    }
}

std::optional<FormType> product_type(const QExpansion& f, const QExpansion& g) {
    const auto& a = f.form_type();
    const auto& b = g.form_type();
    if (!a || !b || a->level != b->level || !a->character.trivial() || !b->character.trivial()) return std::nullopt;
    return FormType{a->level, a->weight + b->weight, {}};
}

std::optional<FormType> sum_type(const QExpansion& f, const QExpansion& g) {
    if (f.form_type() == g.form_type()) return f.form_type();
    return std::nullopt;
}

// sigma_j(m) mod ell for 1 <= m <= n.
std::vector<std::uint64_t> divisor_power_sums(std::uint64_t j, std::uint64_t ell, std::size_t n) {
    std::vector<std::uint64_t> sigma(n + 1, 0);
    for (std::size_t m = 1; m <= n; ++m) {
        Residue acc = Residue::zero(ell);
        for (std::size_t d = 1; d * d <= m; ++d) {
            if (m % d != 0) continue;
            acc += mod_pow(Residue::from_unsigned(d, ell), j);
            const std::size_t e = m / d;
            if (e != d) acc += mod_pow(Residue::from_unsigned(e, ell), j);
        }
        sigma[m] = acc.value();
    }
    return sigma;
}

} // namespace

QExpansion::QExpansion(std::uint64_t ell, std::vector<std::uint64_t> coeffs, std::optional<FormType> type)
    : ell_(ell), coeffs_(std::move(coeffs)), type_(std::move(type)) {
    if (ell < 2 || ell > kMaxModulus) throw std::invalid_argument("QExpansion: modulus out of range");
    if (coeffs_.empty()) throw std::invalid_argument("QExpansion: needs at least the constant term");
    for (auto& c : coeffs_) c %= ell_;
}

QExpansion QExpansion::from_signed(std::uint64_t ell, std::span<const std::int64_t> coeffs,
                                   std::optional<FormType> type) {
    std::vector<std::uint64_t> reduced;
    reduced.reserve(coeffs.size());
    for (std::int64_t c : coeffs) reduced.push_back(Residue(c, ell).value());
    return QExpansion(ell, std::move(reduced), std::move(type));
}

Residue QExpansion::coeff(std::size_t n) const {
    if (n > precision()) {
        throw InsufficientPrecision("QExpansion: a_" + std::to_string(n) + " requested at precision " +
                                    std::to_string(precision()));
    }
    return Residue::from_unsigned(coeffs_[n], ell_);
}

QExpansion QExpansion::truncated(std::size_t prec) const {
    if (prec > precision()) {
        throw InsufficientPrecision("QExpansion: cannot extend precision " + std::to_string(precision()) + " to " +
                                    std::to_string(prec));
    }
    return QExpansion(ell_, std::vector<std::uint64_t>(coeffs_.begin(), coeffs_.begin() + prec + 1), type_);
}

QExpansion QExpansion::with_type(std::optional<FormType> type) const {
    QExpansion out = *this;
    out.type_ = std::move(type);
    return out;
}

QExpansion series_mul(const QExpansion& f, const QExpansion& g) {
    check_moduli(f, g, "series_mul");
    const std::uint64_t ell = f.ell();
    const std::size_t n = std::min(f.precision(), g.precision());
    const auto a = f.coefficients();
    const auto b = g.coefficients();
    std::vector<std::uint64_t> c(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % ell;
    }
    return QExpansion(ell, std::move(c), product_type(f, g));
}

QExpansion series_add(const QExpansion& f, const QExpansion& g) {
    check_moduli(f, g, "series_add");
    const std::size_t n = std::min(f.precision(), g.precision());
    std::vector<std::uint64_t> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = (f.coefficients()[i] + g.coefficients()[i]) % f.ell();
    return QExpansion(f.ell(), std::move(c), sum_type(f, g));
}

QExpansion series_sub(const QExpansion& f, const QExpansion& g) {
    check_moduli(f, g, "series_sub");
    const std::size_t n = std::min(f.precision(), g.precision());
    std::vector<std::uint64_t> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = (f.coefficients()[i] + f.ell() - g.coefficients()[i]) % f.ell();
    return QExpansion(f.ell(), std::move(c), sum_type(f, g));
}

QExpansion series_scale(const QExpansion& f, const Residue& c) {
    if (c.modulus() != f.ell()) throw ModulusMismatch("series_scale: scalar modulus differs from series");
    std::vector<std::uint64_t> out(f.coefficients().begin(), f.coefficients().end());
    for (auto& a : out) a = a * c.value() % f.ell();
    return QExpansion(f.ell(), std::move(out), f.form_type());
}

std::span<const std::uint64_t> supported_cusp_weights() { return kCuspWeights; }

bool is_supported_cusp_weight(std::uint64_t k) {
    return std::find(kCuspWeights.begin(), kCuspWeights.end(), k) != kCuspWeights.end();
}

QExpansion eisenstein(std::uint64_t k, std::uint64_t ell, std::size_t precision) {
    require_prime(ell, "eisenstein");
    if (ell < 5) throw NotPrime("eisenstein: ell must be at least 5");
    std::int64_t scale = 0;
    std::uint64_t j = 0;
    if (k == 4) {
        scale = 240;
        j = 3;
    } else if (k == 6) {
        scale = -504;
        j = 5;
    } else {
        throw UnsupportedWeight("eisenstein: only E4 and E6 are provided, got weight " + std::to_string(k));
    }
    const Residue s(scale, ell);
    auto coeffs = divisor_power_sums(j, ell, precision);
    coeffs[0] = 1;
    for (std::size_t m = 1; m <= precision; ++m) coeffs[m] = (s * Residue::from_unsigned(coeffs[m], ell)).value();
    return QExpansion(ell, std::move(coeffs), FormType{1, k, {}});
}

QExpansion delta_k(std::uint64_t k, std::uint64_t ell, std::size_t precision) {
    if (!is_supported_cusp_weight(k)) {
        throw UnsupportedWeight("delta_k: weight " + std::to_string(k) +
                                " is not one of 12, 16, 18, 20, 22, 26 (one-dimensional cusp spaces)");
    }
    require_prime(ell, "delta_k");
    if (ell < 5) throw NotPrime("delta_k: ell must be at least 5");
    if (precision < 1) throw std::invalid_argument("delta_k: precision must be at least 1");

    const QExpansion e4 = eisenstein(4, ell, precision);
    const QExpansion e6 = eisenstein(6, ell, precision);
    const QExpansion e4_cubed = series_mul(series_mul(e4, e4), e4);
    const QExpansion e6_squared = series_mul(e6, e6);
    QExpansion f = series_scale(series_sub(e4_cubed, e6_squared), Residue(1728, ell).inverse());

    const std::uint64_t rest = k - 12;
    const std::uint64_t e6_power = rest % 4 == 2 ? 1 : 0;
    const std::uint64_t e4_power = (rest - 6 * e6_power) / 4;
    for (std::uint64_t i = 0; i < e4_power; ++i) f = series_mul(f, e4);
    if (e6_power) f = series_mul(f, e6);
    return f;
}

QExpansion theta(const QExpansion& f) { return theta_power(f, 1); }

QExpansion theta_power(const QExpansion& f, std::uint64_t times) {
    const std::uint64_t ell = f.ell();
    std::vector<std::uint64_t> out(f.coefficients().begin(), f.coefficients().end());
    for (std::size_t n = 0; n < out.size(); ++n) {
        // n^0 = 1 including n = 0; a_0 only survives for times = 0.
        const Residue factor = mod_pow(Residue::from_unsigned(n, ell), times);
        out[n] = (factor * Residue::from_unsigned(out[n], ell)).value();
    }
    std::optional<FormType> type = f.form_type();
    if (type) type->weight += times * (ell + 1);
    return QExpansion(ell, std::move(out), std::move(type));
}

QExpansion hasse(std::uint64_t ell, std::size_t precision) {
    require_prime(ell, "hasse");
    std::vector<std::uint64_t> coeffs(precision + 1, 0);
    coeffs[0] = 1;
    return QExpansion(ell, std::move(coeffs), FormType{1, ell - 1, {}});
}

std::uint64_t index_gamma1(std::uint64_t level) {
    if (level == 0) throw std::invalid_argument("index_gamma1: level must be positive");
    if (level == 1) return 1;
    if (level == 2) return 3;
    // N^2 * prod (1 - 1/p^2) = prod over p^e || N of p^(2e-2) (p^2 - 1).
    std::uint64_t index = level * level;
    for (std::uint64_t p : prime_factors(level)) index = index / (p * p) * (p * p - 1);
    return index;
}

std::uint64_t sturm_bound(std::uint64_t level, std::uint64_t weight) {
    return std::max<std::uint64_t>(1, weight * index_gamma1(level) / 12);
}

bool equal_upto(const QExpansion& f, const QExpansion& g, std::size_t m) {
    check_moduli(f, g, "equal_upto");
    if (f.precision() < m || g.precision() < m) {
        throw InsufficientPrecision("equal_upto: comparison to index " + std::to_string(m) +
                                    " exceeds series precision");
    }
    return std::equal(f.coefficients().begin(), f.coefficients().begin() + m + 1, g.coefficients().begin());
}

bool same_eigenform(const QExpansion& f, const QExpansion& g) {
    const auto& a = f.form_type();
    const auto& b = g.form_type();
    if (!a || !b) throw std::invalid_argument("same_eigenform: both series need a form type");
    if (a->level != b->level) throw std::invalid_argument("same_eigenform: levels differ");
    check_moduli(f, g, "same_eigenform");
    const std::uint64_t period = f.ell() - 1;
    if (a->weight % period != b->weight % period) return false;
    return equal_upto(f, g, sturm_bound(a->level, std::max(a->weight, b->weight)));
}

} // namespace modgal
