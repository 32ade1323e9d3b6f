#include "doctest.h"

#include <random>

#include "modgal/qseries.hpp"
#include "oracles.hpp"

using namespace modgal;

namespace {

std::vector<std::uint64_t> coeffs_of(const QExpansion& f) { return {f.coefficients().begin(), f.coefficients().end()}; }

QExpansion random_series(std::mt19937_64& rng, std::uint64_t ell, std::size_t precision) {
    std::uniform_int_distribution<std::uint64_t> dist(0, ell - 1);
    std::vector<std::uint64_t> c(precision + 1);
    for (auto& x : c) x = dist(rng);
    return QExpansion(ell, std::move(c));
}

} // namespace

TEST_CASE("series_mul") {
    const QExpansion a(13, {1, 1, 0});
    const QExpansion b(13, {1, 12, 0});
    CHECK(coeffs_of(series_mul(a, b)) == std::vector<std::uint64_t>{1, 0, 12});

    const QExpansion one(13, {1, 0, 0, 0});
    const QExpansion f(13, {3, 1, 4, 1});
    CHECK(series_mul(f, one) == f);

    SUBCASE("E4 * E6 = E10 against integer coefficients") {
        // E10 = 1 - 264 sum sigma_9(n) q^n over the integers, then reduced.
        std::vector<std::int64_t> e10 = {1, -264 * 1, -264 * 513};
        const QExpansion prod = series_mul(eisenstein(4, 13, 2), eisenstein(6, 13, 2));
        CHECK(prod == QExpansion::from_signed(13, e10, FormType{1, 10, {}}));
        CHECK(coeffs_of(prod) == std::vector<std::uint64_t>{1, 9, 2});
    }

    SUBCASE("precision truncates to the shorter operand") {
        CHECK(series_mul(QExpansion(13, {1, 2, 3, 4}), QExpansion(13, {1, 1})).precision() == 1);
    }

    CHECK_THROWS_AS(series_mul(QExpansion(13, {1}), QExpansion(11, {1})), ModulusMismatch);
}

TEST_CASE("series_mul is commutative and associative") {
    std::mt19937_64 rng(20261015);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t ell = trial % 2 ? 13 : 691;
        const QExpansion f = random_series(rng, ell, 40);
        const QExpansion g = random_series(rng, ell, 35);
        const QExpansion h = random_series(rng, ell, 45);
        CHECK(series_mul(f, g) == series_mul(g, f));
        CHECK(series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h)));
    }
}

TEST_CASE("eisenstein") {
    CHECK(coeffs_of(eisenstein(4, 13, 2)) == std::vector<std::uint64_t>{1, 6, 2});
    CHECK(coeffs_of(eisenstein(6, 13, 1)) == std::vector<std::uint64_t>{1, 3});
    for (std::uint64_t ell : {5ULL, 11ULL, 23ULL}) {
        CHECK(eisenstein(4, ell, 5)[0] == 1);
        CHECK(eisenstein(6, ell, 5)[0] == 1);
        const auto e4 = oracle::naive_eisenstein(240, 3, ell, 60);
        const auto e6 = oracle::naive_eisenstein(-504, 5, ell, 60);
        CHECK(eisenstein(4, ell, 60) == QExpansion::from_signed(ell, e4, FormType{1, 4, {}}));
        CHECK(eisenstein(6, ell, 60) == QExpansion::from_signed(ell, e6, FormType{1, 6, {}}));
    }
    CHECK_THROWS_AS(eisenstein(8, 13, 5), UnsupportedWeight);
    CHECK_THROWS_AS(eisenstein(4, 3, 5), NotPrime);
}

TEST_CASE("delta_k") {
    CHECK(delta_k(12, 13, 2)[2] == 2);
    CHECK(delta_k(16, 13, 2)[2] == 8);
    for (std::uint64_t k : supported_cusp_weights()) {
        for (std::uint64_t ell : {5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL}) {
            const QExpansion f = delta_k(k, ell, 60);
            CHECK(f[0] == 0);
            CHECK(f[1] == 1);
            CHECK(f.form_type() == FormType{1, k, {}});
            CHECK(f == QExpansion::from_signed(ell, oracle::delta_k(k, ell, 60), FormType{1, k, {}}));
        }
    }
    CHECK_THROWS_AS(delta_k(14, 13, 5), UnsupportedWeight);
    CHECK_THROWS_AS(delta_k(24, 13, 5), UnsupportedWeight);
    CHECK_THROWS_AS(delta_k(12, 15, 5), NotPrime);
}

TEST_CASE("delta_12 matches the eta product") {
    for (std::uint64_t ell : {11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 691ULL}) {
        CHECK(delta_k(12, ell, 200) == QExpansion::from_signed(ell, oracle::eta_delta(ell, 200), FormType{1, 12, {}}));
    }
}

TEST_CASE("Hecke relations hold for every supported weight") {
    for (std::uint64_t k : supported_cusp_weights()) {
        for (std::uint64_t ell : {11ULL, 13ULL, 23ULL}) {
            const QExpansion f = delta_k(k, ell, 300);
            for (std::uint64_t m = 2; m <= 300; ++m) {
                for (std::uint64_t n = 2; m * n <= 300; ++n) {
                    if (std::gcd(m, n) == 1) CHECK(f.coeff(m * n) == f.coeff(m) * f.coeff(n));
                }
            }
            for (std::uint64_t p : primes_up_to(300)) {
                const Residue pk = mod_pow(Residue::from_unsigned(p, ell), k - 1);
                for (std::uint64_t prev = 1, cur = p; cur * p <= 300; prev = cur, cur *= p) {
                    CHECK(f.coeff(cur * p) == f.coeff(p) * f.coeff(cur) - pk * f.coeff(prev));
                }
            }
        }
    }
}

TEST_CASE("theta") {
    const QExpansion delta = delta_k(12, 13, 20);
    const QExpansion t = theta(delta);
    CHECK(t[2] == 4);
    CHECK(t[13] == 0);
    CHECK(t.form_type()->weight == 12 + 14);

    CHECK(coeffs_of(theta(hasse(13, 5))) == std::vector<std::uint64_t>(6, 0));

    SUBCASE("theta^ell = theta") {
        for (std::uint64_t ell : {5ULL, 11ULL, 13ULL, 17ULL}) {
            const QExpansion f = delta_k(22, ell, 200);
            CHECK(theta_power(f, ell).coefficients().size() == theta(f).coefficients().size());
            CHECK(equal_upto(theta_power(f, ell), theta(f), 200));
        }
    }
    SUBCASE("theta_power agrees with repeated theta") {
        const QExpansion f = delta_k(16, 17, 50);
        QExpansion g = f;
        for (int i = 0; i < 5; ++i) g = theta(g);
        CHECK(g == theta_power(f, 5));
    }
}

TEST_CASE("hasse") {
    const QExpansion a = hasse(13, 5);
    CHECK(coeffs_of(a) == std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0});
    CHECK(a.form_type()->weight == 12);
    CHECK(hasse(11, 3).form_type()->weight == 10);

    const QExpansion f = delta_k(20, 13, 40);
    const QExpansion af = series_mul(hasse(13, 40), f);
    CHECK(equal_upto(af, f, 40));
    CHECK(af.form_type()->weight == 20 + 12);
}

TEST_CASE("index_gamma1 and sturm_bound") {
    CHECK(index_gamma1(1) == 1);
    CHECK(index_gamma1(2) == 3);
    CHECK(index_gamma1(4) == 12);
    for (std::int64_t n = 1; n <= 40; ++n) CHECK(index_gamma1(n) == oracle::gamma1_cosets(n));

    CHECK(sturm_bound(1, 26) == 2);
    CHECK(sturm_bound(1, 12) == 1);
    CHECK(sturm_bound(2, 12) == 3);
    CHECK(sturm_bound(1, 4) == 1);
}

TEST_CASE("equal_upto and same_eigenform") {
    const QExpansion d16 = delta_k(16, 13, 50);
    const QExpansion d12 = delta_k(12, 13, 50);
    CHECK(equal_upto(d16, d16, 50));

    const QExpansion t2 = theta_power(d12, 2);
    CHECK(t2.form_type()->weight == 12 + 2 * 14);
    CHECK(equal_upto(d16, t2, sturm_bound(1, std::max<std::uint64_t>(16, 12 + 2 * 14))));
    CHECK(same_eigenform(d16, t2));
    CHECK(equal_upto(d16, t2, 50));

    CHECK_FALSE(equal_upto(d16, theta(d12), 2));
    CHECK_FALSE(same_eigenform(d16, theta(d12))); // 16 vs 26: weights incongruent mod 12

    // Index 0 is compared too.
    CHECK_FALSE(equal_upto(eisenstein(4, 13, 5), delta_k(16, 13, 5).with_type(std::nullopt), 0));

    CHECK_THROWS_AS(equal_upto(d16, d12.truncated(10), 20), InsufficientPrecision);
    CHECK_THROWS_AS(equal_upto(d16, delta_k(16, 11, 50), 5), ModulusMismatch);
    CHECK_THROWS_AS(same_eigenform(d16, d12.with_type(std::nullopt)), std::invalid_argument);
}

TEST_CASE("coefficients past precision are errors") {
    const QExpansion f = delta_k(12, 13, 10);
    CHECK_THROWS_AS(f.coeff(11), InsufficientPrecision);
    CHECK_THROWS_AS(f.truncated(11), InsufficientPrecision);
    CHECK(f.truncated(4).precision() == 4);
}
