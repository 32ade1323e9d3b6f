#include "doctest.h"

#include "modgal/galrep.hpp"
#include "modgal/qseries.hpp"
#include "modgal/twist.hpp"
#include "oracles.hpp"

using namespace modgal;

namespace {

using QuadPair = std::pair<std::int64_t, std::int64_t>;

QuadPair quad_pow(QuadPair x, std::int64_t n, std::int64_t c, std::int64_t ell) {
    QuadPair r{1, 0};
    for (std::int64_t i = 0; i < n; ++i) r = oracle::quad_mul(r, x, c, ell);
    return r;
}

// Roots of x^2 - t x + d found by enumerating F_{ell^2}; projective order is
// the least n with lambda^n = mu^n.
std::int64_t brute_projective_order(std::int64_t t, std::int64_t d, std::int64_t ell, std::int64_t c) {
    std::vector<QuadPair> roots;
    for (std::int64_t a0 = 0; a0 < ell; ++a0) {
        for (std::int64_t a1 = 0; a1 < ell; ++a1) {
            const QuadPair x{a0, a1};
            const QuadPair sq = oracle::quad_mul(x, x, c, ell);
            if (oracle::mod(sq.first - t * a0 + d, ell) == 0 && oracle::mod(sq.second - t * a1, ell) == 0) {
                roots.push_back(x);
            }
        }
    }
    REQUIRE(roots.size() == 2);
    for (std::int64_t n = 1;; ++n) {
        if (quad_pow(roots[0], n, c, ell) == quad_pow(roots[1], n, c, ell)) return n;
    }
}

} // namespace

TEST_CASE("charpol_data") {
    const CharpolData c = charpol_data(16, 13, 2, Residue(8, 13));
    CHECK(c.trace.value() == 8);
    CHECK(c.det.value() == 8);
    const CharpolData z = charpol_data(20, 17, 3, Residue(0, 17));
    CHECK(z.trace.is_zero());
    CHECK(z.det == mod_pow(Residue(3, 17), 19));
    CHECK_THROWS_AS(charpol_data(16, 13, 13, Residue(0, 13)), RamifiedPrime);
    CHECK_THROWS_AS(charpol_data(16, 13, 2, Residue(8, 11)), ModulusMismatch);
}

TEST_CASE("frobenius_class examples") {
    CHECK(frobenius_class({2, Residue(2, 13), Residue(1, 13)}) == FrobeniusClass{FrobeniusKind::Ambiguous, 0});
    CHECK(frobenius_class({2, Residue(0, 13), Residue(1, 13)}) == FrobeniusClass{FrobeniusKind::Split, 2});
    const FrobeniusClass ns = frobenius_class({2, Residue(8, 13), Residue(8, 13)});
    CHECK(ns.kind == FrobeniusKind::NonSplit);
    CHECK(ns.order == 14);
    CHECK(brute_projective_order(8, 8, 13, 2) == 14);
}

TEST_CASE("frobenius_class agrees with root enumeration in F_{ell^2}") {
    for (std::int64_t ell : {5, 7, 11, 13}) {
        const auto c = static_cast<std::int64_t>(find_nonresidue(ell).value());
        for (std::int64_t t = 0; t < ell; ++t) {
            for (std::int64_t d = 1; d < ell; ++d) {
                const FrobeniusClass fc = frobenius_class({2, Residue(t, ell), Residue(d, ell)});
                const std::int64_t disc = oracle::mod(t * t - 4 * d, ell);
                if (disc == 0) {
                    CHECK(fc.kind == FrobeniusKind::Ambiguous);
                    continue;
                }
                CHECK(fc.order == static_cast<std::uint64_t>(brute_projective_order(t, d, ell, c)));
                if (fc.kind == FrobeniusKind::Split) {
                    CHECK((ell - 1) % fc.order == 0);
                } else {
                    CHECK(fc.kind == FrobeniusKind::NonSplit);
                    CHECK((ell + 1) % fc.order == 0);
                    CHECK(fc.order >= 2);
                }
            }
        }
    }
}

TEST_CASE("predicted_degree_pattern") {
    CHECK(predicted_degree_pattern({FrobeniusKind::Split, 1}, 13) == std::vector<DegreePattern>{DegreePattern(14, 1)});
    CHECK(predicted_degree_pattern({FrobeniusKind::Split, 2}, 13) ==
          std::vector<DegreePattern>{{1, 1, 2, 2, 2, 2, 2, 2}});
    CHECK(predicted_degree_pattern({FrobeniusKind::NonSplit, 14}, 13) == std::vector<DegreePattern>{{14}});
    const auto amb = predicted_degree_pattern({FrobeniusKind::Ambiguous, 0}, 7);
    CHECK(amb == std::vector<DegreePattern>{DegreePattern(8, 1), DegreePattern{1, 7}});

    for (std::uint64_t ell : {5ULL, 7ULL, 11ULL, 13ULL, 23ULL}) {
        for (std::uint64_t n = 1; n <= ell + 1; ++n) {
            std::vector<FrobeniusClass> classes;
            if ((ell - 1) % n == 0) classes.push_back({FrobeniusKind::Split, n});
            if ((ell + 1) % n == 0 && n >= 2) classes.push_back({FrobeniusKind::NonSplit, n});
            for (const auto& fc : classes) {
                for (const auto& pattern : predicted_degree_pattern(fc, ell)) {
                    std::uint64_t sum = 0;
                    for (auto x : pattern) sum += x;
                    CHECK(sum == ell + 1);
                }
            }
        }
    }
}

TEST_CASE("predicted patterns match companion-matrix orbits on P^1") {
    for (std::int64_t ell : {5, 7, 11}) {
        for (std::int64_t t = 0; t < ell; ++t) {
            for (std::int64_t d = 1; d < ell; ++d) {
                const auto patterns = predicted_degree_pattern(frobenius_class({2, Residue(t, ell), Residue(d, ell)}), ell);
                const auto orbits = oracle::projective_orbits(0, -d, 1, t, ell);
                CHECK(std::find(patterns.begin(), patterns.end(), orbits) != patterns.end());
            }
        }
    }
}

TEST_CASE("screen_exceptional") {
    SUBCASE("published unexceptional pairs") {
        for (const auto& row : published_twists()) {
            CAPTURE(row.k);
            CAPTURE(row.ell);
            const ScreeningReport r = screen_exceptional(row.k, row.ell, 200);
            CHECK(r.likely_unexceptional());
            CHECK(r.verdict() == "likely unexceptional");
            CHECK(r.bound == 200);
        }
    }
    SUBCASE("Ramanujan congruence mod 691") {
        const ScreeningReport r = screen_exceptional(12, 691, 50);
        CHECK(r.reducible_candidate);
        REQUIRE(r.reducible_j.has_value());
        CHECK(*r.reducible_j == 0);
        CHECK_FALSE(r.likely_unexceptional());
    }
    SUBCASE("tau mod 23 vanishes at inert primes") {
        const ScreeningReport r = screen_exceptional(12, 23, 200);
        CHECK(r.dihedral_candidate);
        CHECK_FALSE(r.likely_unexceptional());
    }
    SUBCASE("tau mod small primes") {
        // 5 and 7 are classical reducible primes for Delta: tau(p) = p^j + p^(11-j).
        CHECK(screen_exceptional(12, 5, 200).reducible_candidate);
        CHECK(screen_exceptional(12, 7, 200).reducible_candidate);
        for (std::uint64_t ell : {11ULL, 13ULL, 17ULL, 19ULL}) {
            CAPTURE(ell);
            CHECK(screen_exceptional(12, ell, 200).likely_unexceptional());
        }
    }
}
