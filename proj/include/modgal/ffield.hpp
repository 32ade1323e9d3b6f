#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace modgal {

/// Binary operation on values with different moduli. Always a programming
/// error: every computation fixes one prime per run.
class ModulusMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ZeroElement : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotPrime : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Largest supported modulus; keeps every product inside 64 bits.
inline constexpr std::uint64_t kMaxModulus = 0xffffffffULL;

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Throws NotPrime unless n is a prime not exceeding kMaxModulus.
void require_prime(std::uint64_t n, const char* what);

/// Sieve of Eratosthenes; ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Distinct prime factors by trial division, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Element of the prime field F_m.
class Residue {
public:
    Residue(std::int64_t value, std::uint64_t modulus);

    static Residue zero(std::uint64_t modulus) { return Residue(0, modulus); }
    static Residue one(std::uint64_t modulus) { return Residue(1, modulus); }
    static Residue from_unsigned(std::uint64_t value, std::uint64_t modulus);

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    Residue operator-() const;
    Residue& operator+=(const Residue& rhs);
    Residue& operator-=(const Residue& rhs);
    Residue& operator*=(const Residue& rhs);
    Residue& operator/=(const Residue& rhs);

    friend Residue operator+(Residue a, const Residue& b) { return a += b; }
    friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
    friend Residue operator/(Residue a, const Residue& b) { return a /= b; }

    friend bool operator==(const Residue&, const Residue&) = default;

    Residue inverse() const;

private:
    struct Raw {};
    Residue(Raw, std::uint64_t value, std::uint64_t modulus) : value_(value), modulus_(modulus) {}
    void check_same(const Residue& rhs) const;

    std::uint64_t value_;
    std::uint64_t modulus_;
};

Residue mod_pow(Residue base, std::uint64_t exp);

/// Legendre symbol via Euler's criterion: 0, 1 or -1.
int legendre(const Residue& a);

/// Smallest n >= 1 with a^n = 1.
std::uint64_t mult_order(const Residue& a);

/// Smallest positive quadratic non-residue mod ell.
Residue find_nonresidue(std::uint64_t ell);

/// A square root of a (Tonelli-Shanks), or nullopt when a is a non-residue.
std::optional<Residue> sqrt_mod(const Residue& a);

/// Element a0 + a1*sqrt(c) of F_{ell^2} = F_ell(sqrt(c)), c a fixed non-residue.
class QuadElt {
public:
    QuadElt(Residue a0, Residue a1, Residue nonresidue);

    /// Embeds a prime-field element using the canonical non-residue.
    static QuadElt embed(const Residue& a);

    const Residue& a0() const { return a0_; }
    const Residue& a1() const { return a1_; }
    const Residue& nonresidue() const { return c_; }
    std::uint64_t modulus() const { return a0_.modulus(); }
    bool is_zero() const { return a0_.is_zero() && a1_.is_zero(); }
    bool is_one() const { return a0_.value() == 1 && a1_.is_zero(); }

    QuadElt& operator+=(const QuadElt& rhs);
    QuadElt& operator-=(const QuadElt& rhs);
    QuadElt& operator*=(const QuadElt& rhs);

    friend QuadElt operator+(QuadElt a, const QuadElt& b) { return a += b; }
    friend QuadElt operator-(QuadElt a, const QuadElt& b) { return a -= b; }
    friend QuadElt operator*(QuadElt a, const QuadElt& b) { return a *= b; }

    friend bool operator==(const QuadElt&, const QuadElt&) = default;

    QuadElt conjugate() const { return QuadElt(a0_, -a1_, c_); }
    Residue norm() const { return a0_ * a0_ - c_ * a1_ * a1_; }
    QuadElt inverse() const;

private:
    void check_same(const QuadElt& rhs) const;

    Residue a0_;
    Residue a1_;
    Residue c_;
};

QuadElt quad_pow(QuadElt base, std::uint64_t exp);

/// Smallest n >= 1 with x^n = 1 in F_{ell^2}; divides ell^2 - 1.
std::uint64_t quad_mult_order(const QuadElt& x);

} // namespace modgal
