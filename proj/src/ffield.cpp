#include "modgal/ffield.hpp"

#include <string>

namespace modgal {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Strips the given prime factors from `order` while x^(order/q) stays 1.
template <typename Elem, typename IsOne, typename Pow>
std::uint64_t strip_order(const Elem& x, std::uint64_t order, IsOne is_one, Pow pow) {
    for (std::uint64_t q : prime_factors(order)) {
        while (order % q == 0 && is_one(pow(x, order / q))) order /= q;
    }
    return order;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for n < 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void require_prime(std::uint64_t n, const char* what) {
    if (!is_prime(n) || n > kMaxModulus) {
        throw NotPrime(std::string(what) + ": " + std::to_string(n) + " is not a supported prime");
    }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---------------------------------------------------------------- Residue

Residue::Residue(std::int64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
    if (modulus < 2 || modulus > kMaxModulus) throw std::invalid_argument("Residue: modulus out of range");
    const auto m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    value_ = static_cast<std::uint64_t>(r);
}

Residue Residue::from_unsigned(std::uint64_t value, std::uint64_t modulus) {
    if (modulus < 2 || modulus > kMaxModulus) throw std::invalid_argument("Residue: modulus out of range");
    return Residue(Raw{}, value % modulus, modulus);
}

void Residue::check_same(const Residue& rhs) const {
    if (modulus_ != rhs.modulus_) {
        throw ModulusMismatch("Residue: moduli " + std::to_string(modulus_) + " and " +
                              std::to_string(rhs.modulus_) + " mixed");
    }
}

Residue Residue::operator-() const {
    return Residue(Raw{}, value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Residue& Residue::operator+=(const Residue& rhs) {
    check_same(rhs);
    value_ += rhs.value_;
    if (value_ >= modulus_) value_ -= modulus_;
    return *this;
}

Residue& Residue::operator-=(const Residue& rhs) {
    check_same(rhs);
    value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + modulus_ - rhs.value_;
    return *this;
}

Residue& Residue::operator*=(const Residue& rhs) {
    check_same(rhs);
    value_ = value_ * rhs.value_ % modulus_;
    return *this;
}

Residue& Residue::operator/=(const Residue& rhs) {
    check_same(rhs);
    return *this *= rhs.inverse();
}

Residue Residue::inverse() const {
    if (value_ == 0) throw ZeroElement("Residue: inverse of zero");
    return mod_pow(*this, modulus_ - 2);
}

Residue mod_pow(Residue base, std::uint64_t exp) {
    Residue r = Residue::one(base.modulus());
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

int legendre(const Residue& a) {
    if (a.is_zero()) return 0;
    const Residue e = mod_pow(a, (a.modulus() - 1) / 2);
    return e.value() == 1 ? 1 : -1;
}

std::uint64_t mult_order(const Residue& a) {
    if (a.is_zero()) throw ZeroElement("mult_order: zero has no multiplicative order");
    return strip_order(
        a, a.modulus() - 1, [](const Residue& x) { return x.value() == 1; },
        [](const Residue& x, std::uint64_t e) { return mod_pow(x, e); });
}

Residue find_nonresidue(std::uint64_t ell) {
    require_prime(ell, "find_nonresidue");
    if (ell == 2) throw NotPrime("find_nonresidue: modulus must be odd");
    for (std::uint64_t c = 2;; ++c) {
        Residue r = Residue::from_unsigned(c, ell);
        if (legendre(r) == -1) return r;
    }
}

std::optional<Residue> sqrt_mod(const Residue& a) {
    const std::uint64_t p = a.modulus();
    if (a.is_zero() || p == 2) return a;
    if (legendre(a) != 1) return std::nullopt;

    std::uint64_t q = p - 1;
    std::uint64_t s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    const Residue z = find_nonresidue(p);
    Residue c = mod_pow(z, q);
    Residue t = mod_pow(a, q);
    Residue r = mod_pow(a, (q + 1) / 2);
    std::uint64_t m = s;
    while (t.value() != 1) {
        std::uint64_t i = 0;
        Residue t2 = t;
        while (t2.value() != 1) {
            t2 *= t2;
            ++i;
        }
        Residue b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b *= b;
        m = i;
        c = b * b;
        t *= c;
        r *= b;
    }
    return r;
}

// ---------------------------------------------------------------- QuadElt

QuadElt::QuadElt(Residue a0, Residue a1, Residue nonresidue) : a0_(a0), a1_(a1), c_(nonresidue) {
    if (a0_.modulus() != a1_.modulus() || a0_.modulus() != c_.modulus()) {
        throw ModulusMismatch("QuadElt: components with different moduli");
    }
    if (legendre(c_) != -1) throw std::invalid_argument("QuadElt: c must be a quadratic non-residue");
}

QuadElt QuadElt::embed(const Residue& a) {
    return QuadElt(a, Residue::zero(a.modulus()), find_nonresidue(a.modulus()));
}

void QuadElt::check_same(const QuadElt& rhs) const {
    if (c_ != rhs.c_) throw ModulusMismatch("QuadElt: different defining non-residues");
}

QuadElt& QuadElt::operator+=(const QuadElt& rhs) {
    check_same(rhs);
    a0_ += rhs.a0_;
    a1_ += rhs.a1_;
    return *this;
}

QuadElt& QuadElt::operator-=(const QuadElt& rhs) {
    check_same(rhs);
    a0_ -= rhs.a0_;
    a1_ -= rhs.a1_;
    return *this;
}

QuadElt& QuadElt::operator*=(const QuadElt& rhs) {
    check_same(rhs);
    const Residue b0 = a0_ * rhs.a0_ + c_ * a1_ * rhs.a1_;
    const Residue b1 = a0_ * rhs.a1_ + a1_ * rhs.a0_;
    a0_ = b0;
    a1_ = b1;
    return *this;
}

QuadElt QuadElt::inverse() const {
    if (is_zero()) throw ZeroElement("QuadElt: inverse of zero");
    const Residue n_inv = norm().inverse();
    return QuadElt(a0_ * n_inv, -a1_ * n_inv, c_);
}

QuadElt quad_pow(QuadElt base, std::uint64_t exp) {
    const std::uint64_t p = base.modulus();
    QuadElt r(Residue::one(p), Residue::zero(p), base.nonresidue());
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

std::uint64_t quad_mult_order(const QuadElt& x) {
    if (x.is_zero()) throw ZeroElement("quad_mult_order: zero has no multiplicative order");
    const std::uint64_t p = x.modulus();
    return strip_order(
        x, p * p - 1, [](const QuadElt& y) { return y.is_one(); },
        [](const QuadElt& y, std::uint64_t e) { return quad_pow(y, e); });
}

} // namespace modgal
