#include "modgal/polyverify.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "modgal/qseries.hpp"

namespace modgal {

// ---------------------------------------------------------------- parsing

namespace {

class PolyScanner {
public:
    explicit PolyScanner(std::string_view text) : s_(text) {}

    ProjPolyRecord parse() {
        std::map<std::uint64_t, std::int64_t> terms;
        skip_ws();
        if (at_end()) throw ParseError(pos_, "empty polynomial");

        bool first = true;
        while (true) {
            skip_ws();
            const std::size_t term_start = pos_;
            bool negative = false;
            if (accept_minus()) {
                negative = true;
            } else if (peek() == '+') {
                ++pos_;
            } else if (!first) {
                throw ParseError(pos_, "expected '+' or '-' between terms");
            }
            skip_ws();
            auto [exponent, magnitude] = parse_term();
            if (terms.contains(exponent)) throw DuplicateTerm(term_start, exponent);
            if (negative) {
                terms[exponent] = -static_cast<std::int64_t>(magnitude);
            } else {
                terms[exponent] = static_cast<std::int64_t>(magnitude);
            }
            first = false;
            skip_ws();
            if (at_end()) break;
        }

        ProjPolyRecord rec;
        rec.coeffs.assign(terms.rbegin()->first + 1, 0);
        for (const auto& [e, c] : terms) rec.coeffs[e] = c;
        while (rec.coeffs.size() > 1 && rec.coeffs.back() == 0) rec.coeffs.pop_back();
        if (!rec.monic()) rec.warnings.push_back("polynomial is not monic");
        return rec;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }

    void skip_ws() {
        while (!at_end() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) ++pos_;
    }

    // ASCII '-' or U+2212.
    bool accept_minus() {
        if (peek() == '-') {
            ++pos_;
            return true;
        }
        if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return true;
        }
        return false;
    }

    std::uint64_t parse_uint(std::uint64_t limit, const char* what) {
        std::uint64_t value = 0;
        const char* begin = s_.data() + pos_;
        const char* end = s_.data() + s_.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec == std::errc::invalid_argument) throw ParseError(pos_, std::string("expected ") + what);
        if (ec == std::errc::result_out_of_range || value > limit) {
            throw ParseError(pos_, std::string(what) + " out of range");
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    // Returns (exponent, |coefficient|).
    std::pair<std::uint64_t, std::uint64_t> parse_term() {
        constexpr auto kCoeffLimit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
        std::uint64_t coeff = 1;
        bool has_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_uint(kCoeffLimit, "coefficient");
            has_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 'x') throw ParseError(pos_, "expected 'x' after '*'");
            }
        }
        if (peek() != 'x') {
            if (!has_coeff) throw ParseError(pos_, "expected a coefficient or 'x'");
            return {0, coeff};
        }
        ++pos_;
        skip_ws();
        if (peek() != '^') return {1, coeff};
        ++pos_;
        skip_ws();
        const bool braced = peek() == '{';
        if (braced) {
            ++pos_;
            skip_ws();
        }
        const std::uint64_t exponent = parse_uint(1u << 20, "exponent");
        if (braced) {
            skip_ws();
            if (peek() != '}') throw ParseError(pos_, "expected '}'");
            ++pos_;
        }
        return {exponent, coeff};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

ProjPolyRecord parse_poly(std::string_view text) { return PolyScanner(text).parse(); }

ProjPolyRecord load_poly_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read polynomial file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_poly(buf.str());
}

// ---------------------------------------------------------------- ModPoly

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2 || p > kMaxModulus) throw std::invalid_argument("ModPoly: modulus out of range");
    for (auto& c : c_) c %= p_;
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    const Residue inv = Residue::from_unsigned(leading(), p_).inverse();
    std::vector<std::uint64_t> out(c_);
    for (auto& c : out) c = c * inv.value() % p_;
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(p_, {});
    std::vector<std::uint64_t> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = (i % p_) * c_[i] % p_;
    return ModPoly(p_, std::move(out));
}

std::uint64_t ModPoly::evaluate(std::uint64_t x) const {
    std::uint64_t acc = 0;
    x %= p_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
    return acc;
}

namespace {

void check_same(const ModPoly& a, const ModPoly& b, const char* what) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch(std::string(what) + ": polynomials over different fields");
}

} // namespace

ModPoly poly_sub(const ModPoly& a, const ModPoly& b) {
    check_same(a, b, "poly_sub");
    const std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i] = a.coeffs()[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) out[i] = (out[i] + p - b.coeffs()[i]) % p;
    return ModPoly(p, std::move(out));
}

ModPoly poly_mul(const ModPoly& a, const ModPoly& b) {
    check_same(a, b, "poly_mul");
    if (a.is_zero() || b.is_zero()) return ModPoly(a.modulus(), {});
    const std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            out[i + j] = (out[i + j] + a.coeffs()[i] * b.coeffs()[j]) % p;
        }
    }
    return ModPoly(p, std::move(out));
}

std::pair<ModPoly, ModPoly> poly_divmod(const ModPoly& a, const ModPoly& b) {
    check_same(a, b, "poly_divmod");
    if (b.is_zero()) throw ZeroElement("poly_divmod: division by the zero polynomial");
    const std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> rem(a.coeffs());
    if (a.degree() < b.degree()) return {ModPoly(p, {}), a};

    const auto db = static_cast<std::size_t>(b.degree());
    const std::uint64_t inv = Residue::from_unsigned(b.leading(), p).inverse().value();
    std::vector<std::uint64_t> quot(rem.size() - db, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
        const std::uint64_t q = rem[i] * inv % p;
        quot[i - db] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i - db + j] = (rem[i - db + j] + p - q * b.coeffs()[j] % p) % p;
        }
    }
    rem.resize(db);
    return {ModPoly(p, std::move(quot)), ModPoly(p, std::move(rem))};
}

ModPoly poly_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m) {
    return poly_divmod(poly_mul(a, b), m).second;
}

ModPoly poly_powmod(ModPoly base, std::uint64_t exp, const ModPoly& m) {
    ModPoly result = poly_divmod(ModPoly(m.modulus(), {1}), m).second;
    base = poly_divmod(base, m).second;
    while (exp) {
        if (exp & 1) result = poly_mulmod(result, base, m);
        base = poly_mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

ModPoly reduce_mod(const ProjPolyRecord& r, std::uint64_t p) {
    std::vector<std::uint64_t> out;
    out.reserve(r.coeffs.size());
    for (std::int64_t c : r.coeffs) out.push_back(Residue(c, p).value());
    return ModPoly(p, std::move(out));
}

ModPoly poly_gcd_mod(const ModPoly& f, const ModPoly& g) {
    check_same(f, g, "poly_gcd_mod");
    ModPoly a = f;
    ModPoly b = g;
    while (!b.is_zero()) {
        ModPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool is_squarefree_mod(const ModPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_squarefree_mod: zero polynomial");
    return poly_gcd_mod(f, f.derivative()).degree() == 0;
}

std::vector<std::uint64_t> ddf(const ModPoly& input) {
    if (!is_squarefree_mod(input)) throw NotSquarefree("ddf: input has a repeated factor");
    const std::uint64_t p = input.modulus();
    ModPoly f = input.monic();
    const ModPoly x = ModPoly::x(p);

    std::vector<std::uint64_t> degrees;
    ModPoly frob = poly_divmod(x, f).second; // x^(p^d) mod f
    for (std::uint64_t d = 1; 2 * d <= static_cast<std::uint64_t>(f.degree()); ++d) {
        frob = poly_powmod(frob, p, f);
        const ModPoly g = poly_gcd_mod(f, poly_sub(frob, x));
        if (g.degree() > 0) {
            degrees.insert(degrees.end(), static_cast<std::uint64_t>(g.degree()) / d, d);
            f = poly_divmod(f, g).first;
            frob = poly_divmod(frob, f).second;
        }
    }
    if (f.degree() > 0) degrees.push_back(static_cast<std::uint64_t>(f.degree()));

    std::sort(degrees.begin(), degrees.end());
    std::uint64_t total = 0;
    for (auto d : degrees) total += d;
    if (total != static_cast<std::uint64_t>(input.degree())) throw std::logic_error("ddf: degrees do not sum to deg f");
    return degrees;
}

// ---------------------------------------------------------------- verification

std::string_view to_string(OutcomeStatus s) {
    switch (s) {
    case OutcomeStatus::Match: return "match";
    case OutcomeStatus::AmbiguousPass: return "ambiguous-pass";
    case OutcomeStatus::SkippedRamified: return "skipped-ramified";
    case OutcomeStatus::SkippedEll: return "skipped-ell";
    case OutcomeStatus::Fail: return "FAIL";
    }
    return "?";
}

OutcomeStatus outcome_status_from_string(std::string_view s) {
    for (auto st : {OutcomeStatus::Match, OutcomeStatus::AmbiguousPass, OutcomeStatus::SkippedRamified,
                    OutcomeStatus::SkippedEll, OutcomeStatus::Fail}) {
        if (to_string(st) == s) return st;
    }
    throw std::invalid_argument("unknown outcome status '" + std::string(s) + "'");
}

VerificationReport verify_record(const ProjPolyRecord& r, std::uint64_t k, std::uint64_t ell, std::uint64_t pmax) {
    if (r.degree() != ell + 1 || !r.monic()) {
        throw std::invalid_argument("verify_record: expected a monic polynomial of degree " + std::to_string(ell + 1) +
                                    ", got degree " + std::to_string(r.degree()));
    }
    const QExpansion f = delta_k(k, ell, std::max<std::uint64_t>(pmax, 1));

    VerificationReport report;
    report.k = k;
    report.ell = ell;
    report.pmax = pmax;

    for (std::uint64_t p : primes_up_to(pmax)) {
        PrimeOutcome out;
        out.p = p;
        if (p == ell) {
            out.status = OutcomeStatus::SkippedEll;
            ++report.counts.skipped_ell;
            report.outcomes.push_back(std::move(out));
            continue;
        }
        const ModPoly reduced = reduce_mod(r, p);
        if (!is_squarefree_mod(reduced)) {
            out.status = OutcomeStatus::SkippedRamified;
            ++report.counts.skipped_ramified;
            report.outcomes.push_back(std::move(out));
            continue;
        }
        const FrobeniusClass fc = frobenius_class(charpol_data(k, ell, p, f.coeff(p)));
        out.predicted = predicted_degree_pattern(fc, ell);
        out.observed = ddf(reduced);
        const bool hit = std::find(out.predicted.begin(), out.predicted.end(), out.observed) != out.predicted.end();
        if (!hit) {
            out.status = OutcomeStatus::Fail;
            ++report.counts.fail;
            report.failures.push_back(p);
        } else if (fc.kind == FrobeniusKind::Ambiguous) {
            out.status = OutcomeStatus::AmbiguousPass;
            ++report.counts.ambiguous_pass;
        } else {
            out.status = OutcomeStatus::Match;
            ++report.counts.match;
        }
        report.outcomes.push_back(std::move(out));
    }
    return report;
}

} // namespace modgal
