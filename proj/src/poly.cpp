#include "pentacode/poly.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace pentacode {

namespace {

void trim(std::vector<Fe>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Poly Poly::from_coeffs(const PrimeField& F, const std::vector<std::int64_t>& coeffs) {
    std::vector<Fe> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = F.reduce(coeffs[i]);
    return from_residues(std::move(c));
}

Poly Poly::from_residues(std::vector<Fe> coeffs) {
    trim(coeffs);
    Poly f;
    f.c_ = std::move(coeffs);
    return f;
}

Poly Poly::constant(Fe c) { return from_residues({c}); }

Poly Poly::x_power(std::size_t k, Fe lead) {
    std::vector<Fe> c(k + 1, 0);
    c[k] = lead;
    return from_residues(std::move(c));
}

std::size_t Poly::degree() const {
    if (c_.empty()) throw ZeroPolyDegreeError();
    return c_.size() - 1;
}

Fe Poly::leading() const {
    if (c_.empty()) throw ZeroPolyDegreeError();
    return c_.back();
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
}

Poly add(const PrimeField& F, const Poly& f, const Poly& g) {
    std::vector<Fe> c(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(f.coeff(i), g.coeff(i));
    return Poly::from_residues(std::move(c));
}

Poly sub(const PrimeField& F, const Poly& f, const Poly& g) {
    std::vector<Fe> c(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(f.coeff(i), g.coeff(i));
    return Poly::from_residues(std::move(c));
}

Poly mul(const PrimeField& F, const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    std::vector<Fe> c(f.coeffs().size() + g.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(f.coeff(i), g.coeff(j)));
    }
    return Poly::from_residues(std::move(c));
}

Poly scale(const PrimeField& F, const Poly& f, Fe c) {
    if (c == 0) return Poly();
    std::vector<Fe> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(f.coeff(i), c);
    return Poly::from_residues(std::move(out));
}

std::pair<Poly, Poly> divmod(const PrimeField& F, const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivideByZeroError();
    if (f.is_zero() || f.coeffs().size() < g.coeffs().size()) return {Poly(), f};
    std::vector<Fe> rem = f.coeffs();
    std::vector<Fe> quot(f.coeffs().size() - g.coeffs().size() + 1, 0);
    const Fe lead_inv = F.inv(g.leading());
    for (std::size_t i = rem.size(); i-- >= g.coeffs().size();) {
        if (rem[i] == 0) continue;
        const Fe q = F.mul(rem[i], lead_inv);
        const std::size_t shift = i - (g.coeffs().size() - 1);
        quot[shift] = q;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            rem[shift + j] = F.sub(rem[shift + j], F.mul(q, g.coeff(j)));
    }
    return {Poly::from_residues(std::move(quot)), Poly::from_residues(std::move(rem))};
}

Poly mod(const PrimeField& F, const Poly& f, const Poly& g) { return divmod(F, f, g).second; }

bool divides(const PrimeField& F, const Poly& g, const Poly& f) {
    if (g.is_zero()) return f.is_zero();
    return mod(F, f, g).is_zero();
}

Poly monic(const PrimeField& F, const Poly& f) {
    if (f.is_zero() || f.leading() == 1) return f;
    return scale(F, f, F.inv(f.leading()));
}

Fe eval(const PrimeField& F, const Poly& f, Fe x) {
    Fe r = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) r = F.add(F.mul(r, x), f.coeff(i));
    return r;
}

Poly derivative(const PrimeField& F, const Poly& f) {
    if (f.is_zero() || f.degree() == 0) return Poly();
    std::vector<Fe> c(f.degree());
    for (std::size_t i = 1; i <= f.degree(); ++i) c[i - 1] = F.mul(f.coeff(i), i % F.p());
    return Poly::from_residues(std::move(c));
}

Poly powmod(const PrimeField& F, const Poly& base, std::uint64_t e, const Poly& m) {
    Poly result = mod(F, Poly::constant(1), m);
    Poly b = mod(F, base, m);
    while (e) {
        if (e & 1) result = mod(F, mul(F, result, b), m);
        e >>= 1;
        if (e) b = mod(F, mul(F, b, b), m);
    }
    return result;
}

Poly gcd(const PrimeField& F, const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw BothZeroError();
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

ExtGcd ext_gcd(const PrimeField& F, const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw BothZeroError();
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::constant(1), s1;
    Poly t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(F, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s = sub(F, s0, mul(F, q, s1));
        s0 = std::move(s1);
        s1 = std::move(s);
        Poly t = sub(F, t0, mul(F, q, t1));
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    const Fe lead_inv = F.inv(r0.leading());
    return {scale(F, r0, lead_inv), scale(F, s0, lead_inv), scale(F, t0, lead_inv)};
}

Poly reciprocal(const PrimeField& F, const Poly& g) {
    if (g.is_zero() || g.constant_term() == 0) throw ZeroConstantTermError();
    std::vector<Fe> c(g.coeffs().rbegin(), g.coeffs().rend());
    return monic(F, Poly::from_residues(std::move(c)));
}

Poly xn_minus_1(const PrimeField& F, std::size_t n) {
    std::vector<Fe> c(n + 1, 0);
    c[0] = F.p() - 1;
    c[n] = 1;
    return Poly::from_residues(std::move(c));
}

namespace {

// x^(p^j) mod f, computed by j successive Frobenius powers.
Poly frobenius_power(const PrimeField& F, std::size_t j, const Poly& f) {
    Poly h = mod(F, Poly::x_power(1), f);
    for (std::size_t i = 0; i < j; ++i) h = powmod(F, h, F.p(), f);
    return h;
}

Poly random_poly_below(const PrimeField& F, std::size_t deg_bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, F.p() - 1);
    std::vector<Fe> c(deg_bound);
    for (auto& x : c) x = dist(rng);
    return Poly::from_residues(std::move(c));
}

// distinct-degree factorization of a squarefree monic input
std::vector<std::pair<Poly, std::size_t>> ddf(const PrimeField& F, Poly f) {
    std::vector<std::pair<Poly, std::size_t>> out;
    Poly h = mod(F, Poly::x_power(1), f);
    const Poly x = Poly::x_power(1);
    for (std::size_t d = 1; !f.is_zero() && f.degree() >= 2 * d; ++d) {
        h = powmod(F, h, F.p(), f);
        Poly g = gcd(F, sub(F, h, x), f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = divmod(F, f, g).first;
            h = mod(F, h, f);
        }
    }
    if (!f.is_zero() && f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// Cantor-Zassenhaus equal-degree splitting (odd p): every irreducible factor
// of f has degree d.
void edf(const PrimeField& F, const Poly& f, std::size_t d, std::mt19937_64& rng,
         std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(monic(F, f));
        return;
    }
    for (;;) {
        Poly r = random_poly_below(F, f.degree(), rng);
        if (r.is_zero()) continue;
        // norm map keeps every exponent below p, so 64-bit powmod suffices:
        // s = r^(1 + p + ... + p^(d-1)), then s^((p-1)/2) = r^((p^d - 1)/2)
        Poly s = mod(F, r, f);
        Poly rp = s;
        for (std::size_t j = 1; j < d; ++j) {
            rp = powmod(F, rp, F.p(), f);
            s = mod(F, mul(F, s, rp), f);
        }
        Poly t = powmod(F, s, (F.p() - 1) / 2, f);
        Poly g = gcd(F, sub(F, t, Poly::constant(1)), f);
        if (!g.is_one() && g.degree() < f.degree()) {
            edf(F, g, d, rng, out);
            edf(F, divmod(F, f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

Factorization factor_xn_minus_1(const PrimeField& F, std::size_t n, std::uint64_t seed) {
    // peel off the p-power part: x^(m·p^e) - 1 = (x^m - 1)^(p^e)
    std::size_t m = n;
    unsigned mult = 1;
    while (m % F.p() == 0) {
        m /= F.p();
        mult *= static_cast<unsigned>(F.p());
    }

    // mix (p, n) into the stream so concurrent factorizations are independent
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * F.p()) ^ (0xc2b2ae3d27d4eb4full * n));

    Factorization fac;
    fac.n = n;
    Poly target = xn_minus_1(F, m);  // squarefree since gcd(m, p) = 1
    for (auto& [g, d] : ddf(F, target)) {
        std::vector<Poly> irreducibles;
        edf(F, g, d, rng, irreducibles);
        for (auto& h : irreducibles) fac.factors.emplace_back(std::move(h), mult);
    }
    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return fac;
}

std::vector<Poly> enumerate_divisors(const PrimeField& F, const Factorization& fac, std::uint64_t cap) {
    const unsigned __int128 saturated = ~static_cast<std::uint64_t>(0);
    unsigned __int128 count = 1;
    for (const auto& [f, m] : fac.factors) {
        count *= (m + 1);
        if (count > saturated) count = saturated;
    }
    if (count > cap) throw TooManyDivisorsError(static_cast<std::uint64_t>(count));
    std::vector<Poly> out{Poly::constant(1)};
    for (const auto& [f, m] : fac.factors) {
        const std::size_t base = out.size();
        Poly power = Poly::constant(1);
        for (unsigned e = 1; e <= m; ++e) {
            power = mul(F, power, f);
            for (std::size_t i = 0; i < base; ++i) out.push_back(mul(F, out[i], power));
        }
    }
    std::sort(out.begin(), out.end(), poly_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_irreducible(const PrimeField& F, const Poly& f) {
    const std::size_t d = f.degree();
    if (d == 0) return false;
    if (d == 1) return true;
    // x^(p^d) ≡ x (mod f), and no proper d/t shares roots with f
    const Poly x = Poly::x_power(1);
    if (frobenius_power(F, d, f) != mod(F, x, f)) return false;
    for (std::size_t t = 2; t <= d; ++t) {
        if (d % t != 0) continue;
        if (t == d || is_prime(t)) {
            Poly h = frobenius_power(F, d / t, f);
            if (!gcd(F, sub(F, h, x), f).is_one()) return false;
        }
    }
    return true;
}

std::string format_poly(const Poly& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const Fe c = f.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += var;
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

std::string coeff_list(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.coeff(i));
    }
    return out;
}

namespace {

Poly parse_coeff_list(const PrimeField& F, const std::string& text) {
    std::vector<std::int64_t> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t begin = tok.find_first_not_of(" \t");
        if (begin == std::string::npos) throw ParseError("empty coefficient in \"" + text + "\"");
        std::size_t end = tok.find_last_not_of(" \t");
        tok = tok.substr(begin, end - begin + 1);
        try {
            std::size_t used = 0;
            coeffs.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw ParseError("bad coefficient \"" + tok + "\"");
        } catch (const std::logic_error&) {
            throw ParseError("bad coefficient \"" + tok + "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Poly::from_coeffs(F, coeffs);
}

// recursive-descent parser for expressions like "(x+4)^2(x^2+3)" or "x^2+4x+16"
class ExprParser {
   public:
    ExprParser(const PrimeField& F, const std::string& s) : F_(F), s_(s) {}

    Poly parse() {
        Poly r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input at \"" + s_.substr(pos_) + "\"");
        return r;
    }

   private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        Poly acc;
        char sign = '+';
        if (peek() == '+' || peek() == '-') sign = s_[pos_++];
        acc = term();
        if (sign == '-') acc = sub(F_, Poly(), acc);
        while (peek() == '+' || peek() == '-') {
            sign = s_[pos_++];
            Poly t = term();
            acc = sign == '+' ? add(F_, acc, t) : sub(F_, acc, t);
        }
        return acc;
    }

    // juxtaposition and '*' both multiply: "(x+1)(x+2)", "4x", "2*x^3"
    Poly term() {
        Poly acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = mul(F_, acc, factor());
            } else if (c == '(' || c == 'x' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = mul(F_, acc, factor());
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        if (peek() == '^') {
            ++pos_;
            std::uint64_t e = integer();
            Poly r = Poly::constant(1);
            for (std::uint64_t i = 0; i < e; ++i) r = mul(F_, r, base);
            return r;
        }
        return base;
    }

    Poly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') throw ParseError("missing ')'");
            ++pos_;
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return Poly::x_power(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(F_.reduce(integer()));
        throw ParseError("unexpected character '" + std::string(1, c) + "'");
    }

    std::uint64_t integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected a number");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return v;
    }

    const PrimeField& F_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const PrimeField& F, const std::string& text) {
    if (text.rfind("coeffs:", 0) == 0) return parse_coeff_list(F, text.substr(7));
    if (text.rfind("expr:", 0) == 0) return ExprParser(F, text.substr(5)).parse();
    if (text.find(',') != std::string::npos) return parse_coeff_list(F, text);
    std::string copy = text;
    return ExprParser(F, copy).parse();
}

}  // namespace pentacode
