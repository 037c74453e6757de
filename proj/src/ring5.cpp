#include "pentacode/ring5.hpp"

#include <stdexcept>

namespace pentacode {

RingContext::RingContext(const PrimeField& field) : field_(field) {
    const Fe a = field_.sqrt_minus_one();
    roots_ = {0, 1, field_.p() - 1, field_.p() - a, a};

    // v⁵ − v = ∏ (v − rootᵢ); η_i = β_i·f̂_i where α_i f_i + β_i f̂_i = 1
    const Poly modulus = sub(field_, Poly::x_power(5), Poly::x_power(1));
    for (std::size_t i = 0; i < 5; ++i) {
        const Poly f_i = Poly::from_coeffs(field_, {-static_cast<std::int64_t>(roots_[i]), 1});
        const Poly fhat = divmod(field_, modulus, f_i).first;
        const ExtGcd e = ext_gcd(field_, f_i, fhat);
        if (!e.d.is_one()) throw std::logic_error("idempotent construction: gcd(f_i, fhat_i) != 1");
        etas_[i] = mod(field_, pentacode::mul(field_, e.b, fhat), modulus);

        // cross-check against the Lagrange normalization fhat / fhat(root_i)
        const Poly lagrange = scale(field_, fhat, field_.inv(eval(field_, fhat, roots_[i])));
        if (etas_[i] != lagrange) throw std::logic_error("idempotent construction: routes disagree");
    }

    const std::int64_t first_row[5] = {6, 2, 3, -6, 6};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) gray_[i][j] = field_.reduce(first_row[(j + 5 - i) % 5]);

    // rows are mutually orthogonal with common norm 6²+6²+(−6)²+3²+2² = 121
    gray_norm_ = 0;
    for (std::size_t j = 0; j < 5; ++j) gray_norm_ = field_.add(gray_norm_, field_.mul(gray_[0][j], gray_[0][j]));
    if (gray_norm_ != field_.reduce(121)) throw std::logic_error("gray matrix norm is not 121 mod p");
    if (gray_norm_ == 0) throw std::logic_error("gray matrix is singular: 121 ≡ 0 mod p");
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t k = i + 1; k < 5; ++k) {
            Fe dot = 0;
            for (std::size_t j = 0; j < 5; ++j) dot = field_.add(dot, field_.mul(gray_[i][j], gray_[k][j]));
            if (dot != 0) throw std::logic_error("gray matrix rows are not orthogonal");
        }
    }
}

Poly RingContext::to_v_basis(const RingElement& e) const {
    Poly acc;
    for (std::size_t i = 0; i < 5; ++i)
        if (e.crt[i]) acc = pentacode::add(field_, acc, scale(field_, etas_[i], e.crt[i]));
    return acc;
}

RingElement RingContext::from_v_basis(const Poly& f) const {
    const Poly modulus = sub(field_, Poly::x_power(5), Poly::x_power(1));
    const Poly r = mod(field_, f, modulus);
    RingElement e;
    for (std::size_t i = 0; i < 5; ++i) e.crt[i] = eval(field_, r, roots_[i]);
    return e;
}

RingElement RingContext::add(const RingElement& x, const RingElement& y) const {
    RingElement r;
    for (std::size_t i = 0; i < 5; ++i) r.crt[i] = field_.add(x.crt[i], y.crt[i]);
    return r;
}

RingElement RingContext::mul(const RingElement& x, const RingElement& y) const {
    RingElement r;
    for (std::size_t i = 0; i < 5; ++i) r.crt[i] = field_.mul(x.crt[i], y.crt[i]);
    return r;
}

RingElement RingContext::neg(const RingElement& x) const {
    RingElement r;
    for (std::size_t i = 0; i < 5; ++i) r.crt[i] = field_.neg(x.crt[i]);
    return r;
}

std::array<Fe, 5> RingContext::gray_phi(const RingElement& e) const {
    std::array<Fe, 5> out{};
    for (std::size_t j = 0; j < 5; ++j) {
        Fe acc = 0;
        for (std::size_t i = 0; i < 5; ++i) acc = field_.add(acc, field_.mul(e.crt[i], gray_[i][j]));
        out[j] = acc;
    }
    return out;
}

std::vector<Fe> RingContext::gray_big_phi(const RingVector& v) const {
    std::vector<Fe> out;
    out.reserve(5 * v.size());
    for (const RingElement& e : v) {
        const auto img = gray_phi(e);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

unsigned RingContext::lee_weight(const RingElement& e) const {
    unsigned w = 0;
    for (Fe x : gray_phi(e))
        if (x) ++w;
    return w;
}

std::uint64_t RingContext::lee_weight(const RingVector& v) const {
    std::uint64_t w = 0;
    for (const RingElement& e : v) w += lee_weight(e);
    return w;
}

std::uint64_t RingContext::lee_distance(const RingVector& x, const RingVector& y) const {
    if (x.size() != y.size()) throw LengthMismatchError();
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < x.size(); ++i) w += lee_weight(add(x[i], neg(y[i])));
    return w;
}

}  // namespace pentacode
