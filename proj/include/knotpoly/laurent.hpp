#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "knotpoly/errors.hpp"

namespace knotpoly {

using BigInt = mpz_class;

/// Sparse Laurent polynomial in one variable a, exact integer coefficients.
/// Canonical form: no zero coefficient is ever stored; the zero polynomial
/// is the empty term map. Terms are kept ordered by exponent.
class LaurentPolyA {
public:
    using Terms = std::map<std::int64_t, BigInt>;

    LaurentPolyA() = default;

    static LaurentPolyA zero() { return {}; }
    static LaurentPolyA one() { return monomial(0, 1); }

    static LaurentPolyA monomial(std::int64_t exp, BigInt coeff) {
        LaurentPolyA p;
        if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
        return p;
    }

    /// a + a^-1, the loop value that multiplies in at every split circle.
    static LaurentPolyA a_plus_ainv() {
        LaurentPolyA p;
        p.terms_.emplace(1, 1);
        p.terms_.emplace(-1, 1);
        return p;
    }

    /// (-a^-2)^k, defined for negative k as well.
    static LaurentPolyA neg_a2_pow(std::int64_t k) {
        return monomial(-2 * k, (k % 2 == 0) ? 1 : -1);
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    const BigInt& coeff(std::int64_t exp) const {
        static const BigInt kZero = 0;
        auto it = terms_.find(exp);
        return it == terms_.end() ? kZero : it->second;
    }

    void add_term(std::int64_t exp, const BigInt& coeff) {
        if (coeff == 0) return;
        auto [it, fresh] = terms_.emplace(exp, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPolyA& operator+=(const LaurentPolyA& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    LaurentPolyA& operator-=(const LaurentPolyA& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPolyA operator+(LaurentPolyA lhs, const LaurentPolyA& rhs) { return lhs += rhs; }
    friend LaurentPolyA operator-(LaurentPolyA lhs, const LaurentPolyA& rhs) { return lhs -= rhs; }

    friend LaurentPolyA operator-(const LaurentPolyA& p) {
        LaurentPolyA r;
        for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPolyA operator*(const LaurentPolyA& lhs, const LaurentPolyA& rhs) {
        LaurentPolyA r;
        for (const auto& [e1, c1] : lhs.terms_)
            for (const auto& [e2, c2] : rhs.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPolyA& operator*=(const LaurentPolyA& rhs) { return *this = *this * rhs; }

    /// Multiply by coeff * a^exp in place.
    LaurentPolyA& scale_monomial(std::int64_t exp, const BigInt& coeff) {
        if (coeff == 0) {
            terms_.clear();
            return *this;
        }
        Terms scaled;
        for (auto& [e, c] : terms_) scaled.emplace(e + exp, c * coeff);
        terms_ = std::move(scaled);
        return *this;
    }

    /// Substitute a -> a^-1.
    LaurentPolyA mirror_a() const {
        LaurentPolyA r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    LaurentPolyA pow(unsigned k) const {
        LaurentPolyA r = one();
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    bool operator==(const LaurentPolyA& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPolyA& rhs) const { return !(*this == rhs); }

    /// Human-readable form, ascending exponents: "-2*a^-4 + a^2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += (c < 0) ? " - " : " + ";
            else if (c < 0) out += "-";
            BigInt mag = abs(c);
            if (mag != 1 || e == 0) out += mag.get_str();
            if (e != 0) {
                if (mag != 1) out += "*";
                out += "a";
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    Terms terms_;
};

/// Sparse Laurent polynomial in (a, z); z exponents may be negative.
/// Same canonical-form contract as LaurentPolyA.
class PolyAZ {
public:
    using Key = std::pair<std::int64_t, std::int64_t>;  // (a exponent, z exponent)
    using Terms = std::map<Key, BigInt>;

    PolyAZ() = default;

    static PolyAZ zero() { return {}; }
    static PolyAZ one() { return monomial(0, 0, 1); }

    static PolyAZ monomial(std::int64_t aexp, std::int64_t zexp, BigInt coeff) {
        PolyAZ p;
        if (coeff != 0) p.terms_.emplace(Key{aexp, zexp}, std::move(coeff));
        return p;
    }

    static PolyAZ from_a(const LaurentPolyA& p, std::int64_t zexp = 0) {
        PolyAZ r;
        for (const auto& [e, c] : p.terms()) r.terms_.emplace(Key{e, zexp}, c);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(std::int64_t aexp, std::int64_t zexp, const BigInt& coeff) {
        if (coeff == 0) return;
        auto [it, fresh] = terms_.emplace(Key{aexp, zexp}, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    PolyAZ& operator+=(const PolyAZ& rhs) {
        for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    PolyAZ& operator-=(const PolyAZ& rhs) {
        for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend PolyAZ operator+(PolyAZ lhs, const PolyAZ& rhs) { return lhs += rhs; }
    friend PolyAZ operator-(PolyAZ lhs, const PolyAZ& rhs) { return lhs -= rhs; }
    friend PolyAZ operator-(const PolyAZ& p) {
        PolyAZ r;
        for (const auto& [k, c] : p.terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend PolyAZ operator*(const PolyAZ& lhs, const PolyAZ& rhs) {
        PolyAZ r;
        for (const auto& [k1, c1] : lhs.terms_)
            for (const auto& [k2, c2] : rhs.terms_)
                r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return r;
    }
    PolyAZ& operator*=(const PolyAZ& rhs) { return *this = *this * rhs; }

    /// Multiply by coeff * a^aexp * z^zexp in place.
    PolyAZ& scale_monomial(std::int64_t aexp, std::int64_t zexp, const BigInt& coeff) {
        if (coeff == 0) {
            terms_.clear();
            return *this;
        }
        Terms scaled;
        for (auto& [k, c] : terms_) scaled.emplace(Key{k.first + aexp, k.second + zexp}, c * coeff);
        terms_ = std::move(scaled);
        return *this;
    }

    PolyAZ pow(unsigned k) const {
        PolyAZ r = one();
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    std::int64_t max_z_degree() const {
        std::int64_t d = 0;
        bool any = false;
        for (const auto& [k, c] : terms_) {
            if (!any || k.second > d) d = k.second;
            any = true;
        }
        return any ? d : 0;
    }

    /// Coefficient of z^zexp, as a polynomial in a.
    LaurentPolyA z_coefficient(std::int64_t zexp) const {
        LaurentPolyA r;
        for (const auto& [k, c] : terms_)
            if (k.second == zexp) r.add_term(k.first, c);
        return r;
    }

    bool operator==(const PolyAZ& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const PolyAZ& rhs) const { return !(*this == rhs); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += (c < 0) ? " - " : " + ";
            else if (c < 0) out += "-";
            BigInt mag = abs(c);
            bool unit = (mag == 1) && (k.first != 0 || k.second != 0);
            if (!unit) out += mag.get_str();
            bool star = !unit;
            auto var = [&](const char* name, std::int64_t e) {
                if (e == 0) return;
                if (star) out += "*";
                out += name;
                if (e != 1) out += "^" + std::to_string(e);
                star = true;
            };
            var("a", k.first);
            var("z", k.second);
        }
        return out;
    }

private:
    Terms terms_;
};

enum class InvariantMode { Homflypt, Kauffman };

/// Truncated coefficient list of a normalized invariant series: entry r is the
/// coefficient of z^(2r) (homflypt) or z^r (kauffman) in z^(com-1) * polynomial.
struct CoeffVector {
    std::vector<LaurentPolyA> entries;  // size R+1
    InvariantMode mode = InvariantMode::Homflypt;
    int com = 1;

    int order() const { return static_cast<int>(entries.size()) - 1; }
    const LaurentPolyA& at(int r) const {
        if (r < 0 || r > order()) throw usage_error("coefficient index out of range");
        return entries[static_cast<size_t>(r)];
    }

    bool operator==(const CoeffVector& rhs) const {
        return entries == rhs.entries && mode == rhs.mode && com == rhs.com;
    }
};

/// Slice the normalized series z^(com-1) * p into its first R+1 coefficients.
/// Rejects polynomials that are not of invariant shape for the given mode:
/// any negative z power after normalization, or an odd z power in homflypt
/// mode, signals a wrong com or a broken evaluator upstream.
inline CoeffVector extract_coefficients(const PolyAZ& p, int com, InvariantMode mode, int R) {
    if (com < 1) throw usage_error("component count must be >= 1");
    if (R < 0) throw usage_error("truncation order must be >= 0");
    CoeffVector out;
    out.mode = mode;
    out.com = com;
    out.entries.assign(static_cast<size_t>(R) + 1, LaurentPolyA::zero());
    const std::int64_t shift = com - 1;
    for (const auto& [key, c] : p.terms()) {
        const std::int64_t zp = key.second + shift;
        if (zp < 0)
            throw invariant_error("negative z power after z^(com-1) normalization: z^" +
                                  std::to_string(zp));
        std::int64_t r;
        if (mode == InvariantMode::Homflypt) {
            if (zp % 2 != 0)
                throw invariant_error("odd z power in normalized homflypt series: z^" +
                                      std::to_string(zp));
            r = zp / 2;
        } else {
            r = zp;
        }
        if (r <= R) out.entries[static_cast<size_t>(r)].add_term(key.first, c);
    }
    return out;
}

/// Inverse of extract_coefficients on its own output (dropping truncated tail):
/// sum coeff_r * z^(step*r) scaled back by z^(1-com).
inline PolyAZ reassemble_coefficients(const CoeffVector& v) {
    PolyAZ p;
    const std::int64_t step = (v.mode == InvariantMode::Homflypt) ? 2 : 1;
    for (size_t r = 0; r < v.entries.size(); ++r) {
        const std::int64_t zexp = step * static_cast<std::int64_t>(r) - (v.com - 1);
        for (const auto& [e, c] : v.entries[r].terms()) p.add_term(e, zexp, c);
    }
    return p;
}

}  // namespace knotpoly
