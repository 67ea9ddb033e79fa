#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>

#include "elchi/scalar.hpp"

namespace elchi {

// Basis monomial Th(l) a1^m a2^n of the quantized function algebra,
// Th(l) = e^{-il theta}. Normal order is Th-part left, a1 middle, a2 right.
struct FMonomial {
    std::int32_t l = 0;
    std::uint32_t m = 0, n = 0;

    bool is_unit() const { return l == 0 && m == 0 && n == 0; }
    std::uint32_t adeg() const { return m + n; }

    friend auto operator<=>(const FMonomial&, const FMonomial&) = default;

    std::string str() const {
        if (is_unit()) return "1";
        std::string s;
        if (l != 0) s += "Th(" + std::to_string(l) + ")";
        if (m != 0) s += "a1" + (m > 1 ? "^" + std::to_string(m) : "");
        if (n != 0) s += "a2" + (n > 1 ? "^" + std::to_string(n) : "");
        return s;
    }
};

// Sparse element of the function algebra in canonical normal-ordered form.
class FElement {
  public:
    using Terms = std::map<FMonomial, ParamScalar>;

    FElement() = default;
    explicit FElement(const ParamScalar& c) {
        if (!c.is_zero()) terms_[FMonomial{}] = c;
    }

    static FElement one() { return FElement(ParamScalar(1)); }
    static FElement monomial(FMonomial mono, ParamScalar c = ParamScalar(1)) {
        FElement f;
        if (!c.is_zero()) f.terms_[mono] = std::move(c);
        return f;
    }
    static FElement th(std::int32_t l) { return monomial(FMonomial{l, 0, 0}); }
    static FElement a1() { return monomial(FMonomial{0, 1, 0}); }
    static FElement a2() { return monomial(FMonomial{0, 0, 1}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const FMonomial& mono, const ParamScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FElement& operator+=(const FElement& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    FElement& operator-=(const FElement& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    FElement operator-() const {
        FElement r;
        for (const auto& [mono, c] : terms_) r.terms_[mono] = -c;
        return r;
    }
    friend FElement operator+(FElement a, const FElement& b) { return a += b; }
    friend FElement operator-(FElement a, const FElement& b) { return a -= b; }

    friend FElement operator*(const ParamScalar& c, const FElement& f) {
        FElement r;
        for (const auto& [mono, fc] : f.terms_) r.add_term(mono, c * fc);
        return r;
    }

    friend bool operator==(const FElement& a, const FElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FElement& a, const FElement& b) { return !(a == b); }

    std::uint32_t adeg() const {
        std::uint32_t d = 0;
        for (const auto& [mono, c] : terms_)
            if (mono.adeg() > d) d = mono.adeg();
        return d;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [mono, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + c.str() + ")" + (mono.is_unit() ? "" : "*" + mono.str());
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const FElement& f) {
        return os << f.str();
    }

    friend FElement operator*(const FElement& a, const FElement& b);

  private:
    Terms terms_;
};

namespace detail {

// One rewrite step each: left-multiply a normal-ordered element by a
// generator, using the Def 2.1 commutators in closed form.
//
//   a1 Th(j) = Th(j) a1 - (jz/2) (Th(j-1) - 2 Th(j) + Th(j+1))
//   a2 Th(j) = Th(j) a2 - (ijz/2) (Th(j+1) - Th(j-1))
//   a2 a1^m  = a1^m (a2 - izm)
inline FElement left_mul_a1(const FElement& f) {
    FElement r;
    for (const auto& [mono, c] : f.terms()) {
        r.add_term(FMonomial{mono.l, mono.m + 1, mono.n}, c);
        if (mono.l != 0) {
            ParamScalar w = ParamScalar::rational(-mono.l, 2) * ParamScalar::z();
            r.add_term(FMonomial{mono.l - 1, mono.m, mono.n}, c * w);
            r.add_term(FMonomial{mono.l, mono.m, mono.n}, c * ParamScalar(-2) * w);
            r.add_term(FMonomial{mono.l + 1, mono.m, mono.n}, c * w);
        }
    }
    return r;
}

inline FElement left_mul_a2(const FElement& f) {
    const ParamScalar iz = ParamScalar::i() * ParamScalar::z();
    FElement r;
    for (const auto& [mono, c] : f.terms()) {
        r.add_term(FMonomial{mono.l, mono.m, mono.n + 1}, c);
        if (mono.m != 0)
            r.add_term(mono, c * ParamScalar(-(long)mono.m) * iz);
        if (mono.l != 0) {
            ParamScalar w = ParamScalar::rational(-mono.l, 2) * iz;
            r.add_term(FMonomial{mono.l + 1, mono.m, mono.n}, c * w);
            r.add_term(FMonomial{mono.l - 1, mono.m, mono.n}, c * (-w));
        }
    }
    return r;
}

inline FElement left_mul_th(std::int32_t l, const FElement& f) {
    FElement r;
    for (const auto& [mono, c] : f.terms())
        r.add_term(FMonomial{mono.l + l, mono.m, mono.n}, c);
    return r;
}

}  // namespace detail

// Product in the function algebra, rewritten to the canonical basis.
inline FElement operator*(const FElement& a, const FElement& b) {
    FElement result;
    for (const auto& [am, ac] : a.terms_) {
        FElement acc;
        for (const auto& [bm, bc] : b.terms_) acc.add_term(bm, ac * bc);
        for (std::uint32_t j = 0; j < am.n; ++j) acc = detail::left_mul_a2(acc);
        for (std::uint32_t j = 0; j < am.m; ++j) acc = detail::left_mul_a1(acc);
        if (am.l != 0) acc = detail::left_mul_th(am.l, acc);
        result += acc;
    }
    return result;
}

inline FElement pow(const FElement& f, unsigned e) {
    FElement r = FElement::one();
    for (unsigned j = 0; j < e; ++j) r = r * f;
    return r;
}

// cos(theta) and sin(theta) expanded in the Th basis
inline FElement f_cos_theta() {
    FElement r;
    r.add_term(FMonomial{1, 0, 0}, ParamScalar::rational(1, 2));
    r.add_term(FMonomial{-1, 0, 0}, ParamScalar::rational(1, 2));
    return r;
}
inline FElement f_sin_theta() {
    ParamScalar half_i = ParamScalar::rational(1, 2) * ParamScalar::i();
    FElement r;
    r.add_term(FMonomial{1, 0, 0}, half_i);
    r.add_term(FMonomial{-1, 0, 0}, -half_i);
    return r;
}

// Element of the tensor square, componentwise products in each slot.
class FTensorElement {
  public:
    using Key = std::pair<FMonomial, FMonomial>;
    using Terms = std::map<Key, ParamScalar>;

    FTensorElement() = default;

    static FTensorElement tensor(const FElement& a, const FElement& b) {
        FTensorElement t;
        for (const auto& [am, ac] : a.terms())
            for (const auto& [bm, bc] : b.terms()) t.add_term({am, bm}, ac * bc);
        return t;
    }
    static FTensorElement one() {
        return tensor(FElement::one(), FElement::one());
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& key, const ParamScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FTensorElement& operator+=(const FTensorElement& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, c);
        return *this;
    }
    friend FTensorElement operator+(FTensorElement a, const FTensorElement& b) {
        return a += b;
    }
    friend FTensorElement operator*(const ParamScalar& c, const FTensorElement& t) {
        FTensorElement r;
        for (const auto& [key, tc] : t.terms_) r.add_term(key, c * tc);
        return r;
    }

    friend FTensorElement operator*(const FTensorElement& a, const FTensorElement& b) {
        FTensorElement r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                FElement left = FElement::monomial(ka.first) * FElement::monomial(kb.first);
                FElement right = FElement::monomial(ka.second) * FElement::monomial(kb.second);
                ParamScalar c = ca * cb;
                for (const auto& [lm, lc] : left.terms())
                    for (const auto& [rm, rc] : right.terms())
                        r.add_term({lm, rm}, c * lc * rc);
            }
        return r;
    }

    friend bool operator==(const FTensorElement& a, const FTensorElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FTensorElement& a, const FTensorElement& b) {
        return !(a == b);
    }

    // multiply: m(x (x) y) = x y
    FElement multiply_slots() const {
        FElement r;
        for (const auto& [key, c] : terms_)
            r += c * (FElement::monomial(key.first) * FElement::monomial(key.second));
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + c.str() + ")*" + key.first.str() + "(x)" + key.second.str();
        }
        return s;
    }

  private:
    Terms terms_;
};

namespace detail {

inline std::uint64_t pack_mn(std::uint32_t m, std::uint32_t n) {
    return (std::uint64_t(m) << 32) | n;
}

// Delta on the generators, Def 2.1 expanded in the Th basis
inline const FTensorElement& coproduct_a1_gen() {
    static const FTensorElement t = [] {
        FTensorElement t;
        t += FTensorElement::tensor(f_cos_theta(), FElement::a1());
        t += ParamScalar(-1) * FTensorElement::tensor(f_sin_theta(), FElement::a2());
        t += FTensorElement::tensor(FElement::a1(), FElement::one());
        return t;
    }();
    return t;
}
inline const FTensorElement& coproduct_a2_gen() {
    static const FTensorElement t = [] {
        FTensorElement t;
        t += FTensorElement::tensor(f_sin_theta(), FElement::a1());
        t += FTensorElement::tensor(f_cos_theta(), FElement::a2());
        t += FTensorElement::tensor(FElement::a2(), FElement::one());
        return t;
    }();
    return t;
}

// cached Delta(a1^m a2^n); the Th(l) part is a group-like shift applied after
inline const FTensorElement& coproduct_apart(std::uint32_t m, std::uint32_t n) {
    thread_local std::unordered_map<std::uint64_t, FTensorElement> cache;
    std::uint64_t key = pack_mn(m, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    FTensorElement t;
    if (m == 0 && n == 0)
        t = FTensorElement::one();
    else if (m > 0)
        t = coproduct_a1_gen() * coproduct_apart(m - 1, n);
    else
        t = coproduct_a2_gen() * coproduct_apart(0, n - 1);
    return cache.emplace(key, std::move(t)).first->second;
}

}  // namespace detail

// Coproduct: algebra-map extension of the Def 2.1 generator coproducts.
inline FTensorElement coproduct(const FElement& f) {
    FTensorElement r;
    for (const auto& [mono, c] : f.terms()) {
        const FTensorElement& base = detail::coproduct_apart(mono.m, mono.n);
        for (const auto& [key, bc] : base.terms()) {
            FMonomial left = key.first, right = key.second;
            left.l += mono.l;
            right.l += mono.l;
            r.add_term({left, right}, c * bc);
        }
    }
    return r;
}

// Counit: 1 on Th(l), 0 on a1, a2, extended multiplicatively.
inline ParamScalar counit(const FElement& f) {
    ParamScalar r;
    for (const auto& [mono, c] : f.terms())
        if (mono.adeg() == 0) r += c;
    return r;
}

namespace detail {

inline const FElement& antipode_a1_gen() {
    static const FElement e = ParamScalar(-1) * (f_cos_theta() * FElement::a1()) -
                              f_sin_theta() * FElement::a2();
    return e;
}
inline const FElement& antipode_a2_gen() {
    static const FElement e =
        f_sin_theta() * FElement::a1() - f_cos_theta() * FElement::a2();
    return e;
}

inline const FElement& antipode_apart(std::uint32_t m, std::uint32_t n) {
    thread_local std::unordered_map<std::uint64_t, FElement> cache;
    std::uint64_t key = pack_mn(m, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    FElement e;
    if (m == 0 && n == 0)
        e = FElement::one();
    else if (n > 0)  // antihomomorphism: rightmost generator first
        e = antipode_a2_gen() * antipode_apart(m, n - 1);
    else
        e = antipode_a1_gen() * antipode_apart(m - 1, 0);
    return cache.emplace(key, std::move(e)).first->second;
}

}  // namespace detail

// Antipode: antihomomorphism with S(Th(l)) = Th(-l),
// S(a1) = -cos(theta) a1 - sin(theta) a2, S(a2) = sin(theta) a1 - cos(theta) a2.
inline FElement antipode(const FElement& f) {
    FElement r;
    for (const auto& [mono, c] : f.terms()) {
        FElement part = detail::antipode_apart(mono.m, mono.n) * FElement::th(-mono.l);
        r += c * part;
    }
    return r;
}

// Star: antilinear antihomomorphism fixing a1, a2 and sending Th(l) to Th(-l).
inline FElement star(const FElement& f) {
    FElement r;
    for (const auto& [mono, c] : f.terms()) {
        // (Th(l) a1^m a2^n)^* = a2^n a1^m Th(-l), then normal-order
        FElement word = FElement::th(-mono.l);
        for (std::uint32_t j = 0; j < mono.m; ++j) word = detail::left_mul_a1(word);
        for (std::uint32_t j = 0; j < mono.n; ++j) word = detail::left_mul_a2(word);
        r += c.conj() * word;
    }
    return r;
}

inline FTensorElement star_star(const FTensorElement& t) {
    FTensorElement r;
    for (const auto& [key, c] : t.terms()) {
        FElement left = star(FElement::monomial(key.first));
        FElement right = star(FElement::monomial(key.second));
        for (const auto& [lm, lc] : left.terms())
            for (const auto& [rm, rc] : right.terms())
                r.add_term({lm, rm}, c.conj() * lc * rc);
    }
    return r;
}

}  // namespace elchi
