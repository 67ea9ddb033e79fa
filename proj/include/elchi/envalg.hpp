#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "elchi/scalar.hpp"

namespace elchi {

// PBW monomial P1^a P2^c E^b J^d with E = e^{zP2/2}. P1, P2 and the E powers
// commute among themselves; only J needs rewriting.
struct UMonomial {
    std::uint32_t a = 0, c = 0;
    std::int32_t b = 0;
    std::uint32_t d = 0;

    bool is_unit() const { return a == 0 && c == 0 && b == 0 && d == 0; }

    friend auto operator<=>(const UMonomial&, const UMonomial&) = default;

    std::string str() const {
        if (is_unit()) return "1";
        std::string s;
        auto app = [&s](const char* sym, long e) {
            if (e == 0) return;
            s += sym;
            if (e != 1) s += "^" + std::to_string(e);
        };
        app("P1", a);
        app("P2", c);
        app("E", b);
        app("J", d);
        return s;
    }
};

// Sparse element of the enveloping algebra in PBW normal form.
class UElement {
  public:
    using Terms = std::map<UMonomial, ParamScalar>;

    UElement() = default;
    explicit UElement(const ParamScalar& c) {
        if (!c.is_zero()) terms_[UMonomial{}] = c;
    }

    static UElement one() { return UElement(ParamScalar(1)); }
    static UElement monomial(UMonomial mono, ParamScalar c = ParamScalar(1)) {
        UElement u;
        if (!c.is_zero()) u.terms_[mono] = std::move(c);
        return u;
    }
    static UElement p1() { return monomial(UMonomial{1, 0, 0, 0}); }
    static UElement p2() { return monomial(UMonomial{0, 1, 0, 0}); }
    static UElement e(std::int32_t b) { return monomial(UMonomial{0, 0, b, 0}); }
    static UElement j() { return monomial(UMonomial{0, 0, 0, 1}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const UMonomial& mono, const ParamScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    UElement& operator+=(const UElement& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    UElement& operator-=(const UElement& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    UElement operator-() const {
        UElement r;
        for (const auto& [mono, c] : terms_) r.terms_[mono] = -c;
        return r;
    }
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }

    friend UElement operator*(const ParamScalar& c, const UElement& u) {
        UElement r;
        for (const auto& [mono, uc] : u.terms_) r.add_term(mono, c * uc);
        return r;
    }

    friend bool operator==(const UElement& a, const UElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }

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
    friend std::ostream& operator<<(std::ostream& os, const UElement& u) {
        return os << u.str();
    }

    friend UElement operator*(const UElement& a, const UElement& b);

  private:
    Terms terms_;
};

namespace detail {

// J f(P2) = f(P2) J - i P1 f'(P2) applied per PBW atom:
//   [J, P1^a] = (ia/2z) P1^{a-1} (E^2 - E^{-2})
//   [J, P2^c] = -ic P1 P2^{c-1}
//   [J, E^b]  = -(ibz/2) P1 E^b
inline UElement left_mul_j(const UElement& u) {
    const ParamScalar i = ParamScalar::i();
    UElement r;
    for (const auto& [mono, c] : u.terms()) {
        r.add_term(UMonomial{mono.a, mono.c, mono.b, mono.d + 1}, c);
        if (mono.a != 0) {
            ParamScalar w = c * ParamScalar((long)mono.a) *
                            ParamScalar::rational(1, 2) * i * ParamScalar::z(-1);
            r.add_term(UMonomial{mono.a - 1, mono.c, mono.b + 2, mono.d}, w);
            r.add_term(UMonomial{mono.a - 1, mono.c, mono.b - 2, mono.d}, -w);
        }
        if (mono.c != 0)
            r.add_term(UMonomial{mono.a + 1, mono.c - 1, mono.b, mono.d},
                       c * ParamScalar(-(long)mono.c) * i);
        if (mono.b != 0)
            r.add_term(UMonomial{mono.a + 1, mono.c, mono.b, mono.d},
                       c * ParamScalar::rational(-mono.b, 2) * i * ParamScalar::z());
    }
    return r;
}

}  // namespace detail

// Product in the enveloping algebra, rewritten to PBW normal form.
inline UElement operator*(const UElement& a, const UElement& b) {
    UElement result;
    for (const auto& [am, ac] : a.terms_) {
        UElement acc;
        for (const auto& [bm, bc] : b.terms_) acc.add_term(bm, ac * bc);
        for (std::uint32_t j = 0; j < am.d; ++j) acc = detail::left_mul_j(acc);
        if (am.a != 0 || am.c != 0 || am.b != 0) {
            UElement shifted;
            for (const auto& [mono, c] : acc.terms())
                shifted.add_term(UMonomial{mono.a + am.a, mono.c + am.c,
                                           mono.b + am.b, mono.d},
                                 c);
            acc = std::move(shifted);
        }
        result += acc;
    }
    return result;
}

inline UElement pow(const UElement& u, unsigned e) {
    UElement r = UElement::one();
    for (unsigned j = 0; j < e; ++j) r = r * u;
    return r;
}

inline UElement commutator(const UElement& a, const UElement& b) {
    return a * b - b * a;
}

// Tensor square of U, componentwise PBW products.
class UTensorElement {
  public:
    using Key = std::pair<UMonomial, UMonomial>;
    using Terms = std::map<Key, ParamScalar>;

    UTensorElement() = default;

    static UTensorElement tensor(const UElement& a, const UElement& b) {
        UTensorElement t;
        for (const auto& [am, ac] : a.terms())
            for (const auto& [bm, bc] : b.terms()) t.add_term({am, bm}, ac * bc);
        return t;
    }
    static UTensorElement one() {
        return tensor(UElement::one(), UElement::one());
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

    UTensorElement& operator+=(const UTensorElement& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, c);
        return *this;
    }
    friend UTensorElement operator+(UTensorElement a, const UTensorElement& b) {
        return a += b;
    }
    friend UTensorElement operator*(const ParamScalar& c, const UTensorElement& t) {
        UTensorElement r;
        for (const auto& [key, tc] : t.terms_) r.add_term(key, c * tc);
        return r;
    }

    friend UTensorElement operator*(const UTensorElement& a, const UTensorElement& b) {
        UTensorElement r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                UElement left = UElement::monomial(ka.first) * UElement::monomial(kb.first);
                UElement right = UElement::monomial(ka.second) * UElement::monomial(kb.second);
                ParamScalar c = ca * cb;
                for (const auto& [lm, lc] : left.terms())
                    for (const auto& [rm, rc] : right.terms())
                        r.add_term({lm, rm}, c * lc * rc);
            }
        return r;
    }

    friend bool operator==(const UTensorElement& a, const UTensorElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const UTensorElement& a, const UTensorElement& b) {
        return !(a == b);
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

inline UTensorElement coproduct_p1_gen() {
    return UTensorElement::tensor(UElement::e(-1), UElement::p1()) +
           UTensorElement::tensor(UElement::p1(), UElement::e(1));
}
inline UTensorElement coproduct_p2_gen() {
    return UTensorElement::tensor(UElement::p2(), UElement::one()) +
           UTensorElement::tensor(UElement::one(), UElement::p2());
}
inline UTensorElement coproduct_j_gen() {
    return UTensorElement::tensor(UElement::e(-1), UElement::j()) +
           UTensorElement::tensor(UElement::j(), UElement::e(1));
}

}  // namespace detail

// Coproduct: Delta P1 = E^-1 (x) P1 + P1 (x) E, Delta P2 primitive,
// Delta J = E^-1 (x) J + J (x) E, E^b group-like.
inline UTensorElement coproduct(const UElement& u) {
    UTensorElement r;
    for (const auto& [mono, c] : u.terms()) {
        UTensorElement t = UTensorElement::tensor(UElement::e(mono.b), UElement::e(mono.b));
        for (std::uint32_t j = 0; j < mono.d; ++j) t = t * detail::coproduct_j_gen();
        for (std::uint32_t j = 0; j < mono.c; ++j) t = detail::coproduct_p2_gen() * t;
        for (std::uint32_t j = 0; j < mono.a; ++j) t = detail::coproduct_p1_gen() * t;
        r += c * t;
    }
    return r;
}

// Counit vanishes on P1, P2, J and is 1 on E^b.
inline ParamScalar counit(const UElement& u) {
    ParamScalar r;
    for (const auto& [mono, c] : u.terms())
        if (mono.a == 0 && mono.c == 0 && mono.d == 0) r += c;
    return r;
}

namespace detail {

inline const UElement& antipode_j_gen() {
    static const UElement e =
        -UElement::j() +
        ParamScalar::rational(-1, 2) * ParamScalar::i() * ParamScalar::z() * UElement::p1();
    return e;
}

}  // namespace detail

// Antipode: S(P1) = -P1, S(P2) = -P2, S(J) = -J - izP1/2, S(E^b) = E^-b.
inline UElement antipode(const UElement& u) {
    UElement r;
    for (const auto& [mono, c] : u.terms()) {
        UElement part = UElement::one();
        // antihomomorphism: reverse the PBW word P1^a P2^c E^b J^d
        for (std::uint32_t j = 0; j < mono.d; ++j)
            part = part * detail::antipode_j_gen();
        UMonomial block{mono.a, mono.c, -mono.b, 0};
        ParamScalar sign((mono.a + mono.c) % 2 == 0 ? 1 : -1);
        part = UElement::monomial(block, sign) * part;
        r += c * part;
    }
    return r;
}

// Star: antilinear antihomomorphism fixing P1, P2, J, E^b.
inline UElement star(const UElement& u) {
    UElement r;
    for (const auto& [mono, c] : u.terms()) {
        // (P1^a P2^c E^b J^d)^* = J^d E^b P2^c P1^a, then normal-order
        UElement acc = UElement::monomial(UMonomial{mono.a, mono.c, mono.b, 0});
        for (std::uint32_t j = 0; j < mono.d; ++j) acc = detail::left_mul_j(acc);
        r += c.conj() * acc;
    }
    return r;
}

inline UTensorElement star_star(const UTensorElement& t) {
    UTensorElement r;
    for (const auto& [key, c] : t.terms()) {
        UElement left = star(UElement::monomial(key.first));
        UElement right = star(UElement::monomial(key.second));
        for (const auto& [lm, lc] : left.terms())
            for (const auto& [rm, rc] : right.terms())
                r.add_term({lm, rm}, c.conj() * lc * rc);
    }
    return r;
}

// The distinguished elements of the theory, in PBW coordinates.
enum class Named {
    Nu1,
    Nu2,
    Tau,
    X,
    Hplus,
    Hminus,
    Uplus,
    Uminus,
    HHplus,
    HHminus,
    Jscript,
    Casimir,
    CasimirTilde,
};

inline UElement named_element(Named n) {
    const ParamScalar i = ParamScalar::i();
    const ParamScalar z = ParamScalar::z();
    const ParamScalar zinv = ParamScalar::z(-1);
    const ParamScalar half = ParamScalar::rational(1, 2);
    const ParamScalar quarter = ParamScalar::rational(1, 4);
    switch (n) {
        case Named::Nu1:  // -i e^{-zP2/2} P1
            return (-i) * UElement::monomial(UMonomial{1, 0, -1, 0});
        case Named::Nu2:  // -i P2
            return (-i) * UElement::p2();
        case Named::Tau:  // -i e^{-zP2/2} (J - i(z/4) P1)
            return (-i) * (UElement::e(-1) * named_element(Named::X));
        case Named::X:  // J - i(z/4) P1
            return UElement::j() - i * quarter * z * UElement::p1();
        case Named::Hplus:  // (1/2z)(e^{zP2} - 1) - (i/2) e^{zP2/2} P1
            return half * zinv * (UElement::e(2) - UElement::one()) -
                   half * i * UElement::monomial(UMonomial{1, 0, 1, 0});
        case Named::Hminus:  // (1/2z)(1 - e^{-zP2}) + (i/2) e^{-zP2/2} P1
            return half * zinv * (UElement::one() - UElement::e(-2)) +
                   half * i * UElement::monomial(UMonomial{1, 0, -1, 0});
        case Named::Uplus:  // (1/2)(1 + e^{-zP2} - iz e^{-zP2/2} P1)
            return half * (UElement::one() + UElement::e(-2)) -
                   half * i * z * UElement::monomial(UMonomial{1, 0, -1, 0});
        case Named::Uminus:  // (1/2)(1 + e^{zP2} + iz e^{zP2/2} P1)
            return half * (UElement::one() + UElement::e(2)) +
                   half * i * z * UElement::monomial(UMonomial{1, 0, 1, 0});
        case Named::HHplus:
            return named_element(Named::Uplus) * named_element(Named::Hplus);
        case Named::HHminus:
            return named_element(Named::Uminus) * named_element(Named::Hminus);
        case Named::Jscript:  // e^{-zP2/2} (J - i(z/4) P1)
            return UElement::e(-1) * named_element(Named::X);
        case Named::Casimir:  // (4/z^2) sinh^2((z/2)P2) + P1^2
            return zinv * zinv * (UElement::e(2) - ParamScalar(2) * UElement::one() +
                                  UElement::e(-2)) +
                   UElement::monomial(UMonomial{2, 0, 0, 0});
        case Named::CasimirTilde:
            return named_element(Named::HHplus) * named_element(Named::HHminus);
    }
    return UElement();
}

}  // namespace elchi
