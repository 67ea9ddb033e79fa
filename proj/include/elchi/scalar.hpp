#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "elchi/rational.hpp"

namespace elchi {

// Raised by the z -> 0 specialization when a term carries a negative z power.
struct PoleAtZeroError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent key of one scalar term: Laurent in z, polynomial in h+, h-, k.
struct ScalarKey {
    std::int32_t z = 0;
    std::uint32_t hp = 0, hm = 0, k = 0;

    friend auto operator<=>(const ScalarKey&, const ScalarKey&) = default;
};

// Element of the coefficient ring Q(i)[z, z^-1, h+, h-, k].
// Canonical sparse form: no stored coefficient is zero, terms ordered by key,
// so operator== is mathematical equality.
class ParamScalar {
  public:
    using Terms = std::map<ScalarKey, GaussianRational>;

    ParamScalar() = default;
    ParamScalar(long n) {
        if (n != 0) terms_[ScalarKey{}] = GaussianRational(n);
    }
    ParamScalar(const GaussianRational& c) {
        if (!c.is_zero()) terms_[ScalarKey{}] = c;
    }

    static ParamScalar term(ScalarKey key, GaussianRational c) {
        ParamScalar s;
        if (!c.is_zero()) s.terms_[key] = std::move(c);
        return s;
    }
    static ParamScalar rational(long num, long den) {
        return ParamScalar(GaussianRational::rational(num, den));
    }
    static ParamScalar i() { return ParamScalar(GaussianRational::imaginary_unit()); }
    static ParamScalar z(std::int32_t e = 1) {
        return term(ScalarKey{e, 0, 0, 0}, GaussianRational(1));
    }
    static ParamScalar hp(std::uint32_t e = 1) {
        return term(ScalarKey{0, e, 0, 0}, GaussianRational(1));
    }
    static ParamScalar hm(std::uint32_t e = 1) {
        return term(ScalarKey{0, 0, e, 0}, GaussianRational(1));
    }
    static ParamScalar k(std::uint32_t e = 1) {
        return term(ScalarKey{0, 0, 0, e}, GaussianRational(1));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ScalarKey& key, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ParamScalar& operator+=(const ParamScalar& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, c);
        return *this;
    }
    ParamScalar& operator-=(const ParamScalar& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, -c);
        return *this;
    }

    ParamScalar operator-() const {
        ParamScalar r;
        for (const auto& [key, c] : terms_) r.terms_[key] = -c;
        return r;
    }

    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) {
        a += b;
        return a;
    }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) {
        a -= b;
        return a;
    }

    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
        ParamScalar r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                ScalarKey key{ka.z + kb.z, ka.hp + kb.hp, ka.hm + kb.hm, ka.k + kb.k};
                r.add_term(key, ca * cb);
            }
        return r;
    }
    ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }

    friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ParamScalar& a, const ParamScalar& b) {
        return !(a == b);
    }

    // antilinear involution: i -> -i; z, h+, h-, k are treated as real
    ParamScalar conj() const {
        ParamScalar r;
        for (const auto& [key, c] : terms_) r.terms_[key] = c.conj();
        return r;
    }

    // z -> 0 part; throws PoleAtZeroError on any term with z_exp < 0
    ParamScalar eval_z0() const {
        ParamScalar r;
        for (const auto& [key, c] : terms_) {
            if (key.z < 0)
                throw PoleAtZeroError("pole at z=0 in scalar " + str());
            if (key.z == 0) r.terms_[key] = c;
        }
        return r;
    }

    ParamScalar pow(unsigned e) const {
        ParamScalar r(1);
        for (unsigned j = 0; j < e; ++j) r = r * *this;
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + c.str() + ")";
            auto app = [&s](const char* sym, long e) {
                if (e == 0) return;
                s += std::string("*") + sym;
                if (e != 1) s += "^" + std::to_string(e);
            };
            app("z", key.z);
            app("h+", key.hp);
            app("h-", key.hm);
            app("k", key.k);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const ParamScalar& s) {
        return os << s.str();
    }

  private:
    Terms terms_;
};

}  // namespace elchi
