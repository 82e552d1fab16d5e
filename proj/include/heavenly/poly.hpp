#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "heavenly/rational.hpp"

namespace heavenly {

/// A monomial as the sorted multiset of its variable indices,
/// e.g. {0,0,5} = x0^2 * x5. Empty = the constant monomial.
using Monomial = std::vector<std::uint16_t>;

/// Multivariate polynomial over exact complex rationals, canonical by the
/// ordered term map; the zero polynomial has an empty term list.
class Poly {
  public:
    Poly() = default;

    static Poly constant(RatComplex c) {
        Poly p;
        if (!c.is_zero()) p.terms_[{}] = std::move(c);
        return p;
    }

    static Poly var(int v) {
        Poly p;
        p.terms_[{static_cast<std::uint16_t>(v)}] = RatComplex(1);
        return p;
    }

    /// coefficient * product of the listed variables
    static Poly monomial(RatComplex c, Monomial vars) {
        Poly p;
        if (!c.is_zero()) {
            std::sort(vars.begin(), vars.end());
            p.terms_[std::move(vars)] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, RatComplex>& terms() const { return terms_; }

    void add_term(const Monomial& m, const RatComplex& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// Exact evaluation at rational assignments.
    RatComplex eval_exact(const std::vector<RatComplex>& x) const {
        RatComplex out;
        for (const auto& [m, c] : terms_) {
            RatComplex v = c;
            for (auto idx : m) v = v * x.at(idx);
            out = out + v;
        }
        return out;
    }

    /// Floating evaluation; also reports the magnitude scale sum |term|.
    Complex eval(const std::vector<Complex>& x, double* scale = nullptr) const {
        Complex out = 0.0;
        double s = 0.0;
        for (const auto& [m, c] : terms_) {
            Complex v = c.to_complex();
            for (auto idx : m) v *= x.at(idx);
            out += v;
            s += std::abs(v);
        }
        if (scale) *scale = s;
        return out;
    }

    /// Rename monomials for display; variable v prints as names[v].
    std::string to_string(const std::vector<std::string>& names) const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")";
            for (auto v : m) out += "*" + names.at(v);
        }
        return out;
    }

  private:
    std::map<Monomial, RatComplex> terms_;
};

} // namespace heavenly
