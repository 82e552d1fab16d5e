#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "heavenly/errors.hpp"
#include "heavenly/jet.hpp"

namespace heavenly {

/// A twice-differentiable scalar function from a fixed entire family,
/// carrying its exact first and second derivatives.
///
/// Families: exp(k*s), sin(k*s), cos(k*s), cosh(k*s), square s^2, and
/// polynomials of degree <= 6. All are entire, so evaluation never hits a
/// pole or branch point.
class ScalarFn {
  public:
    enum class Family { Exp, Sin, Cos, Cosh, Square, Poly };

    static ScalarFn exp(Complex gain = 1.0) { return ScalarFn(Family::Exp, gain); }
    static ScalarFn sin(Complex gain = 1.0) { return ScalarFn(Family::Sin, gain); }
    static ScalarFn cos(Complex gain = 1.0) { return ScalarFn(Family::Cos, gain); }
    static ScalarFn cosh(Complex gain = 1.0) { return ScalarFn(Family::Cosh, gain); }
    static ScalarFn square() { return ScalarFn(Family::Square, 1.0); }

    /// coeffs[k] multiplies s^k; degree at most 6.
    static ScalarFn poly(std::vector<Complex> coeffs) {
        if (coeffs.size() > 7) throw DomainError("poly degree above 6");
        ScalarFn f(Family::Poly, 1.0);
        f.coeffs_ = std::move(coeffs);
        return f;
    }

    Family family() const { return family_; }
    Complex gain() const { return gain_; }

    /// Same family with the argument pre-scaled by an extra factor.
    ScalarFn rescaled(double factor) const {
        ScalarFn f = *this;
        if (family_ == Family::Poly) {
            Complex p = 1.0;
            for (auto& c : f.coeffs_) {
                c *= p;
                p *= factor;
            }
        } else if (family_ != Family::Square) {
            f.gain_ *= factor;
        }
        return f;
    }

    Deriv2 eval(Complex s) const {
        switch (family_) {
        case Family::Exp: {
            const Complex e = std::exp(gain_ * s);
            return {e, gain_ * e, gain_ * gain_ * e};
        }
        case Family::Sin: {
            const Complex sn = std::sin(gain_ * s), cs = std::cos(gain_ * s);
            return {sn, gain_ * cs, -gain_ * gain_ * sn};
        }
        case Family::Cos: {
            const Complex sn = std::sin(gain_ * s), cs = std::cos(gain_ * s);
            return {cs, -gain_ * sn, -gain_ * gain_ * cs};
        }
        case Family::Cosh: {
            const Complex ch = std::cosh(gain_ * s), sh = std::sinh(gain_ * s);
            return {ch, gain_ * sh, gain_ * gain_ * ch};
        }
        case Family::Square:
            return {s * s, 2.0 * s, 2.0};
        case Family::Poly: {
            Deriv2 d{0.0, 0.0, 0.0};
            // Horner for g, g', g''
            for (std::size_t k = coeffs_.size(); k-- > 0;) {
                d.d2g = d.d2g * s + d.dg * 2.0;
                d.dg = d.dg * s + d.g;
                d.g = d.g * s + coeffs_[k];
            }
            return d;
        }
        }
        throw DomainError("unreachable scalar family");
    }

    /// The coefficient-conjugated function conj ∘ g ∘ conj, again entire.
    Deriv2 eval_conjugated(Complex s) const {
        Deriv2 d = eval(std::conj(s));
        return {std::conj(d.g), std::conj(d.dg), std::conj(d.d2g)};
    }

    /// True when the function maps reals to reals (all parameters real).
    bool has_real_params() const {
        if (family_ == Family::Poly) {
            for (const auto& c : coeffs_)
                if (c.imag() != 0.0) return false;
            return true;
        }
        return gain_.imag() == 0.0;
    }

    std::string describe() const {
        std::ostringstream os;
        switch (family_) {
        case Family::Exp: os << "exp"; break;
        case Family::Sin: os << "sin"; break;
        case Family::Cos: os << "cos"; break;
        case Family::Cosh: os << "cosh"; break;
        case Family::Square: return "square";
        case Family::Poly: {
            os << "poly:";
            for (std::size_t k = 0; k < coeffs_.size(); ++k) {
                if (k) os << ",";
                os << format_complex(coeffs_[k]);
            }
            return os.str();
        }
        }
        if (gain_ != Complex(1.0)) os << ":" << format_complex(gain_);
        return os.str();
    }

    /// Parse "exp", "exp:2", "sin:-0.5", "square", "poly:1,0,3".
    static ScalarFn parse(const std::string& text) {
        const auto colon = text.find(':');
        const std::string head = text.substr(0, colon);
        const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
        if (head == "square") return square();
        if (head == "poly") {
            std::vector<Complex> cs;
            std::istringstream is(tail);
            std::string tok;
            while (std::getline(is, tok, ',')) cs.push_back(parse_complex(tok));
            if (cs.empty()) throw ConfigError("poly needs coefficients");
            return poly(std::move(cs));
        }
        const Complex k = tail.empty() ? Complex(1.0) : parse_complex(tail);
        if (head == "exp") return exp(k);
        if (head == "sin") return sin(k);
        if (head == "cos") return cos(k);
        if (head == "cosh") return cosh(k);
        throw ConfigError("unknown scalar function: " + text);
    }

    /// "a+bi" / "a-bi" / "a" / "bi", components plain decimals or p/q.
    static Complex parse_complex(const std::string& text);
    static std::string format_complex(Complex z);

  private:
    ScalarFn(Family f, Complex gain) : family_(f), gain_(gain) {}

    Family family_;
    Complex gain_;
    std::vector<Complex> coeffs_;
};

inline Complex ScalarFn::parse_complex(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw ConfigError("empty number");
    auto parse_real = [](const std::string& t) -> double {
        const auto slash = t.find('/');
        if (slash != std::string::npos) {
            const double num = std::stod(t.substr(0, slash));
            const double den = std::stod(t.substr(slash + 1));
            if (den == 0.0) throw ConfigError("zero denominator in " + t);
            return num / den;
        }
        return std::stod(t);
    };
    // split at the sign that starts the imaginary part, if any
    if (s.back() == 'i' || s.back() == 'I') {
        std::string body = s.substr(0, s.size() - 1);
        for (std::size_t k = body.size(); k-- > 1;) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E' &&
                body[k - 1] != '/') {
                const std::string re = body.substr(0, k);
                std::string im = body.substr(k);
                if (im == "+" || im == "-") im += "1";
                return {parse_real(re), parse_real(im)};
            }
        }
        if (body.empty() || body == "+") return {0.0, 1.0};
        if (body == "-") return {0.0, -1.0};
        return {0.0, parse_real(body)};
    }
    return {parse_real(s), 0.0};
}

inline std::string ScalarFn::format_complex(Complex z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() != 0.0) {
        if (z.imag() >= 0.0) os << "+";
        os << z.imag() << "i";
    }
    return os.str();
}

/// Spec entry point: compose a library function over an inner jet.
inline Jet4 jet_compose_scalar(const ScalarFn& g, const Jet4& inner) {
    return jet_compose(g.eval(inner.val), inner);
}

} // namespace heavenly
