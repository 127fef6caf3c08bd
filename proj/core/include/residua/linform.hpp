#pragma once

#include <residua/numeric.hpp>

#include <optional>
#include <string>
#include <vector>

namespace residua {

// Affine-linear form  sum_i coeff[i] * param_i + constant  over an ordered
// parameter list owned by the surrounding context (names only matter when
// printing).  All arithmetic requires matching parameter counts.
struct LinForm {
    std::vector<Rat> coeff;
    Rat constant{};

    LinForm() = default;
    explicit LinForm(std::size_t nparams) : coeff(nparams, Rat(0)) {}

    static LinForm unit(std::size_t nparams, std::size_t i, const Rat& c = Rat(1)) {
        LinForm f(nparams);
        f.coeff.at(i) = c;
        return f;
    }
    static LinForm constant_form(std::size_t nparams, const Rat& c) {
        LinForm f(nparams);
        f.constant = c;
        return f;
    }

    std::size_t nparams() const { return coeff.size(); }

    bool is_zero() const {
        if (constant != Rat(0)) return false;
        for (const auto& c : coeff)
            if (c != Rat(0)) return false;
        return true;
    }
    bool is_constant() const {
        for (const auto& c : coeff)
            if (c != Rat(0)) return false;
        return true;
    }

    Rat eval(const std::vector<Rat>& values) const {
        if (values.size() != coeff.size())
            throw std::domain_error("LinForm::eval: parameter count mismatch");
        Rat r = constant;
        for (std::size_t i = 0; i < coeff.size(); ++i) r += coeff[i] * values[i];
        return r;
    }

    // Composition with param_i -> images[i]; the result lives over the
    // parameter list of the images.
    LinForm substitute(const std::vector<LinForm>& images) const {
        if (images.size() != coeff.size())
            throw std::domain_error("LinForm::substitute: parameter count mismatch");
        std::size_t m = images.empty() ? 0 : images[0].nparams();
        LinForm r(m);
        r.constant = constant;
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (coeff[i] == Rat(0)) continue;
            if (images[i].nparams() != m)
                throw std::domain_error("LinForm::substitute: ragged images");
            for (std::size_t j = 0; j < m; ++j) r.coeff[j] += coeff[i] * images[i].coeff[j];
            r.constant += coeff[i] * images[i].constant;
        }
        return r;
    }

    LinForm& operator+=(const LinForm& o) {
        if (o.coeff.size() != coeff.size())
            throw std::domain_error("LinForm: parameter count mismatch");
        for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] += o.coeff[i];
        constant += o.constant;
        return *this;
    }
    LinForm& operator-=(const LinForm& o) {
        if (o.coeff.size() != coeff.size())
            throw std::domain_error("LinForm: parameter count mismatch");
        for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] -= o.coeff[i];
        constant -= o.constant;
        return *this;
    }
    LinForm& operator*=(const Rat& c) {
        for (auto& x : coeff) x *= c;
        constant *= c;
        return *this;
    }

    friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
    friend LinForm operator*(LinForm a, const Rat& c) { return a *= c; }
    friend LinForm operator*(const Rat& c, LinForm a) { return a *= c; }
    friend LinForm operator-(LinForm a) { return a *= Rat(-1); }

    friend bool operator==(const LinForm& a, const LinForm& b) {
        return a.coeff == b.coeff && a.constant == b.constant;
    }
    friend bool operator<(const LinForm& a, const LinForm& b) {
        if (a.coeff != b.coeff) return a.coeff < b.coeff;
        return a.constant < b.constant;
    }

    // First nonzero entry in (coeff..., constant) order; 0 for the zero form.
    Rat leading() const {
        for (const auto& c : coeff)
            if (c != Rat(0)) return c;
        return constant;
    }

    // Scaled so the leading entry is +1 (zero form unchanged).  Two forms cut
    // the same hyperplane iff their normalizations agree.
    LinForm normalized() const {
        Rat l = leading();
        if (l == Rat(0)) return *this;
        LinForm r = *this;
        r *= Rat(1) / l;
        return r;
    }

    // Sign flip only: leading entry made positive.
    LinForm sign_canonical() const {
        return rat_sign(leading()) < 0 ? -LinForm(*this) : *this;
    }
};

// c with a == c*b, if it exists (b must be nonzero).
inline std::optional<Rat> proportional_ratio(const LinForm& a, const LinForm& b) {
    if (b.is_zero()) throw std::domain_error("proportional_ratio: zero divisor form");
    Rat l = b.leading();
    Rat al;
    {
        bool found = false;
        for (std::size_t i = 0; i < b.coeff.size(); ++i)
            if (b.coeff[i] != Rat(0)) {
                al = a.coeff.size() == b.coeff.size() ? a.coeff[i] : Rat(0);
                found = true;
                break;
            }
        if (!found) al = a.constant;
    }
    Rat c = al / l;
    LinForm scaled = b;
    scaled *= c;
    if (scaled == a) return c;
    return std::nullopt;
}

// "k1 - 2*k2 + 1/2"-style rendering over the given names; "0" when empty.
inline std::string to_string(const LinForm& f, const std::vector<std::string>& names) {
    if (names.size() != f.coeff.size())
        throw std::domain_error("LinForm to_string: name count mismatch");
    std::string out;
    auto term = [&](const Rat& c, const std::string& sym) {
        if (c == Rat(0)) return;
        Rat a = rat_abs(c);
        if (out.empty()) {
            if (rat_sign(c) < 0) out += '-';
        } else {
            out += rat_sign(c) < 0 ? " - " : " + ";
        }
        if (sym.empty()) {
            out += to_string(a);
        } else {
            if (a != Rat(1)) {
                out += to_string(a);
                out += '*';
            }
            out += sym;
        }
    };
    for (std::size_t i = 0; i < f.coeff.size(); ++i) term(f.coeff[i], names[i]);
    term(f.constant, "");
    return out.empty() ? "0" : out;
}

}  // namespace residua
