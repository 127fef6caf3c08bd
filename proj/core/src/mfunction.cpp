#include <residua/mfunction.hpp>

#include <residua/tableaux.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace residua {

namespace {

std::vector<int> class_signs(const RootSystem& rs, const std::vector<int>& signs) {
    if (signs.empty()) return std::vector<int>(rs.nparams(), 1);
    if (signs.size() != rs.nparams())
        throw std::domain_error("sign twist: one entry per parameter class expected");
    for (int s : signs)
        if (s != 1 && s != -1) throw std::domain_error("sign twist entries must be +-1");
    return signs;
}

struct BuiltM {
    ResidualShape shape;
    FactoredRational fr;
};

// Walks the signed roots once and sorts every term of the degree formula.
// Substituting k = 2f turns alpha(xi(k)) into the exponent X with
// alpha(c) = q^X, and the class form F gives q_alpha = q^F.
BuiltM build_internal(const RootSystem& rs, const std::vector<LinForm>& coords,
                      const std::vector<int>& signs_in) {
    if (coords.size() != static_cast<std::size_t>(rs.dim))
        throw std::domain_error("point dimension does not match the root system");
    std::vector<int> signs = class_signs(rs, signs_in);
    std::size_t np = rs.nparams();

    std::vector<LinForm> doubling;
    doubling.reserve(np);
    for (std::size_t j = 0; j < np; ++j) doubling.push_back(LinForm::unit(np, j, Rat(2)));

    BuiltM out;
    FactoredRational& m = out.fr;
    m.nparams = np;
    m.leading = LinForm(np);

    for (std::size_t i = 0; i < rs.npositive(); ++i) {
        LinForm Xpos = alpha_value(rs.positive[i], coords).substitute(doubling);
        LinForm F = LinForm::unit(np, static_cast<std::size_t>(rs.pclass[i]));
        int eps = signs[static_cast<std::size_t>(rs.pclass[i])];
        m.leading -= Rat(2) * F;

        for (int sgn : {1, -1}) {
            LinForm X = sgn > 0 ? Xpos : -Xpos;
            QVec root = rs.positive[i];
            if (sgn < 0)
                for (auto& c : root) c = -c;

            // numerator term  alpha(c)^{-1} - 1  =  eps q^{-X} - 1
            if (eps == 1 && X.is_zero())
                out.shape.zero.push_back(root);
            else
                m.numerator.push_back({eps, -X, -1});

            // The two denominator cofactors multiply to
            // q_alpha^{-2} alpha(c)^{-1} - 1 = eps q^{-2F-X} - 1, which is
            // rational in q^{f_s} whatever the twist.  When that product
            // vanishes identically only the positive cofactor
            // q^{-F-X/2} + 1 survives (its exponent is honest: eps = +1).
            if (eps == 1 && (Rat(2) * F + X).is_zero()) {
                out.shape.pole_minus.push_back(root);
                m.denominator.push_back({1, -F - X * rat(1, 2), 1});
            } else {
                m.denominator.push_back({eps, Rat(-2) * F - X, -1});
            }
        }
    }

    long excess = static_cast<long>(out.shape.pole_plus.size()) +
                  static_cast<long>(out.shape.pole_minus.size()) -
                  static_cast<long>(out.shape.zero.size());
    if (excess != rs.rank)
        throw invariant_error("degree factor: pole/zero count excess " + std::to_string(excess) +
                              " does not certify a residual family of rank " +
                              std::to_string(rs.rank));
    return out;
}

int factor_sign_at(const MFactor& t, const Rat& e) {
    if (t.eps == t.offset) return t.eps;  // eps (q^e + 1), q > 1
    return t.eps * rat_sign(e);           // eps (q^e - 1)
}

}  // namespace

bool factor_vanishes(const MFactor& t, const QVec& f) {
    return t.eps == -t.offset && t.expo.eval(f) == Rat(0);
}

ResidualShape residual_shape(const RootSystem& rs, const std::vector<LinForm>& coords,
                             const std::vector<int>& signs) {
    return build_internal(rs, coords, signs).shape;
}

FactoredRational build_m_function(const RootSystem& rs, const std::vector<LinForm>& coords,
                                  const std::vector<int>& signs) {
    return build_internal(rs, coords, signs).fr;
}

std::pair<long, long> vanishing_order(const FactoredRational& M, const QVec& f) {
    long num = 0, den = 0;
    for (const auto& t : M.numerator) num += factor_vanishes(t, f) ? 1 : 0;
    for (const auto& t : M.denominator) den += factor_vanishes(t, f) ? 1 : 0;
    return {num, den};
}

MEvaluation evaluate_m(const FactoredRational& M, const QVec& f, const Rat& q) {
    if (f.size() != M.nparams) throw std::domain_error("evaluate_m: wrong point size");
    if (q <= Rat(1)) throw std::domain_error("evaluate_m: base must exceed 1");

    std::vector<std::size_t> nv, dv;
    for (std::size_t i = 0; i < M.numerator.size(); ++i)
        if (factor_vanishes(M.numerator[i], f)) {
            if (M.numerator[i].expo.is_zero())
                throw invariant_error("evaluate_m: identically vanishing factor");
            nv.push_back(i);
        }
    for (std::size_t i = 0; i < M.denominator.size(); ++i)
        if (factor_vanishes(M.denominator[i], f)) {
            if (M.denominator[i].expo.is_zero())
                throw invariant_error("evaluate_m: identically vanishing factor");
            dv.push_back(i);
        }

    MEvaluation out;
    out.num_order = static_cast<long>(nv.size());
    out.den_order = static_cast<long>(dv.size());
    if (out.num_order < out.den_order)
        throw invariant_error("evaluate_m: pole of order " +
                              std::to_string(out.den_order - out.num_order));
    if (out.num_order > out.den_order) {
        out.exact = true;
        return out;  // zero of positive order
    }

    // Matched pair of vanishing factors eps (q^{L} - 1): along any approach
    // direction the ratio tends to the slope quotient, so it must be a
    // constant of proportionality.
    Rat ratio(1);
    std::vector<bool> used(nv.size(), false);
    for (std::size_t dj : dv) {
        const MFactor& d = M.denominator[dj];
        bool matched = false;
        for (std::size_t t = 0; t < nv.size() && !matched; ++t) {
            if (used[t]) continue;
            const MFactor& nf = M.numerator[nv[t]];
            if (auto c = proportional_ratio(nf.expo, d.expo)) {
                ratio *= *c * Rat(nf.eps * d.eps);
                used[t] = true;
                matched = true;
            }
        }
        if (!matched)
            throw invariant_error("evaluate_m: vanishing factors do not cancel along a common direction");
    }

    bool exact = true;
    Rat value = M.scalar * ratio;
    int sign = rat_sign(value);
    double qd = to_double(q);
    double approx = to_double(M.scalar) * to_double(ratio);

    Rat e0 = M.leading.eval(f);
    approx *= std::pow(qd, to_double(e0));
    if (is_integer(e0))
        value *= rat_pow(q, static_cast<long>(e0.numerator().convert_to<long long>()));
    else
        exact = false;

    auto fold = [&](const MFactor& t, bool numerator_side) {
        if (factor_vanishes(t, f)) return;  // cancelled above
        Rat e = t.expo.eval(f);
        int fs = factor_sign_at(t, e);
        sign *= fs;
        double fd = t.eps * std::pow(qd, to_double(e)) + t.offset;
        approx = numerator_side ? approx * fd : approx / fd;
        if (!is_integer(e)) {
            exact = false;
            return;
        }
        Rat fv = Rat(t.eps) * rat_pow(q, static_cast<long>(e.numerator().convert_to<long long>())) +
                 Rat(t.offset);
        if (exact) value = numerator_side ? value * fv : value / fv;
    };
    for (const auto& t : M.numerator) fold(t, true);
    for (const auto& t : M.denominator) fold(t, false);

    out.sign = sign;
    out.exact = exact;
    out.value = exact ? value : Rat(0);
    out.approx = exact ? to_double(value) : approx;
    return out;
}

bool is_regular_via_m(const RootSystem& rs, const std::vector<LinForm>& coords, const QVec& f) {
    auto [num, den] = vanishing_order(build_m_function(rs, coords), f);
    return num == den;
}

namespace {

// eps q^L + off  ->  (extracted sign, extracted monomial) . (q^L' + off')
// with L' sign-canonical; constants fold away entirely.
void canonical_push(MFactor t, bool numerator_side, CanonicalForm& M) {
    auto absorb_scalar = [&](const Rat& s) {
        if (numerator_side)
            M.scalar *= s;
        else
            M.scalar /= s;
    };
    auto absorb_monomial = [&](const LinForm& L) {
        if (numerator_side)
            M.leading += L;
        else
            M.leading -= L;
    };

    if (rat_sign(t.expo.leading()) < 0) {
        // eps q^L + off = q^L (off q^{-L} + eps)
        absorb_monomial(t.expo);
        t = MFactor{t.offset, -t.expo, t.eps};
    }
    if (t.expo.is_zero()) {
        Rat c = Rat(t.eps) + Rat(t.offset);
        if (c == Rat(0)) throw invariant_error("canonical_form: identically vanishing factor");
        absorb_scalar(c);
        return;
    }
    if (t.eps < 0) {
        absorb_scalar(Rat(-1));
        t.eps = 1;
        t.offset = -t.offset;
    }
    (numerator_side ? M.numerator : M.denominator).push_back({t.expo, t.offset});
}

}  // namespace

CanonicalForm canonical_form(const FactoredRational& M) {
    CanonicalForm out;
    out.nparams = M.nparams;
    out.scalar = M.scalar;
    out.leading = M.leading;
    for (const auto& t : M.numerator) canonical_push(t, true, out);
    for (const auto& t : M.denominator) canonical_push(t, false, out);
    std::sort(out.numerator.begin(), out.numerator.end());
    std::sort(out.denominator.begin(), out.denominator.end());
    return out;
}

std::vector<std::string> log_param_names(const RootSystem& rs) {
    std::vector<std::string> names;
    names.reserve(rs.nparams());
    for (const auto& k : rs.param_names) names.push_back("f" + k.substr(1));
    return names;
}

namespace {

std::string factor_group_text(const CanonicalFactor& t, long mult,
                              const std::vector<std::string>& names) {
    std::string s = "(q^{" + to_string(t.expo, names) + "}";
    s += t.offset > 0 ? " + 1)" : " - 1)";
    if (mult > 1) s += "^" + std::to_string(mult);
    return s;
}

std::vector<std::string> grouped_factors(const std::vector<CanonicalFactor>& v,
                                         const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        out.push_back(factor_group_text(v[i], static_cast<long>(j - i), names));
        i = j;
    }
    return out;
}

}  // namespace

std::string to_string(const CanonicalForm& M, const std::vector<std::string>& names) {
    std::vector<std::string> num_parts;
    if (M.scalar != Rat(1)) num_parts.push_back(to_string(M.scalar));
    if (!M.leading.is_zero()) num_parts.push_back("q^{" + to_string(M.leading, names) + "}");
    for (auto& g : grouped_factors(M.numerator, names)) num_parts.push_back(g);
    std::string s;
    if (num_parts.empty()) {
        s = "1";
    } else {
        for (std::size_t i = 0; i < num_parts.size(); ++i)
            s += (i ? " * " : "") + num_parts[i];
    }
    auto den_parts = grouped_factors(M.denominator, names);
    if (!den_parts.empty()) {
        std::string d;
        for (std::size_t i = 0; i < den_parts.size(); ++i) d += (i ? " * " : "") + den_parts[i];
        s += " / ";
        s += den_parts.size() > 1 ? "(" + d + ")" : d;
    }
    return s;
}

std::map<long, long> short_root_contents(const CanonicalForm& M) {
    if (M.nparams != 2)
        throw std::domain_error("short_root_contents: needs a two-parameter factorization");
    std::map<long, long> raw;
    for (const auto& t : M.numerator) {
        if (t.offset != -1) continue;
        if (rat_abs(t.expo.coeff[1]) != Rat(2)) continue;
        Rat c = t.expo.coeff[0] / t.expo.coeff[1];
        if (!is_integer(c)) throw invariant_error("short_root_contents: non-integral content");
        ++raw[static_cast<long>(c.numerator().convert_to<long long>())];
    }
    std::map<long, long> boxes;
    for (auto& [content, cnt] : raw) {
        if (cnt % 2 != 0) throw invariant_error("short_root_contents: odd factor multiplicity");
        boxes[content] = cnt / 2;
    }
    return boxes;
}

std::optional<Partition> partition_from_contents(const std::map<long, long>& boxes, long n) {
    std::optional<Partition> found;
    for (const auto& lam : partitions_of(n)) {
        std::map<long, long> c;
        for (long v : contents(lam)) ++c[v];
        if (c == boxes) {
            if (found) return std::nullopt;
            found = lam;
        }
    }
    return found;
}

SeparationReport separation_check(long n) {
    if (n < 1) throw std::domain_error("separation_check: n must be positive");
    RootSystem rs = make_root_system(RSType::B, static_cast<int>(n));

    SeparationReport rep;
    rep.distinct = true;
    rep.recovered = true;
    std::ostringstream detail;

    using Key = std::pair<std::vector<CanonicalFactor>, std::vector<CanonicalFactor>>;
    std::map<Key, Partition> seen;
    for (const auto& lam : partitions_of(n)) {
        CanonicalForm canon = canonical_form(build_m_function(rs, xi_from_partition(lam)));
        Key key{canon.numerator, canon.denominator};
        if (auto [it, fresh] = seen.emplace(key, lam); !fresh) {
            rep.distinct = false;
            detail << "collision: " << to_string(lam) << " vs " << to_string(it->second) << '\n';
        }
        auto back = partition_from_contents(short_root_contents(canon), n);
        if (back && *back == lam) {
            detail << to_string(lam) << ": recovered\n";
        } else {
            rep.recovered = false;
            detail << to_string(lam) << ": recovery failed (got "
                   << (back ? to_string(*back) : std::string("no unique match")) << ")\n";
        }
    }
    rep.detail = detail.str();
    return rep;
}

}  // namespace residua
