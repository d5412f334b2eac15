#include "mdq/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace mdq {

// ---- GaussianRational -------------------------------------------------------

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    mpq_class nrm = o.re * o.re + o.im * o.im;
    if (nrm == 0) throw std::domain_error("GaussianRational: division by zero");
    return {(re * o.re + im * o.im) / nrm, (im * o.re - re * o.im) / nrm};
}

std::string GaussianRational::str() const {
    if (im == 0) return re.get_str();
    if (re == 0) return im.get_str() + "*i";
    std::string s = "(" + re.get_str();
    if (im > 0) s += "+";
    return s + im.get_str() + "*i)";
}

// ---- QPoly ------------------------------------------------------------------

void QPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] = r.c[i] + o.c[i];
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] = r.c[i] - o.c[i];
    r.trim();
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c.resize(c.size() + o.c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    r.trim();
    return r;
}

void QPoly::divmod(const QPoly& d, QPoly& quot, QPoly& rem) const {
    if (d.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
    quot = QPoly();
    rem = *this;
    if (degree() >= d.degree()) quot.c.resize(degree() - d.degree() + 1);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        GaussianRational f = rem.lead() / d.lead();
        quot.c[k] = quot.c[k] + f;
        for (std::size_t i = 0; i < d.c.size(); ++i)
            rem.c[i + k] = rem.c[i + k] - f * d.c[i];
        rem.trim();
    }
    quot.trim();
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly q, r;
        a.divmod(b, q, r);
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        GaussianRational l = a.lead();
        for (auto& cc : a.c) cc = cc / l;
    }
    return a;
}

std::string QPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << c[k].str();
        if (k == 1)
            out << "*q";
        else if (k > 1)
            out << "*q^" << k;
    }
    return out.str();
}

// ---- QCoefficient -----------------------------------------------------------

QCoefficient::QCoefficient() : exp(0), num(), den(GaussianRational(1)) {}

QCoefficient::QCoefficient(int e, QPoly n, QPoly d) : exp(e), num(std::move(n)), den(std::move(d)) {
    canonicalize();
}

QCoefficient make_qcoeff(int e, QPoly n, QPoly d) { return QCoefficient(e, std::move(n), std::move(d)); }

void QCoefficient::canonicalize() {
    if (den.is_zero()) throw std::domain_error("QCoefficient: zero denominator");
    if (num.is_zero()) {
        exp = 0;
        den = QPoly(GaussianRational(1));
        return;
    }
    // Pull q^s factors out of numerator and denominator into the exponent.
    std::size_t sn = 0;
    while (num.c[sn].is_zero()) ++sn;
    std::size_t sd = 0;
    while (den.c[sd].is_zero()) ++sd;
    if (sn) num.c.erase(num.c.begin(), num.c.begin() + sn);
    if (sd) den.c.erase(den.c.begin(), den.c.begin() + sd);
    exp += static_cast<int>(sn) - static_cast<int>(sd);
    QPoly g = QPoly::gcd(num, den);
    if (g.degree() > 0) {
        QPoly q, r;
        num.divmod(g, q, r);
        num = q;
        den.divmod(g, q, r);
        den = q;
    }
    GaussianRational l = den.lead();
    for (auto& cc : num.c) cc = cc / l;
    for (auto& cc : den.c) cc = cc / l;
}

QCoefficient QCoefficient::from_int(long v) {
    QCoefficient r;
    if (v != 0) r.num = QPoly(GaussianRational(v));
    return r;
}

QCoefficient QCoefficient::imag_unit() {
    QCoefficient r;
    r.num = QPoly(GaussianRational::i());
    return r;
}

QCoefficient QCoefficient::q_power(int k) {
    QCoefficient r = from_int(1);
    r.exp = k;
    return r;
}

QCoefficient QCoefficient::operator+(const QCoefficient& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int e = std::min(exp, o.exp);
    QPoly shift_a(GaussianRational(1)), shift_b(GaussianRational(1));
    auto q_shift = [](int k) {
        QPoly p;
        p.c.resize(k + 1);
        p.c[k] = GaussianRational(1);
        return p;
    };
    shift_a = q_shift(exp - e);
    shift_b = q_shift(o.exp - e);
    return QCoefficient(e, shift_a * num * o.den + shift_b * o.num * den, den * o.den);
}

QCoefficient QCoefficient::operator-(const QCoefficient& o) const { return *this + (-o); }

QCoefficient QCoefficient::operator*(const QCoefficient& o) const {
    return QCoefficient(exp + o.exp, num * o.num, den * o.den);
}

QCoefficient QCoefficient::operator/(const QCoefficient& o) const {
    if (o.is_zero()) throw std::domain_error("QCoefficient: division by zero");
    return QCoefficient(exp - o.exp, num * o.den, den * o.num);
}

QCoefficient QCoefficient::operator-() const {
    QCoefficient r = *this;
    for (auto& cc : r.num.c) cc = -cc;
    return r;
}

bool QCoefficient::operator==(const QCoefficient& o) const {
    return exp == o.exp && num == o.num && den == o.den;
}

std::string QCoefficient::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool den_trivial = (den.degree() == 0 && den.c[0] == GaussianRational(1));
    if (exp != 0) out << "q^" << exp << " * ";
    out << "(" << num.str() << ")";
    if (!den_trivial) out << "/(" << den.str() << ")";
    return out.str();
}

// ---- AlgebraElement ---------------------------------------------------------

AlgebraElement AlgebraElement::zero() { return {}; }

AlgebraElement AlgebraElement::unit() { return monomial({0, 0, 0}); }

AlgebraElement AlgebraElement::monomial(Monomial m, QCoefficient c) {
    AlgebraElement r;
    if (!c.is_zero()) r.terms.emplace(m, std::move(c));
    return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [m, c] : o.terms) {
        auto it = r.terms.find(m);
        if (it == r.terms.end()) {
            r.terms.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    }
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    return *this + o.scaled(QCoefficient::from_int(-1));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement r;
    for (const auto& [m1, c1] : terms) {
        for (const auto& [m2, c2] : o.terms) {
            // (u^a1 v^b1 Z^c1)(u^a2 v^b2 Z^c2): moving u^a2 through v^b1
            // costs q^{-2 b1 a2}.
            Monomial m{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]};
            QCoefficient c = c1 * c2 * QCoefficient::q_power(-2 * m1[1] * m2[0]);
            auto it = r.terms.find(m);
            if (it == r.terms.end()) {
                if (!c.is_zero()) r.terms.emplace(m, std::move(c));
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) r.terms.erase(it);
            }
        }
    }
    return r;
}

AlgebraElement AlgebraElement::scaled(const QCoefficient& c) const {
    AlgebraElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms) r.terms.emplace(m, cc * c);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const { return terms == o.terms; }

std::string AlgebraElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) out << "  +  ";
        first = false;
        out << c.str();
        const char* names[3] = {"u", "v", "Z"};
        for (int i = 0; i < 3; ++i) {
            if (m[i] == 0) continue;
            out << " " << names[i];
            if (m[i] != 1) out << "^" << m[i];
        }
    }
    return out.str();
}

// ---- generators and relations -----------------------------------------------

Generators build_generators() {
    QCoefficient denom = QCoefficient::q_power(1) - QCoefficient::q_power(-1);
    QCoefficient ifac = QCoefficient::imag_unit() / denom;
    Generators g;
    g.E = (AlgebraElement::monomial({0, 1, 0}) + AlgebraElement::monomial({-1, 0, 1})).scaled(ifac);
    g.F = (AlgebraElement::monomial({1, 0, 0}) + AlgebraElement::monomial({0, -1, -1})).scaled(ifac);
    g.K = AlgebraElement::monomial({1, 1, 0}, QCoefficient::q_power(-1));
    g.Kinv = AlgebraElement::monomial({-1, -1, 0}, QCoefficient::q_power(-1));
    return g;
}

RelationResiduals relation_residuals(const Generators& g) {
    QCoefficient denom = QCoefficient::q_power(1) - QCoefficient::q_power(-1);
    RelationResiduals r;
    r.ke = g.K * g.E - (g.E * g.K).scaled(QCoefficient::q_power(2));
    r.kf = g.K * g.F - (g.F * g.K).scaled(QCoefficient::q_power(-2));
    r.ef = g.E * g.F - g.F * g.E -
           (g.K - g.Kinv).scaled(QCoefficient::from_int(1) / denom);
    return r;
}

AlgebraElement casimir(const Generators& g) {
    QCoefficient denom = QCoefficient::q_power(1) - QCoefficient::q_power(-1);
    return g.K.scaled(QCoefficient::q_power(1)) + g.Kinv.scaled(QCoefficient::q_power(-1)) +
           (g.F * g.E).scaled(denom * denom);
}

}  // namespace mdq
