// Exact noncommutative Laurent algebra in u, v, Z over rational functions of a
// formal q with Gaussian-rational coefficients (GMP-backed, no floating point).
// Normal order is u^a v^b Z^c with reordering v^b u^a = q^{-2ab} u^a v^b.
#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace mdq {

// Exact element of Q(i): re + im * i with rational re, im.
struct GaussianRational {
    mpq_class re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const;
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
    std::string str() const;
};

// Dense polynomial in q over Q(i); coeff[k] multiplies q^k.
struct QPoly {
    std::vector<GaussianRational> c;

    QPoly() = default;
    explicit QPoly(GaussianRational c0) : c{std::move(c0)} { trim(); }

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    GaussianRational lead() const { return c.empty() ? GaussianRational() : c.back(); }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    bool operator==(const QPoly& o) const { return c == o.c; }

    // Exact polynomial division (field coefficients): *this = q*d + r.
    void divmod(const QPoly& d, QPoly& quot, QPoly& rem) const;
    static QPoly gcd(QPoly a, QPoly b);  // monic gcd
    std::string str() const;             // e.g. "1 - q^2 + (0,1) q^3"
};

// Canonical Laurent rational function of q:  q^exp * num/den with
// num(0) != 0 (unless num == 0), den(0) != 0, den monic, gcd(num, den) = 1.
// Canonical form makes equality a field-by-field comparison.
struct QCoefficient {
    int exp = 0;
    QPoly num;
    QPoly den;

    QCoefficient();                         // zero
    static QCoefficient from_int(long v);
    static QCoefficient imag_unit();        // i
    static QCoefficient q_power(int k);     // q^k

    bool is_zero() const { return num.is_zero(); }
    QCoefficient operator+(const QCoefficient& o) const;
    QCoefficient operator-(const QCoefficient& o) const;
    QCoefficient operator*(const QCoefficient& o) const;
    QCoefficient operator/(const QCoefficient& o) const;
    QCoefficient operator-() const;
    bool operator==(const QCoefficient& o) const;

    std::string str() const;

  private:
    void canonicalize();
    QCoefficient(int e, QPoly n, QPoly d);
    friend QCoefficient make_qcoeff(int, QPoly, QPoly);
};

// Build q^exp * num/den and canonicalize; the assembly hook for tests.
QCoefficient make_qcoeff(int exp, QPoly num, QPoly den);

// Exponent triple (a, b, c) for the normal-ordered monomial u^a v^b Z^c.
using Monomial = std::array<int, 3>;

struct AlgebraElement {
    std::map<Monomial, QCoefficient> terms;  // no zero coefficients stored

    static AlgebraElement zero();
    static AlgebraElement unit();
    static AlgebraElement monomial(Monomial m, QCoefficient c = QCoefficient::from_int(1));

    bool is_zero() const { return terms.empty(); }
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;  // normal-ordering product
    AlgebraElement scaled(const QCoefficient& c) const;
    bool operator==(const AlgebraElement& o) const;

    // Canonical text form "c * u^a v^b Z^c" sorted by exponent triple.
    std::string str() const;
};

struct Generators {
    AlgebraElement E, F, K, Kinv;
};

// E = i(v + u^{-1} Z)/(q - q^{-1}),  F = i(u + v^{-1} Z^{-1})/(q - q^{-1}),
// K = q^{-1} u v, with Z kept formal as the third exponent slot.
Generators build_generators();

struct RelationResiduals {
    AlgebraElement ke;  // KE - q^2 EK
    AlgebraElement kf;  // KF - q^{-2} FK
    AlgebraElement ef;  // EF - FE - (K - K^{-1})/(q - q^{-1})
};

RelationResiduals relation_residuals(const Generators& g);

// C = qK + q^{-1}K^{-1} + (q - q^{-1})^2 FE  (reduces to -(Z + Z^{-1})).
AlgebraElement casimir(const Generators& g);

}  // namespace mdq
