#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tckit/error.hpp"

namespace tckit {

enum class FieldKind { Rational, Cyclotomic, Prime };

struct FieldSpec {
    FieldKind kind = FieldKind::Rational;
    std::uint64_t order = 1; // cyclotomic only
    std::uint64_t p = 0;     // prime only

    static FieldSpec rational();
    static FieldSpec cyclotomic(std::uint64_t n);
    static FieldSpec prime(std::uint64_t p);

    /// Parses "rational", "cyclotomic:N" or "prime:P".
    static FieldSpec parse(const std::string& text);

    std::uint64_t characteristic() const { return kind == FieldKind::Prime ? p : 0; }
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// An element of one of the supported exact fields. Immutable value type;
/// equality is equality of canonical representations.
class Scalar {
public:
    Scalar(); // rational zero

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long v);
    static Scalar from_rational(const FieldSpec& f, const mpq_class& q);
    /// zeta_n^k in a cyclotomic field of order n.
    static Scalar zeta(const FieldSpec& f, long k);
    /// Canonical form of sum(raw[k] * zeta_n^k).
    static Scalar cyclotomic(std::uint64_t n, const std::vector<mpq_class>& raw);
    static Scalar prime_element(const FieldSpec& f, std::uint64_t v);

    const FieldSpec& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(long e) const;
    /// zeta -> zeta^-1 on cyclotomics, identity elsewhere.
    Scalar conjugate() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order on canonical forms, used for deterministic output only.
    bool operator<(const Scalar& o) const;

    /// Rational value; throws unless the element lies in Q.
    mpq_class rational_value() const;
    bool is_rational() const;
    /// Coefficients on 1, zeta, ..., zeta^(n-1); canonical, zero above phi(n).
    std::vector<mpq_class> coeffs() const;
    std::uint64_t prime_value() const { return m_; }

    /// Diagnostic floating evaluation (zeta_n = exp(2 pi i / n)).
    std::complex<double> approx() const;
    std::string to_string() const;

private:
    FieldSpec field_;
    mpq_class q_;                 // rational
    std::vector<mpq_class> c_;    // cyclotomic, length phi(n)
    std::uint64_t m_ = 0;         // prime

    void require_same(const Scalar& o) const;
};

Scalar cyclotomic_reduce(const std::vector<mpq_class>& raw, std::uint64_t n);
Scalar invert(const Scalar& x);
Scalar conjugate(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_prime(std::uint64_t p);

/// All roots of unity contained in the field, as a sorted list.
std::vector<Scalar> roots_of_unity(const FieldSpec& f);

/// All y in the field with y^n = c (n >= 1), sorted. Exact; may be empty.
std::vector<Scalar> nth_roots(const Scalar& c, unsigned n);

} // namespace tckit
