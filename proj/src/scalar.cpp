#include "tckit/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace tckit {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p)
{
    mpz_class m = z % mpz_class(std::to_string(p));
    if (m < 0)
        m += mpz_class(std::to_string(p));
    return std::stoull(m.get_str());
}

// Remainder of a modulo the monic integer polynomial phi.
void reduce_mod(QPoly& a, const std::vector<mpz_class>& phi)
{
    std::size_t d = phi.size() - 1;
    trim(a);
    while (a.size() > d) {
        std::size_t k = a.size() - 1;
        mpq_class c = a[k];
        std::size_t shift = k - d;
        for (std::size_t i = 0; i <= d; ++i)
            a[shift + i] -= c * phi[i];
        trim(a);
    }
}

QPoly poly_mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly poly_sub(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

// a = q*b + r over Q.
void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r)
{
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpq_class(0));
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        mpq_class c = r.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] -= c * b[i];
        trim(r);
    }
    trim(q);
}

// Inverse of a modulo m via the extended Euclidean algorithm.
QPoly poly_inverse_mod(const QPoly& a, const QPoly& m)
{
    QPoly r0 = m, r1 = a, s0, s1{mpq_class(1)};
    trim(r1);
    while (!r1.empty() && r1.size() > 1) {
        QPoly q, r;
        poly_divmod(r0, r1, q, r);
        QPoly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty())
        throw DivisionByZero();
    mpq_class c = r1[0];
    for (auto& x : s1)
        x /= c;
    return s1;
}

QPoly to_qpoly(const std::vector<mpz_class>& p)
{
    QPoly r;
    for (const auto& x : p)
        r.emplace_back(x);
    return r;
}

std::string rational_string(const mpq_class& q)
{
    return q.get_str();
}

} // namespace

std::uint64_t euler_phi(std::uint64_t n)
{
    std::uint64_t r = n, m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            while (m % d == 0)
                m /= d;
            r -= r / d;
        }
    }
    if (m > 1)
        r -= r / m;
    return r;
}

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

const std::vector<mpz_class>& cyclotomic_polynomial(std::uint64_t n)
{
    static std::mutex mu;
    static std::map<std::uint64_t, std::vector<mpz_class>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    QPoly num(n + 1, mpq_class(0));
    num[0] = -1;
    num[n] = 1;
    for (std::uint64_t d = 1; d < n; ++d) {
        if (n % d)
            continue;
        QPoly q, r;
        poly_divmod(num, to_qpoly(cyclotomic_polynomial(d)), q, r);
        num = q;
    }
    std::vector<mpz_class> out;
    for (const auto& c : num)
        out.push_back(c.get_num());
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(out)).first->second;
}

FieldSpec FieldSpec::rational()
{
    return FieldSpec{};
}

FieldSpec FieldSpec::cyclotomic(std::uint64_t n)
{
    if (n < 1)
        throw DomainError("cyclotomic order must be >= 1");
    FieldSpec f;
    f.kind = FieldKind::Cyclotomic;
    f.order = n;
    return f;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime");
    if (p >= (1ULL << 62))
        throw DomainError("prime too large");
    FieldSpec f;
    f.kind = FieldKind::Prime;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& text)
{
    auto number_after = [&](std::size_t pos) -> std::uint64_t {
        std::string rest = text.substr(pos);
        if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit) || rest.size() > 18)
            throw ParseError("bad field spec '" + text + "'");
        return std::stoull(rest);
    };
    if (text == "rational" || text == "Q")
        return rational();
    try {
        if (text.rfind("cyclotomic:", 0) == 0)
            return cyclotomic(number_after(11));
        if (text.rfind("prime:", 0) == 0)
            return prime(number_after(6));
    } catch (const DomainError& e) {
        throw ParseError("bad field spec '" + text + "': " + e.what());
    }
    throw ParseError("bad field spec '" + text + "'");
}

std::string FieldSpec::to_string() const
{
    switch (kind) {
    case FieldKind::Rational:
        return "rational";
    case FieldKind::Cyclotomic:
        return "cyclotomic:" + std::to_string(order);
    case FieldKind::Prime:
        return "prime:" + std::to_string(p);
    }
    return "?";
}

Scalar::Scalar() = default;

Scalar Scalar::zero(const FieldSpec& f)
{
    return from_int(f, 0);
}

Scalar Scalar::one(const FieldSpec& f)
{
    return from_int(f, 1);
}

Scalar Scalar::from_int(const FieldSpec& f, long v)
{
    return from_rational(f, mpq_class(v));
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& value)
{
    mpq_class q = value;
    q.canonicalize();
    Scalar s;
    s.field_ = f;
    switch (f.kind) {
    case FieldKind::Rational:
        s.q_ = q;
        s.q_.canonicalize();
        break;
    case FieldKind::Cyclotomic:
        s.c_.clear();
        if (q != 0)
            s.c_.push_back(q);
        break;
    case FieldKind::Prime: {
        std::uint64_t den = mpz_mod_u64(q.get_den(), f.p);
        if (den == 0)
            throw DivisionByZero();
        s.m_ = mulmod(mpz_mod_u64(q.get_num(), f.p), powmod(den, f.p - 2, f.p), f.p);
        break;
    }
    }
    return s;
}

Scalar Scalar::zeta(const FieldSpec& f, long k)
{
    if (f.kind != FieldKind::Cyclotomic)
        throw FieldMismatch("zeta requires a cyclotomic field");
    long n = static_cast<long>(f.order);
    long e = ((k % n) + n) % n;
    std::vector<mpq_class> raw(e + 1, mpq_class(0));
    raw[e] = 1;
    return cyclotomic(f.order, raw);
}

Scalar Scalar::cyclotomic(std::uint64_t n, const std::vector<mpq_class>& raw)
{
    Scalar s;
    s.field_ = FieldSpec::cyclotomic(n);
    QPoly folded(n, mpq_class(0));
    for (std::size_t k = 0; k < raw.size(); ++k) {
        mpq_class c = raw[k];
        c.canonicalize();
        folded[k % n] += c;
    }
    reduce_mod(folded, cyclotomic_polynomial(n));
    s.c_ = std::move(folded);
    return s;
}

Scalar Scalar::prime_element(const FieldSpec& f, std::uint64_t v)
{
    if (f.kind != FieldKind::Prime)
        throw FieldMismatch("prime_element requires a prime field");
    Scalar s;
    s.field_ = f;
    s.m_ = v % f.p;
    return s;
}

Scalar cyclotomic_reduce(const std::vector<mpq_class>& raw, std::uint64_t n)
{
    return Scalar::cyclotomic(n, raw);
}

void Scalar::require_same(const Scalar& o) const
{
    if (!(field_ == o.field_))
        throw FieldMismatch("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

bool Scalar::is_zero() const
{
    switch (field_.kind) {
    case FieldKind::Rational:
        return q_ == 0;
    case FieldKind::Cyclotomic:
        return c_.empty();
    case FieldKind::Prime:
        return m_ == 0;
    }
    return false;
}

bool Scalar::is_one() const
{
    return *this == one(field_);
}

Scalar Scalar::operator+(const Scalar& o) const
{
    require_same(o);
    Scalar r = *this;
    switch (field_.kind) {
    case FieldKind::Rational:
        r.q_ += o.q_;
        break;
    case FieldKind::Cyclotomic:
        if (r.c_.size() < o.c_.size())
            r.c_.resize(o.c_.size(), mpq_class(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            r.c_[i] += o.c_[i];
        trim(r.c_);
        break;
    case FieldKind::Prime:
        r.m_ = (m_ + o.m_) % field_.p;
        break;
    }
    return r;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    switch (field_.kind) {
    case FieldKind::Rational:
        r.q_ = -q_;
        break;
    case FieldKind::Cyclotomic:
        for (auto& x : r.c_)
            x = -x;
        break;
    case FieldKind::Prime:
        r.m_ = (field_.p - m_) % field_.p;
        break;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const
{
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const
{
    require_same(o);
    Scalar r = *this;
    switch (field_.kind) {
    case FieldKind::Rational:
        r.q_ *= o.q_;
        break;
    case FieldKind::Cyclotomic:
        r.c_ = poly_mul(c_, o.c_);
        reduce_mod(r.c_, cyclotomic_polynomial(field_.order));
        break;
    case FieldKind::Prime:
        r.m_ = mulmod(m_, o.m_, field_.p);
        break;
    }
    return r;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    Scalar r = *this;
    switch (field_.kind) {
    case FieldKind::Rational:
        r.q_ = 1 / q_;
        break;
    case FieldKind::Cyclotomic:
        r.c_ = poly_inverse_mod(c_, to_qpoly(cyclotomic_polynomial(field_.order)));
        reduce_mod(r.c_, cyclotomic_polynomial(field_.order));
        break;
    case FieldKind::Prime:
        r.m_ = powmod(m_, field_.p - 2, field_.p);
        break;
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    require_same(o);
    return *this * o.inverse();
}

Scalar Scalar::pow(long e) const
{
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar r = one(field_);
    while (k) {
        if (k & 1)
            r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

Scalar Scalar::conjugate() const
{
    if (field_.kind != FieldKind::Cyclotomic)
        return *this;
    std::uint64_t n = field_.order;
    std::vector<mpq_class> raw(n, mpq_class(0));
    for (std::size_t k = 0; k < c_.size(); ++k)
        raw[(n - k) % n] += c_[k];
    return cyclotomic_reduce(raw, n);
}

bool Scalar::operator==(const Scalar& o) const
{
    if (!(field_ == o.field_))
        return false;
    switch (field_.kind) {
    case FieldKind::Rational:
        return q_ == o.q_;
    case FieldKind::Cyclotomic:
        return c_ == o.c_;
    case FieldKind::Prime:
        return m_ == o.m_;
    }
    return false;
}

bool Scalar::operator<(const Scalar& o) const
{
    if (field_.kind != o.field_.kind)
        return field_.kind < o.field_.kind;
    if (field_.order != o.field_.order)
        return field_.order < o.field_.order;
    if (field_.p != o.field_.p)
        return field_.p < o.field_.p;
    switch (field_.kind) {
    case FieldKind::Rational:
        return q_ < o.q_;
    case FieldKind::Cyclotomic: {
        std::size_t n = std::max(c_.size(), o.c_.size());
        for (std::size_t i = 0; i < n; ++i) {
            mpq_class a = i < c_.size() ? c_[i] : mpq_class(0);
            mpq_class b = i < o.c_.size() ? o.c_[i] : mpq_class(0);
            if (a != b)
                return a < b;
        }
        return false;
    }
    case FieldKind::Prime:
        return m_ < o.m_;
    }
    return false;
}

bool Scalar::is_rational() const
{
    switch (field_.kind) {
    case FieldKind::Rational:
        return true;
    case FieldKind::Cyclotomic:
        return c_.size() <= 1;
    case FieldKind::Prime:
        return false;
    }
    return false;
}

mpq_class Scalar::rational_value() const
{
    if (!is_rational())
        throw DomainError("scalar " + to_string() + " is not rational");
    if (field_.kind == FieldKind::Rational)
        return q_;
    return c_.empty() ? mpq_class(0) : c_[0];
}

std::vector<mpq_class> Scalar::coeffs() const
{
    std::vector<mpq_class> out;
    switch (field_.kind) {
    case FieldKind::Rational:
        out.push_back(q_);
        break;
    case FieldKind::Cyclotomic:
        out.assign(field_.order, mpq_class(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            out[i] = c_[i];
        break;
    case FieldKind::Prime:
        out.emplace_back(std::to_string(m_));
        break;
    }
    return out;
}

std::complex<double> Scalar::approx() const
{
    switch (field_.kind) {
    case FieldKind::Rational:
        return q_.get_d();
    case FieldKind::Cyclotomic: {
        std::complex<double> z = 0;
        const double tau = 2.0 * std::acos(-1.0);
        for (std::size_t k = 0; k < c_.size(); ++k)
            z += c_[k].get_d() * std::polar(1.0, tau * double(k) / double(field_.order));
        return z;
    }
    case FieldKind::Prime:
        return double(m_);
    }
    return 0;
}

std::string Scalar::to_string() const
{
    switch (field_.kind) {
    case FieldKind::Rational:
        return rational_string(q_);
    case FieldKind::Prime:
        return std::to_string(m_) + " (mod " + std::to_string(field_.p) + ")";
    case FieldKind::Cyclotomic: {
        if (c_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        std::string z = "ζ" + std::to_string(field_.order);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            mpq_class c = c_[k];
            if (c == 0)
                continue;
            bool neg = c < 0;
            mpq_class a = neg ? mpq_class(-c) : c;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (k == 0) {
                os << rational_string(a);
                continue;
            }
            if (a != 1)
                os << rational_string(a) << "*";
            os << z;
            if (k > 1)
                os << "^" << k;
        }
        return os.str();
    }
    }
    return "?";
}

Scalar invert(const Scalar& x)
{
    return x.inverse();
}

Scalar conjugate(const Scalar& x)
{
    return x.conjugate();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

std::vector<Scalar> roots_of_unity(const FieldSpec& f)
{
    std::set<Scalar> out;
    switch (f.kind) {
    case FieldKind::Rational:
        out = {Scalar::from_int(f, 1), Scalar::from_int(f, -1)};
        break;
    case FieldKind::Cyclotomic:
        for (std::uint64_t k = 0; k < f.order; ++k) {
            Scalar z = Scalar::zeta(f, static_cast<long>(k));
            out.insert(z);
            out.insert(-z);
        }
        break;
    case FieldKind::Prime:
        if (f.p > (1u << 20))
            throw DomainError("root-of-unity enumeration limited to p < 2^20");
        for (std::uint64_t v = 1; v < f.p; ++v)
            out.insert(Scalar::prime_element(f, v));
        break;
    }
    return {out.begin(), out.end()};
}

namespace {

std::vector<mpq_class> rational_nth_roots(const mpq_class& q, unsigned n)
{
    if (q == 0)
        return {mpq_class(0)};
    if (q < 0 && n % 2 == 0)
        return {};
    mpz_class num = abs(q.get_num()), den = q.get_den(), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) || !mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n))
        return {};
    mpq_class r(rn, rd);
    r.canonicalize();
    if (n % 2 == 1)
        return {q < 0 ? mpq_class(-r) : r};
    return {mpq_class(-r), r};
}

// Best rational approximation with bounded denominator, or false.
bool rationalize(long double x, mpq_class& out)
{
    const long double tol = 1e-9L * std::max<long double>(1.0L, std::fabs(x));
    long double v = x;
    mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    for (int it = 0; it < 64; ++it) {
        long double a = std::floor(v);
        if (std::fabs(a) > 1e15L)
            return false;
        mpz_class ai(std::to_string(static_cast<long long>(a)));
        mpz_class h2 = ai * h0 + h1, k2 = ai * k0 + k1;
        h1 = h0;
        h0 = h2;
        k1 = k0;
        k0 = k2;
        if (k0 > mpz_class("100000000000"))
            return false;
        long double approx = h0.get_d() / k0.get_d();
        if (std::fabs(approx - x) <= tol) {
            out = mpq_class(h0, k0);
            out.canonicalize();
            return true;
        }
        long double frac = v - a;
        if (frac == 0)
            return false;
        v = 1 / frac;
    }
    return false;
}

using CLD = std::complex<long double>;

std::vector<CLD> solve_complex(std::vector<std::vector<CLD>> a, std::vector<CLD> b)
{
    std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col]))
                piv = r;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            CLD f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] /= a[i][i];
    return b;
}

std::vector<Scalar> cyclotomic_nth_roots(const Scalar& c, unsigned n)
{
    const FieldSpec& f = c.field();
    std::uint64_t m = f.order;
    std::set<Scalar> found;

    // Fast path: c = w * r with w a root of unity and r rational.
    for (const Scalar& w : roots_of_unity(f)) {
        Scalar r = c / w;
        if (!r.is_rational())
            continue;
        for (const auto& rr : rational_nth_roots(r.rational_value(), n)) {
            Scalar base = Scalar::from_rational(f, rr);
            for (const Scalar& z : roots_of_unity(f)) {
                Scalar y = base * z;
                if (y.pow(n) == c)
                    found.insert(y);
            }
        }
    }
    if (!found.empty())
        return {found.begin(), found.end()};

    // General path: branch over complex roots in each embedding pair,
    // reconstruct coefficients numerically and verify exactly.
    std::uint64_t phi = euler_phi(m);
    std::vector<std::uint64_t> units;
    for (std::uint64_t k = 1; k <= m; ++k)
        if (std::gcd(k, m) == 1)
            units.push_back(k % m);
    std::vector<std::uint64_t> reps;
    for (std::uint64_t k : units)
        if (m <= 2 || 2 * k < m)
            reps.push_back(k);
    const long double tau = 2.0L * std::acos(-1.0L);
    auto embed = [&](const Scalar& s, std::uint64_t k) {
        CLD z = 0;
        auto co = s.coeffs();
        for (std::size_t j = 0; j < co.size(); ++j)
            if (co[j] != 0)
                z += static_cast<long double>(co[j].get_d()) *
                     std::polar(1.0L, tau * static_cast<long double>((j * k) % m) / m);
        return z;
    };
    double combos = std::pow(double(n), double(reps.size()));
    if (combos > 2e5)
        throw DomainError("root search space too large");
    std::vector<std::vector<CLD>> vand(phi, std::vector<CLD>(phi));
    for (std::size_t r = 0; r < phi; ++r)
        for (std::size_t j = 0; j < phi; ++j)
            vand[r][j] = std::polar(1.0L, tau * static_cast<long double>((j * units[r]) % m) / m);
    std::vector<std::vector<CLD>> branch(reps.size());
    for (std::size_t r = 0; r < reps.size(); ++r) {
        CLD z = embed(c, reps[r]);
        long double mod = std::pow(std::abs(z), 1.0L / n), arg = std::arg(z);
        for (unsigned j = 0; j < n; ++j)
            branch[r].push_back(std::polar(mod, (arg + tau * j) / n));
    }
    std::vector<unsigned> idx(reps.size(), 0);
    while (true) {
        std::vector<CLD> target(phi);
        for (std::size_t r = 0; r < phi; ++r) {
            std::uint64_t k = units[r];
            for (std::size_t t = 0; t < reps.size(); ++t) {
                if (reps[t] == k)
                    target[r] = branch[t][idx[t]];
                else if (m > 2 && reps[t] == m - k)
                    target[r] = std::conj(branch[t][idx[t]]);
            }
        }
        auto sol = solve_complex(vand, target);
        std::vector<mpq_class> raw;
        bool ok = true;
        for (const auto& x : sol) {
            mpq_class q;
            if (!rationalize(x.real(), q)) {
                ok = false;
                break;
            }
            raw.push_back(q);
        }
        if (ok) {
            Scalar y = cyclotomic_reduce(raw, m);
            if (y.pow(n) == c)
                found.insert(y);
        }
        std::size_t t = 0;
        while (t < idx.size() && ++idx[t] == n)
            idx[t++] = 0;
        if (t == idx.size())
            break;
    }
    return {found.begin(), found.end()};
}

} // namespace

std::vector<Scalar> nth_roots(const Scalar& c, unsigned n)
{
    if (n == 0)
        throw DomainError("root degree must be positive");
    const FieldSpec& f = c.field();
    if (c.is_zero())
        return {c};
    switch (f.kind) {
    case FieldKind::Rational: {
        std::vector<Scalar> out;
        for (const auto& q : rational_nth_roots(c.rational_value(), n))
            out.push_back(Scalar::from_rational(f, q));
        return out;
    }
    case FieldKind::Prime: {
        if (f.p > (1u << 22))
            throw DomainError("prime-field root search limited to p < 2^22");
        std::vector<Scalar> out;
        for (std::uint64_t v = 1; v < f.p; ++v)
            if (powmod(v, n, f.p) == c.prime_value())
                out.push_back(Scalar::prime_element(f, v));
        return out;
    }
    case FieldKind::Cyclotomic:
        return cyclotomic_nth_roots(c, n);
    }
    return {};
}

} // namespace tckit
