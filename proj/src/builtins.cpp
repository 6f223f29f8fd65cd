#include "tckit/builtins.hpp"

#include <numeric>
#include <sstream>

#include "tckit/error.hpp"

namespace tckit {

namespace {

// sum_k c[k] z^k for a root of unity z of order n.
struct CycloValue {
    std::uint64_t n;
    std::vector<mpq_class> c;
};

Scalar evaluate(const CycloValue& v, const FieldSpec& field, const std::string& who)
{
    if (v.c.size() <= 1)
        return Scalar::from_rational(field, v.c.empty() ? mpq_class(0) : v.c[0]);
    auto z = primitive_root_of_unity(field, v.n);
    if (!z)
        throw DomainError(who + " requires a field containing a primitive " + std::to_string(v.n) +
                          "-th root of unity; " + field.to_string() + " does not");
    Scalar out = Scalar::zero(field), pw = Scalar::one(field);
    for (const auto& c : v.c) {
        out += Scalar::from_rational(field, c) * pw;
        pw *= *z;
    }
    return out;
}

CycloValue rat(long p, long q = 1)
{
    return CycloValue{1, {mpq_class(p, q)}};
}

std::vector<std::vector<int>> cyclic_table(int n)
{
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return t;
}

FSymbolTable table_from_values(const FusionRingData& data, const FieldSpec& field,
                               const std::map<Hexatuple, CycloValue>& special, const std::string& who)
{
    FusionRing R = validate_ring(data);
    int r = R.rank();
    std::map<Hexatuple, Scalar> entries;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int e : R.products(a, b))
                    for (int d : R.products(e, c))
                        for (int f : R.products(b, c)) {
                            if (!R.admissible(a, f, d))
                                continue;
                            Hexatuple h{a, b, c, d, e, f};
                            auto it = special.find(h);
                            entries.emplace(h, it == special.end() ? Scalar::one(field)
                                                                   : evaluate(it->second, field, who));
                        }
    return FSymbolTable::create(R, field, entries);
}

FSymbolTable certified(FSymbolTable t, const std::string& who)
{
    auto rep = pentagon_check(t);
    if (!rep.ok)
        throw ValidationError(who + ": " + rep.describe(t.ring()));
    return t;
}

FSymbolTable fibonacci(const FieldSpec& field)
{
    auto d = FusionRingData::empty({"1", "tau"});
    d.set(1, 1, 0);
    d.set(1, 1, 1);
    for (int x = 0; x < 2; ++x) {
        d.set(0, x, x);
        d.set(x, 0, x);
    }
    // phi^-1 = z + z^4 for a primitive fifth root of unity z.
    CycloValue inv_phi{5, {0, 1, 0, 0, 1}}, neg_inv_phi{5, {0, -1, 0, 0, -1}};
    std::map<Hexatuple, CycloValue> s{
        {{1, 1, 1, 1, 0, 0}, inv_phi},
        {{1, 1, 1, 1, 0, 1}, rat(1)},
        {{1, 1, 1, 1, 1, 0}, inv_phi},
        {{1, 1, 1, 1, 1, 1}, neg_inv_phi},
    };
    return table_from_values(d, field, s, "fibonacci");
}

FSymbolTable ising(const FieldSpec& field)
{
    // labels: 0 = 1, 1 = psi, 2 = sigma
    auto d = FusionRingData::empty({"1", "psi", "sigma"});
    for (int x = 0; x < 3; ++x) {
        d.set(0, x, x);
        d.set(x, 0, x);
    }
    d.set(1, 1, 0);
    d.set(1, 2, 2);
    d.set(2, 1, 2);
    d.set(2, 2, 0);
    d.set(2, 2, 1);
    // 1/sqrt2 = (z + z^7) / 2 for a primitive eighth root of unity z.
    mpq_class h(1, 2);
    CycloValue s2{8, {0, h, 0, 0, 0, 0, 0, h}}, ms2{8, {0, -h, 0, 0, 0, 0, 0, -h}};
    std::map<Hexatuple, CycloValue> s{
        {{2, 2, 2, 2, 0, 0}, s2}, {{2, 2, 2, 2, 0, 1}, s2},   {{2, 2, 2, 2, 1, 0}, s2},
        {{2, 2, 2, 2, 1, 1}, ms2}, {{2, 1, 2, 1, 2, 2}, rat(-1)}, {{1, 2, 1, 2, 2, 2}, rat(-1)},
    };
    return table_from_values(d, field, s, "ising");
}

FSymbolTable rep_s3(const FieldSpec& field)
{
    // labels: 0 = 1, 1 = s (sign), 2 = rho (standard)
    auto d = FusionRingData::empty({"1", "s", "rho"});
    for (int x = 0; x < 3; ++x) {
        d.set(0, x, x);
        d.set(x, 0, x);
    }
    d.set(1, 1, 0);
    d.set(1, 2, 2);
    d.set(2, 1, 2);
    d.set(2, 2, 0);
    d.set(2, 2, 1);
    d.set(2, 2, 2);
    std::map<Hexatuple, CycloValue> s{
        {{1, 2, 2, 2, 2, 2}, rat(-1)}, {{2, 1, 2, 2, 2, 2}, rat(-1)},
        {{2, 2, 1, 2, 2, 2}, rat(-1)}, {{2, 2, 2, 1, 2, 2}, rat(-1)},
    };
    const long m[3][3][2] = {{{1, 2}, {1, 2}, {1, 1}}, {{1, 2}, {1, 2}, {-1, 1}}, {{1, 2}, {-1, 2}, {0, 1}}};
    for (int e = 0; e < 3; ++e)
        for (int f = 0; f < 3; ++f)
            s[{2, 2, 2, 2, e, f}] = rat(m[e][f][0], m[e][f][1]);
    return table_from_values(d, field, s, "rep_s3");
}

// Parses "z<n>" or "z<n>xz<m>..." into cyclic orders.
std::vector<int> parse_group(const std::string& g)
{
    std::vector<int> orders;
    std::stringstream ss(g);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        if (part.size() < 2 || part[0] != 'z' || part.find_first_not_of("0123456789", 1) != std::string::npos)
            throw ParseError("bad group '" + g + "' (expected z<n> or z<n>xz<m>...)");
        int n = std::stoi(part.substr(1));
        if (n < 1 || n > 64)
            throw ParseError("cyclic order out of range in '" + g + "'");
        orders.push_back(n);
    }
    if (orders.empty())
        throw ParseError("empty group spec");
    return orders;
}

FSymbolTable vec_g(const std::string& spec, std::optional<FieldSpec> field)
{
    // spec = <group>[:<k>]
    std::string group = spec, kpart;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        group = spec.substr(0, pos);
        kpart = spec.substr(pos + 1);
    }
    std::vector<int> orders = parse_group(group);
    long k = 0;
    if (!kpart.empty()) {
        if (kpart.find_first_not_of("0123456789") != std::string::npos || kpart.size() > 6)
            throw ParseError("bad cocycle index '" + kpart + "'");
        k = std::stol(kpart);
        if (orders.size() != 1)
            throw ParseError("cocycle index only supported for a single cyclic group");
    }
    int size = std::accumulate(orders.begin(), orders.end(), 1, std::multiplies<int>());
    if (size > 64)
        throw ParseError("group too large");
    // Mixed-radix encoding of group elements.
    auto decode = [&](int g) {
        std::vector<int> v;
        for (int n : orders) {
            v.push_back(g % n);
            g /= n;
        }
        return v;
    };
    auto encode = [&](const std::vector<int>& v) {
        int g = 0, mul = 1;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            g += v[i] * mul;
            mul *= orders[i];
        }
        return g;
    };
    std::vector<std::vector<int>> table(size, std::vector<int>(size));
    std::vector<std::string> labels;
    for (int a = 0; a < size; ++a) {
        auto va = decode(a);
        std::string lab;
        for (std::size_t i = 0; i < va.size(); ++i)
            lab += (i ? "." : "") + std::to_string(va[i]);
        labels.push_back(lab);
        for (int b = 0; b < size; ++b) {
            auto vb = decode(b);
            for (std::size_t i = 0; i < va.size(); ++i)
                vb[i] = (va[i] + vb[i]) % orders[i];
            table[a][b] = encode(vb);
        }
    }
    int n = orders[0];
    k %= n;
    FieldSpec f = field ? *field : (k == 0 || n <= 2 ? FieldSpec::rational() : FieldSpec::cyclotomic(n));
    std::vector<Scalar> omega(static_cast<std::size_t>(size) * size * size, Scalar::one(f));
    if (k != 0) {
        std::vector<mpq_class> zc(n, mpq_class(0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if (b + c < n)
                        continue;
                    std::vector<mpq_class> raw(n, mpq_class(0));
                    raw[(k * a) % n] = 1;
                    omega[(a * n + b) * n + c] = evaluate(CycloValue{static_cast<std::uint64_t>(n), raw}, f,
                                                          "vec_g:" + spec);
                }
    }
    return pointed_category(table, omega, f, labels);
}

} // namespace

std::optional<Scalar> primitive_root_of_unity(const FieldSpec& field, std::uint64_t n)
{
    if (n == 1)
        return Scalar::one(field);
    if (n == 2)
        return field.kind == FieldKind::Prime && field.p == 2 ? std::nullopt
                                                              : std::optional<Scalar>(Scalar::from_int(field, -1));
    switch (field.kind) {
    case FieldKind::Rational:
        return std::nullopt;
    case FieldKind::Cyclotomic: {
        std::uint64_t N = field.order;
        if (N % n == 0)
            return Scalar::zeta(field, static_cast<long>(N / n));
        // For odd N the field also holds the 2N-th roots of unity.
        for (const Scalar& z : roots_of_unity(field)) {
            bool exact = z.pow(static_cast<long>(n)).is_one();
            for (std::uint64_t d = 1; d < n && exact; ++d)
                if (n % d == 0 && z.pow(static_cast<long>(d)).is_one())
                    exact = false;
            if (exact)
                return z;
        }
        return std::nullopt;
    }
    case FieldKind::Prime: {
        std::uint64_t p = field.p;
        if ((p - 1) % n != 0)
            return std::nullopt;
        for (std::uint64_t g = 2; g < p; ++g) {
            Scalar z = Scalar::prime_element(field, g).pow(static_cast<long>((p - 1) / n));
            bool exact = true;
            for (std::uint64_t d = 1; d < n && exact; ++d)
                if (n % d == 0 && z.pow(static_cast<long>(d)).is_one())
                    exact = false;
            if (exact)
                return z;
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

FSymbolTable pointed_category(const std::vector<std::vector<int>>& table, const std::vector<Scalar>& omega,
                              const FieldSpec& field, std::vector<std::string> labels)
{
    FusionRing R = ring_from_group(table, std::move(labels));
    int n = R.rank();
    if (omega.size() != static_cast<std::size_t>(n) * n * n)
        throw ValidationError("cocycle table must have |G|^3 entries");
    auto w = [&](int a, int b, int c) -> const Scalar& { return omega[(a * n + b) * n + c]; };
    int e = R.unit();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const Scalar& v = w(a, b, c);
                if (!(v.field() == field))
                    throw ValidationError("cocycle value in wrong field");
                if (v.is_zero())
                    throw ValidationError("cocycle value vanishes at (" + R.label(a) + "," + R.label(b) + "," +
                                          R.label(c) + ")");
                if ((a == e || b == e || c == e) && !v.is_one())
                    throw ValidationError("cocycle is not normalized at (" + R.label(a) + "," + R.label(b) + "," +
                                          R.label(c) + ")");
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    int ab = table[a][b], bc = table[b][c], cd = table[c][d];
                    if (w(b, c, d) * w(a, bc, d) * w(a, b, c) != w(ab, c, d) * w(a, b, cd))
                        throw RingAxiomError("3-cocycle", {a, b, c, d},
                                             "cocycle condition violated at (" + R.label(a) + "," + R.label(b) +
                                                 "," + R.label(c) + "," + R.label(d) + ")");
                }
    std::map<Hexatuple, Scalar> entries;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int ab = table[a][b], bc = table[b][c], abc = table[ab][c];
                entries.emplace(Hexatuple{a, b, c, abc, ab, bc}, w(a, b, c));
            }
    return certified(FSymbolTable::create(R, field, entries), "pointed category");
}

std::vector<BuiltinInfo> builtin_list()
{
    return {
        {"trivial", "Vec, rank 1, over Q"},
        {"vec_z2", "Vect[Z/2] with trivial cocycle, over Q"},
        {"vec_z2_semion", "Vect[Z/2] with omega(g,g,g) = -1, over Q"},
        {"vec_z3", "Vect[Z/3] with trivial cocycle, over Q"},
        {"vec_g:<group>[:<k>]", "Vect[G, omega] for G = z<n> or z<n>xz<m>..., cocycle index k on cyclic G"},
        {"fibonacci", "Fibonacci category over Q(zeta5)"},
        {"ising", "Ising category over Q(zeta8)"},
        {"rep_s3", "Rep(S3) over Q"},
    };
}

FSymbolTable builtin(const std::string& name, std::optional<FieldSpec> field)
{
    auto pick = [&](FieldSpec dflt) { return field ? *field : dflt; };
    if (name == "trivial") {
        auto d = FusionRingData::empty({"1"});
        d.set(0, 0, 0);
        return certified(table_from_values(d, pick(FieldSpec::rational()), {}, name), name);
    }
    if (name == "vec_z2" || name == "vec_z2_semion" || name == "vec_z3") {
        int n = name == "vec_z3" ? 3 : 2;
        FieldSpec f = pick(FieldSpec::rational());
        std::vector<std::string> labels = n == 2 ? std::vector<std::string>{"1", "g"}
                                                 : std::vector<std::string>{"1", "g", "g2"};
        std::vector<Scalar> omega(n * n * n, Scalar::one(f));
        if (name == "vec_z2_semion")
            omega[7] = Scalar::from_int(f, -1);
        return pointed_category(cyclic_table(n), omega, f, labels);
    }
    if (name.rfind("vec_g:", 0) == 0)
        return vec_g(name.substr(6), field);
    if (name == "fibonacci")
        return certified(fibonacci(pick(FieldSpec::cyclotomic(5))), name);
    if (name == "ising")
        return certified(ising(pick(FieldSpec::cyclotomic(8))), name);
    if (name == "rep_s3")
        return certified(rep_s3(pick(FieldSpec::rational())), name);
    throw ParseError("unknown builtin '" + name + "'");
}

} // namespace tckit
