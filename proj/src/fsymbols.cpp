#include "tckit/fsymbols.hpp"

#include <sstream>

namespace tckit {

namespace {

// Exact Gauss-Jordan inverse of a square row-major matrix; nullopt if singular.
std::optional<std::vector<Scalar>> invert_matrix(std::vector<Scalar> m, std::size_t n, const FieldSpec& field)
{
    std::vector<Scalar> inv(n * n, Scalar::zero(field));
    for (std::size_t i = 0; i < n; ++i)
        inv[i * n + i] = Scalar::one(field);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv * n + col].is_zero())
            ++piv;
        if (piv == n)
            return std::nullopt;
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(m[col * n + c], m[piv * n + c]);
            std::swap(inv[col * n + c], inv[piv * n + c]);
        }
        Scalar s = m[col * n + col].inverse();
        for (std::size_t c = 0; c < n; ++c) {
            m[col * n + c] *= s;
            inv[col * n + c] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r * n + col].is_zero())
                continue;
            Scalar f = m[r * n + col];
            for (std::size_t c = 0; c < n; ++c) {
                m[r * n + c] -= f * m[col * n + c];
                inv[r * n + c] -= f * inv[col * n + c];
            }
        }
    }
    return inv;
}

} // namespace

std::string hexatuple_text(const FusionRing& ring, const Hexatuple& h)
{
    std::ostringstream os;
    os << "(" << ring.label(h[0]) << "," << ring.label(h[1]) << "," << ring.label(h[2]) << ","
       << ring.label(h[3]) << ";" << ring.label(h[4]) << "," << ring.label(h[5]) << ")";
    return os.str();
}

FSymbolTable FSymbolTable::create(FusionRing ring, FieldSpec field, const std::map<Hexatuple, Scalar>& entries)
{
    FSymbolTable t;
    t.ring_ = std::move(ring);
    t.field_ = field;
    const FusionRing& R = t.ring_;
    int r = R.rank();
    for (const auto& [h, v] : entries) {
        for (int x : h)
            if (x < 0 || x >= r)
                throw ValidationError("F-entry index out of range");
        if (!(v.field() == field))
            throw ValidationError("F-entry " + hexatuple_text(R, h) + " lies in " + v.field().to_string() +
                                  ", expected " + field.to_string());
        auto [a, b, c, d, e, f] = h;
        bool adm = R.admissible(a, b, e) && R.admissible(e, c, d) && R.admissible(b, c, f) && R.admissible(a, f, d);
        if (!adm)
            throw ValidationError("F-entry given for inadmissible hexatuple " + hexatuple_text(R, h));
    }
    t.blocks_.resize(static_cast<std::size_t>(r) * r * r * r);
    int u = R.unit();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    Block& B = t.blocks_[((a * r + b) * r + c) * r + d];
                    B.e_pos.assign(r, -1);
                    B.f_pos.assign(r, -1);
                    for (int e : R.products(a, b))
                        if (R.admissible(e, c, d)) {
                            B.e_pos[e] = static_cast<int>(B.es.size());
                            B.es.push_back(e);
                        }
                    for (int f : R.products(b, c))
                        if (R.admissible(a, f, d)) {
                            B.f_pos[f] = static_cast<int>(B.fs.size());
                            B.fs.push_back(f);
                        }
                    if (B.es.size() != B.fs.size())
                        throw ValidationError("non-square F block; ring is not associative");
                    std::size_t n = B.es.size();
                    if (n == 0)
                        continue;
                    B.m.reserve(n * n);
                    for (int e : B.es)
                        for (int f : B.fs) {
                            Hexatuple h{a, b, c, d, e, f};
                            auto it = entries.find(h);
                            if (it == entries.end())
                                throw ValidationError("missing F-entry " + hexatuple_text(R, h));
                            if ((a == u || b == u || c == u) && !it->second.is_one())
                                throw ValidationError("unit F-entry " + hexatuple_text(R, h) + " is " +
                                                      it->second.to_string() + ", expected 1");
                            B.m.push_back(it->second);
                        }
                    auto inv = invert_matrix(B.m, n, field);
                    if (!inv) {
                        std::ostringstream os;
                        os << "F-matrix (" << R.label(a) << "," << R.label(b) << "," << R.label(c) << ";"
                           << R.label(d) << ") is singular";
                        throw ValidationError(os.str());
                    }
                    // Stored as [f][e]: inv was computed as [row f][col e] of M^{-1}.
                    B.inv = std::move(*inv);
                }
    return t;
}

const FSymbolTable::Block& FSymbolTable::block(int a, int b, int c, int d) const
{
    int r = rank();
    return blocks_[((a * r + b) * r + c) * r + d];
}

bool FSymbolTable::admissible(int a, int b, int c, int d, int e, int f) const
{
    const Block& B = block(a, b, c, d);
    return B.e_pos[e] >= 0 && B.f_pos[f] >= 0;
}

const Scalar& FSymbolTable::F(int a, int b, int c, int d, int e, int f) const
{
    const Block& B = block(a, b, c, d);
    if (B.e_pos[e] < 0 || B.f_pos[f] < 0)
        throw DomainError("inadmissible F-symbol " + hexatuple_text(ring_, {a, b, c, d, e, f}));
    return B.m[B.e_pos[e] * B.fs.size() + B.f_pos[f]];
}

Scalar FSymbolTable::F_or_zero(int a, int b, int c, int d, int e, int f) const
{
    const Block& B = block(a, b, c, d);
    if (B.e_pos[e] < 0 || B.f_pos[f] < 0)
        return Scalar::zero(field_);
    return B.m[B.e_pos[e] * B.fs.size() + B.f_pos[f]];
}

Scalar FSymbolTable::Finv_or_zero(int a, int b, int c, int d, int f, int e) const
{
    const Block& B = block(a, b, c, d);
    if (B.e_pos[e] < 0 || B.f_pos[f] < 0)
        return Scalar::zero(field_);
    return B.inv[B.f_pos[f] * B.es.size() + B.e_pos[e]];
}

const std::vector<int>& FSymbolTable::left_channels(int a, int b, int c, int d) const
{
    return block(a, b, c, d).es;
}

const std::vector<int>& FSymbolTable::right_channels(int a, int b, int c, int d) const
{
    return block(a, b, c, d).fs;
}

std::map<Hexatuple, Scalar> FSymbolTable::entries() const
{
    std::map<Hexatuple, Scalar> out;
    int r = rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    const Block& B = block(a, b, c, d);
                    for (std::size_t i = 0; i < B.es.size(); ++i)
                        for (std::size_t j = 0; j < B.fs.size(); ++j)
                            out.emplace(Hexatuple{a, b, c, d, B.es[i], B.fs[j]}, B.m[i * B.fs.size() + j]);
                }
    return out;
}

std::string PentagonReport::describe(const FusionRing& ring) const
{
    std::ostringstream os;
    if (ok) {
        os << "pentagon ok (" << instances << " instances)";
        return os.str();
    }
    const auto& w = witness;
    auto L = [&](int i) { return ring.label(i); };
    os << "pentagon violated at (a,b,c,d,e)=(" << L(w[0]) << "," << L(w[1]) << "," << L(w[2]) << "," << L(w[3])
       << "," << L(w[4]) << "), (f,g,k,l)=(" << L(w[5]) << "," << L(w[6]) << "," << L(w[7]) << "," << L(w[8])
       << "): lhs " << lhs->to_string() << ", rhs " << rhs->to_string();
    return os.str();
}

PentagonReport pentagon_check(const FSymbolTable& F)
{
    const FusionRing& R = F.ring();
    int r = R.rank();
    PentagonReport rep;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d)
                    for (int e = 0; e < r; ++e)
                        for (int f : R.products(a, b))
                            for (int g : R.products(f, c)) {
                                if (!R.admissible(g, d, e))
                                    continue;
                                for (int k = 0; k < r; ++k) {
                                    if (!R.admissible(a, k, e))
                                        continue;
                                    for (int l : R.products(c, d)) {
                                        if (!R.admissible(b, l, k))
                                            continue;
                                        ++rep.instances;
                                        Scalar lhs = F.F_or_zero(f, c, d, e, g, l) * F.F_or_zero(a, b, l, e, f, k);
                                        Scalar rhs = Scalar::zero(F.field());
                                        for (int h : R.products(b, c)) {
                                            if (!R.admissible(a, h, g) || !R.admissible(h, d, k))
                                                continue;
                                            rhs += F.F(a, b, c, g, f, h) * F.F(a, h, d, e, g, k) *
                                                   F.F(b, c, d, k, h, l);
                                        }
                                        if (lhs != rhs) {
                                            rep.ok = false;
                                            rep.witness = {a, b, c, d, e, f, g, k, l};
                                            rep.lhs = lhs;
                                            rep.rhs = rhs;
                                            return rep;
                                        }
                                    }
                                }
                            }
    return rep;
}

FSymbolTable gauge_transform(const FSymbolTable& F, const GaugeTable& u)
{
    const FusionRing& R = F.ring();
    const FieldSpec& field = F.field();
    for (const auto& [t, v] : u) {
        if (!(v.field() == field))
            throw FieldMismatch("gauge entry in wrong field");
        if (v.is_zero())
            throw DomainError("zero gauge entry at (" + R.label(t[0]) + "," + R.label(t[1]) + ";" +
                              R.label(t[2]) + ")");
        if ((t[0] == R.unit() || t[1] == R.unit()) && !v.is_one())
            throw DomainError("gauge entry on a unit vertex must be 1");
    }
    auto U = [&](int a, int b, int c) {
        auto it = u.find(Triple{a, b, c});
        return it == u.end() ? Scalar::one(field) : it->second;
    };
    std::map<Hexatuple, Scalar> out;
    for (const auto& [h, v] : F.entries()) {
        auto [a, b, c, d, e, f] = h;
        out.emplace(h, v * U(a, b, e) * U(e, c, d) / (U(b, c, f) * U(a, f, d)));
    }
    return FSymbolTable::create(R, field, out);
}

GaugeTable inverse_gauge(const GaugeTable& u)
{
    GaugeTable out;
    for (const auto& [t, v] : u)
        out.emplace(t, v.inverse());
    return out;
}

} // namespace tckit
