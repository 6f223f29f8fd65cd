#include "tckit/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tckit {

namespace {

std::string tuple_text(const FusionRingData& d, const std::vector<int>& t)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            os << ",";
        int x = t[i];
        if (x >= 0 && x < d.rank())
            os << d.labels[x];
        else
            os << x;
    }
    os << ")";
    return os.str();
}

[[noreturn]] void fail(const FusionRingData& d, const std::string& axiom, std::vector<int> witness)
{
    std::string msg = axiom + " axiom violated at " + tuple_text(d, witness);
    throw RingAxiomError(axiom, std::move(witness), msg);
}

} // namespace

FusionRingData FusionRingData::empty(std::vector<std::string> labels, int unit)
{
    FusionRingData d;
    int r = static_cast<int>(labels.size());
    d.labels = std::move(labels);
    d.unit = unit;
    d.dual.resize(r);
    for (int i = 0; i < r; ++i)
        d.dual[i] = i;
    d.N.assign(static_cast<std::size_t>(r) * r * r, 0);
    return d;
}

int FusionRing::index_of(const std::string& name) const
{
    auto it = std::find(data_.labels.begin(), data_.labels.end(), name);
    if (it == data_.labels.end())
        throw ValidationError("unknown label '" + name + "'");
    return static_cast<int>(it - data_.labels.begin());
}

FusionRing validate_ring(const FusionRingData& d)
{
    int r = d.rank();
    if (r < 1)
        throw ValidationError("ring must have at least one label");
    if (d.N.size() != static_cast<std::size_t>(r) * r * r)
        throw ValidationError("fusion table has wrong size");
    if (d.dual.size() != static_cast<std::size_t>(r))
        throw ValidationError("dual map has wrong size");
    if (d.unit < 0 || d.unit >= r)
        fail(d, "unit", {d.unit});
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (d.labels[i] == d.labels[j])
                fail(d, "distinct-labels", {i, j});
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (d.n(i, j, k) != 0 && d.n(i, j, k) != 1)
                    fail(d, "multiplicity-free", {i, j, k});
    int u = d.unit;
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            int delta = j == k ? 1 : 0;
            if (d.n(u, j, k) != delta || d.n(j, u, k) != delta)
                fail(d, "unit", {j, k});
        }
    for (int i = 0; i < r; ++i) {
        int di = d.dual[i];
        if (di < 0 || di >= r || d.dual[di] != i)
            fail(d, "dual-involution", {i});
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if ((d.n(i, j, u) == 1) != (j == d.dual[i]))
                fail(d, "duality", {i, j});
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l) {
                    int lhs = 0, rhs = 0;
                    for (int m = 0; m < r; ++m) {
                        lhs += d.n(i, j, m) * d.n(m, k, l);
                        rhs += d.n(j, k, m) * d.n(i, m, l);
                    }
                    if (lhs != rhs)
                        fail(d, "associativity", {i, j, k, l});
                }
    FusionRing ring;
    ring.data_ = d;
    ring.products_.resize(static_cast<std::size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (d.n(i, j, k))
                    ring.products_[i * r + j].push_back(k);
    return ring;
}

FusionRing ring_from_group(const std::vector<std::vector<int>>& table, std::vector<std::string> labels)
{
    int r = static_cast<int>(table.size());
    if (r == 0)
        throw ValidationError("group table is empty");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != r)
            throw ValidationError("group table is not square");
    for (int g = 0; g < r; ++g)
        for (int h = 0; h < r; ++h)
            if (table[g][h] < 0 || table[g][h] >= r)
                throw RingAxiomError("closure", {g, h}, "group closure violated at (" + std::to_string(g) + "," +
                                                            std::to_string(h) + ")");
    int e = -1;
    for (int g = 0; g < r && e < 0; ++g) {
        bool ok = true;
        for (int h = 0; h < r; ++h)
            ok = ok && table[g][h] == h && table[h][g] == h;
        if (ok)
            e = g;
    }
    if (e < 0)
        throw RingAxiomError("identity", {}, "group table has no identity element");
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw RingAxiomError("group-associativity", {a, b, c},
                                         "group associativity violated at (" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) + ")");
    std::vector<int> inv(r, -1);
    for (int g = 0; g < r; ++g) {
        for (int h = 0; h < r; ++h)
            if (table[g][h] == e && table[h][g] == e)
                inv[g] = h;
        if (inv[g] < 0)
            throw RingAxiomError("inverse", {g}, "group element " + std::to_string(g) + " has no inverse");
    }
    if (labels.empty())
        for (int g = 0; g < r; ++g)
            labels.push_back(std::to_string(g));
    FusionRingData d = FusionRingData::empty(std::move(labels), e);
    for (int g = 0; g < r; ++g) {
        d.dual[g] = inv[g];
        for (int h = 0; h < r; ++h)
            d.set(g, h, table[g][h]);
    }
    return validate_ring(d);
}

double fp_dimension(const FusionRing& ring, int i)
{
    // Power iteration on (N_i + I): same Perron vector, but no other
    // eigenvalue shares its modulus, so the iteration cannot oscillate.
    int r = ring.rank();
    std::vector<double> v(r, 1.0), w(r);
    double prev = -1.0;
    for (int it = 0; it < 1000000; ++it) {
        double lo = INFINITY, hi = 0;
        for (int j = 0; j < r; ++j) {
            double s = v[j];
            for (int k : ring.products(i, j))
                s += v[k];
            w[j] = s;
            lo = std::min(lo, s / v[j]);
            hi = std::max(hi, s / v[j]);
        }
        double norm = *std::max_element(w.begin(), w.end());
        for (int j = 0; j < r; ++j)
            v[j] = w[j] / norm;
        if (hi - lo < 1e-11 || (it > 100 && std::fabs(hi - prev) < 1e-13))
            return hi - 1.0;
        prev = hi;
    }
    return prev - 1.0;
}

} // namespace tckit
