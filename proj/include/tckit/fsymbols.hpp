#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tckit/fusion_ring.hpp"
#include "tckit/scalar.hpp"

namespace tckit {

/// (a, b, c, d, e, f) for F^{abc}_d[e, f]; e is the a*b channel, f the b*c channel.
using Hexatuple = std::array<int, 6>;
/// (a, b, c) for the fusion vertex a (x) b -> c.
using Triple = std::array<int, 3>;

/// Skeletal associator data. The associator sends the tree ((a b)_e c)_d to
/// sum_f F^{abc}_d[e, f] (a (b c)_f)_d.
class FSymbolTable {
public:
    /// Checks completeness, absence of inadmissible entries, field
    /// consistency, unit strictness and invertibility (not the pentagon).
    static FSymbolTable create(FusionRing ring, FieldSpec field, const std::map<Hexatuple, Scalar>& entries);

    const FusionRing& ring() const { return ring_; }
    const FieldSpec& field() const { return field_; }
    int rank() const { return ring_.rank(); }

    bool admissible(int a, int b, int c, int d, int e, int f) const;
    /// Entry of an admissible hexatuple; throws DomainError otherwise.
    const Scalar& F(int a, int b, int c, int d, int e, int f) const;
    /// Entry, or zero when inadmissible.
    Scalar F_or_zero(int a, int b, int c, int d, int e, int f) const;
    /// Entry [f, e] of the inverse of the matrix F^{abc}_d, zero when inadmissible.
    Scalar Finv_or_zero(int a, int b, int c, int d, int f, int e) const;

    /// Admissible a*b channels e of the block (a, b, c, d), ascending.
    const std::vector<int>& left_channels(int a, int b, int c, int d) const;
    /// Admissible b*c channels f of the block (a, b, c, d), ascending.
    const std::vector<int>& right_channels(int a, int b, int c, int d) const;

    /// All entries in lexicographic hexatuple order.
    std::map<Hexatuple, Scalar> entries() const;

    friend bool operator==(const FSymbolTable& x, const FSymbolTable& y)
    {
        return x.ring_ == y.ring_ && x.field_ == y.field_ && x.entries() == y.entries();
    }

private:
    struct Block {
        std::vector<int> es, fs;
        std::vector<int> e_pos, f_pos;
        std::vector<Scalar> m;   // es.size() x fs.size(), row-major [e][f]
        std::vector<Scalar> inv; // fs.size() x es.size(), row-major [f][e]
    };

    FusionRing ring_;
    FieldSpec field_;
    std::vector<Block> blocks_; // indexed by ((a*r + b)*r + c)*r + d

    const Block& block(int a, int b, int c, int d) const;
};

std::string hexatuple_text(const FusionRing& ring, const Hexatuple& h);

struct PentagonReport {
    bool ok = true;
    std::size_t instances = 0;
    /// (a, b, c, d, e, f, g, k, l) for the identity
    /// F^{fcd}_e[g,l] F^{abl}_e[f,k] = sum_h F^{abc}_g[f,h] F^{ahd}_e[g,k] F^{bcd}_k[h,l].
    std::array<int, 9> witness{};
    std::optional<Scalar> lhs, rhs;

    std::string describe(const FusionRing& ring) const;
};

/// Evaluates every pentagon instance; reports the lexicographically first
/// violation in (a, b, c, d, e, f, g, k, l) order.
PentagonReport pentagon_check(const FSymbolTable& F);

using GaugeTable = std::map<Triple, Scalar>;

/// F'^{abc}_d[e,f] = F^{abc}_d[e,f] u^{ab}_e u^{ec}_d / (u^{bc}_f u^{af}_d).
/// Missing triples count as 1.
FSymbolTable gauge_transform(const FSymbolTable& F, const GaugeTable& u);

/// Entrywise inverse of a gauge.
GaugeTable inverse_gauge(const GaugeTable& u);

} // namespace tckit
