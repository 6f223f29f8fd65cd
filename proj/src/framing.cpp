#include "tckit/bordism.hpp"
#include "tckit/error.hpp"

namespace tckit {

FramingClass FramingClass::identity(int n)
{
    if (n < 2)
        throw DomainError("framing dimension must be at least 2");
    return FramingClass{n, 0};
}

FramingClass FramingClass::loop(int n)
{
    return n == 2 ? FramingClass{2, -1} : FramingClass{identity(n).n, 1};
}

FramingClass FramingClass::stabilize(int m) const
{
    if (m < n)
        throw DomainError("cannot destabilize a framing class");
    if (m == n)
        return *this;
    long v = ((value % 2) + 2) % 2;
    return FramingClass{m, v};
}

FramingClass framing_compose(const FramingClass& a, const FramingClass& b)
{
    if (a.n != b.n)
        throw DomainError("framing classes of different dimension");
    if (a.n == 2)
        return FramingClass{2, a.value + b.value};
    return FramingClass{a.n, (a.value + b.value) % 2};
}

namespace {

mpq_class cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
mpq_class dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

} // namespace

long turning_number(const std::vector<Point2>& input)
{
    std::vector<Point2> v = input;
    for (auto& p : v) {
        p.x.canonicalize();
        p.y.canonicalize();
    }
    if (v.size() > 1 && v.front().x == v.back().x && v.front().y == v.back().y)
        v.pop_back();
    const std::size_t m = v.size();
    if (m < 3)
        throw DomainError("a closed polygon needs at least 3 vertices");
    std::vector<Point2> d(m);
    for (std::size_t k = 0; k < m; ++k) {
        const Point2& a = v[k];
        const Point2& b = v[(k + 1) % m];
        d[k] = Point2{b.x - a.x, b.y - a.y};
        if (sgn(d[k].x) == 0 && sgn(d[k].y) == 0)
            throw DomainError("zero-length edge at vertex " + std::to_string(k));
    }
    for (std::size_t k = 0; k < m; ++k) {
        const Point2& a = d[k];
        const Point2& b = d[(k + 1) % m];
        if (sgn(cross(a, b)) == 0 && sgn(dot(a, b)) < 0)
            throw DomainError("antipodal tangents at vertex " + std::to_string((k + 1) % m));
    }
    // Winding number of the tangent polygon about the origin; each short
    // turning arc is homotopic to the chord, which misses the origin.
    long wn = 0;
    for (std::size_t k = 0; k < m; ++k) {
        const Point2& a = d[k];
        const Point2& b = d[(k + 1) % m];
        if (sgn(a.y) <= 0) {
            if (sgn(b.y) > 0 && sgn(cross(a, b)) > 0)
                ++wn;
        } else if (sgn(b.y) <= 0 && sgn(cross(a, b)) < 0) {
            --wn;
        }
    }
    return wn;
}

long circle_invariant(const FramedImmersedCircle& c)
{
    long t = turning_number(c.vertices);
    return c.side == NormalSide::Left ? t : -t;
}

} // namespace tckit
