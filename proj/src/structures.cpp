#include "tckit/structures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

namespace tckit {

namespace {

struct Row {
    std::vector<long> e;
    Scalar c;
};

// row a <- row a - q * row b
void sub_multiple(Row& a, const Row& b, long q)
{
    if (q == 0)
        return;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        a.e[i] -= q * b.e[i];
    a.c *= b.c.pow(-q);
}

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

std::vector<std::vector<Scalar>> solve_multiplicative(std::size_t n, const std::vector<MultiplicativeEquation>& eqs,
                                                      const FieldSpec& field)
{
    std::vector<Row> rows;
    for (const auto& eq : eqs) {
        if (eq.exponents.size() != n)
            throw DomainError("equation has wrong number of exponents");
        if (eq.constant.is_zero())
            return {};
        rows.push_back(Row{eq.exponents, eq.constant});
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < n && pr < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = pr; r < rows.size(); ++r)
                if (rows[r].e[col] != 0 && (best == rows.size() || std::labs(rows[r].e[col]) < std::labs(rows[best].e[col])))
                    best = r;
            if (best == rows.size())
                break;
            std::swap(rows[pr], rows[best]);
            bool done = true;
            for (std::size_t r = pr + 1; r < rows.size(); ++r) {
                if (rows[r].e[col] == 0)
                    continue;
                sub_multiple(rows[r], rows[pr], floor_div(rows[r].e[col], rows[pr].e[col]));
                if (rows[r].e[col] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (pr < rows.size() && rows[pr].e[col] != 0) {
            if (rows[pr].e[col] < 0) {
                for (auto& x : rows[pr].e)
                    x = -x;
                rows[pr].c = rows[pr].c.inverse();
            }
            pivot_cols.push_back(col);
            ++pr;
        }
    }
    for (std::size_t r = pr; r < rows.size(); ++r)
        if (!rows[r].c.is_one())
            return {};
    std::vector<std::vector<Scalar>> partial{std::vector<Scalar>(n, Scalar::one(field))};
    if (pivot_cols.size() != n) {
        // Free variables: over a finite field they range over all units.
        if (field.kind != FieldKind::Prime)
            throw DomainError("multiplicative system has infinitely many solutions");
        std::size_t free = n - pivot_cols.size();
        double count = std::pow(static_cast<double>(field.p - 1), static_cast<double>(free));
        if (count > 1e6)
            throw DomainError("multiplicative system has too many solutions to enumerate");
        for (std::size_t col = 0; col < n; ++col) {
            if (std::find(pivot_cols.begin(), pivot_cols.end(), col) != pivot_cols.end())
                continue;
            std::vector<std::vector<Scalar>> next;
            for (const auto& x : partial)
                for (std::uint64_t v = 1; v < field.p; ++v) {
                    auto y = x;
                    y[col] = Scalar::prime_element(field, v);
                    next.push_back(std::move(y));
                }
            partial = std::move(next);
        }
    }
    for (std::size_t r = pr; r-- > 0;) {
        std::size_t col = pivot_cols[r];
        std::vector<std::vector<Scalar>> next;
        for (const auto& x : partial) {
            Scalar rhs = rows[r].c;
            for (std::size_t v = col + 1; v < n; ++v)
                if (rows[r].e[v] != 0)
                    rhs *= x[v].pow(-rows[r].e[v]);
            for (const Scalar& root : nth_roots(rhs, static_cast<unsigned>(rows[r].e[col]))) {
                if (root.is_zero())
                    continue;
                auto y = x;
                y[col] = root;
                next.push_back(std::move(y));
            }
        }
        partial = std::move(next);
    }
    std::set<std::vector<Scalar>> out;
    for (const auto& x : partial) {
        bool ok = true;
        for (const auto& eq : eqs) {
            Scalar v = Scalar::one(field);
            for (std::size_t i = 0; i < n; ++i)
                if (eq.exponents[i])
                    v *= x[i].pow(eq.exponents[i]);
            ok = ok && v == eq.constant;
        }
        if (ok)
            out.insert(x);
    }
    return {out.begin(), out.end()};
}

DoubleDualGauge double_dual_gauge(const FSymbolTable& F)
{
    const FusionRing& R = F.ring();
    Calculus C(F);
    WitnessTable W = standard_witnesses(F);
    DoubleDualGauge g;
    for (int i = 0; i < R.rank(); ++i)
        for (int j = 0; j < R.rank(); ++j)
            for (int k : R.products(i, j)) {
                Morphism b = C.split(i, j, k);
                Morphism bb = C.right_dual(C.right_dual(b, W, W), W, W);
                g.tau.emplace(Triple{i, j, k}, C.to_scalar(bb).value);
            }
    return g;
}

namespace {

std::vector<MultiplicativeEquation> pivotal_equations(const FSymbolTable& F, const DoubleDualGauge& g, int power)
{
    const FusionRing& R = F.ring();
    std::size_t n = R.rank();
    std::vector<MultiplicativeEquation> eqs;
    std::vector<long> unit(n, 0);
    unit[R.unit()] = 1;
    eqs.push_back({unit, Scalar::one(F.field())});
    for (const auto& [t, v] : g.tau) {
        std::vector<long> e(n, 0);
        e[t[0]] += 1;
        e[t[1]] += 1;
        e[t[2]] -= 1;
        eqs.push_back({e, v.pow(power)});
    }
    return eqs;
}

bool system_holds(const FSymbolTable& F, const DoubleDualGauge& g, const std::vector<Scalar>& p, int power)
{
    const FusionRing& R = F.ring();
    if (p.size() != static_cast<std::size_t>(R.rank()) || !p[R.unit()].is_one())
        return false;
    for (const auto& x : p)
        if (x.is_zero() || !(x.field() == F.field()))
            return false;
    for (const auto& [t, v] : g.tau)
        if (p[t[0]] * p[t[1]] != v.pow(power) * p[t[2]])
            return false;
    return true;
}

} // namespace

bool pivotal_valid(const FSymbolTable& F, const DoubleDualGauge& g, const std::vector<Scalar>& p)
{
    return system_holds(F, g, p, 1);
}

bool quadruple_witness_valid(const FSymbolTable& F, const DoubleDualGauge& g, const std::vector<Scalar>& q)
{
    return system_holds(F, g, q, 2);
}

std::vector<PivotalStructure> pivotal_solve(const FSymbolTable& F)
{
    DoubleDualGauge g = double_dual_gauge(F);
    std::vector<PivotalStructure> out;
    for (auto& p : solve_multiplicative(F.rank(), pivotal_equations(F, g, 1), F.field()))
        out.push_back(PivotalStructure{std::move(p)});
    return out;
}

std::vector<Scalar> quantum_dimensions(const FSymbolTable& F, const PivotalStructure& P)
{
    DualityChoices c = standard_choices(F);
    std::vector<Scalar> d;
    for (int i = 0; i < F.rank(); ++i)
        d.push_back(quantum_trace(F, c, i, P.p.at(i)));
    return d;
}

bool spherical_check(const FSymbolTable& F, const PivotalStructure& P)
{
    auto d = quantum_dimensions(F, P);
    for (int i = 0; i < F.rank(); ++i)
        if (d[i] != d[F.ring().dual(i)])
            return false;
    return true;
}

QuadrupleDualResult quadruple_dual_check(const FSymbolTable& F)
{
    const FusionRing& R = F.ring();
    DoubleDualGauge g = double_dual_gauge(F);
    DualityChoices c = standard_choices(F);
    Scalar one = Scalar::one(F.field());
    std::vector<Scalar> q;
    for (int i = 0; i < R.rank(); ++i) {
        int d = R.dual(i);
        q.push_back(g.tau.at(Triple{i, d, R.unit()}) * quantum_trace(F, c, d, one) / quantum_trace(F, c, i, one));
    }
    QuadrupleDualResult res;
    if (!quadruple_witness_valid(F, g, q)) {
        auto sols = solve_multiplicative(F.rank(), pivotal_equations(F, g, 2), F.field());
        if (sols.empty())
            return res;
        q = sols.front();
    }
    res.solvable = true;
    res.witness = q;
    res.distinguished_label = R.unit();
    return res;
}

} // namespace tckit
