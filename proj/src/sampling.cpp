#include "tckit/sampling.hpp"

namespace tckit {

Scalar random_nonzero_scalar(const FieldSpec& f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> small(-3, 3), den(1, 3);
    while (true) {
        Scalar s = Scalar::zero(f);
        switch (f.kind) {
        case FieldKind::Rational:
            s = Scalar::from_rational(f, mpq_class(small(rng), den(rng)));
            break;
        case FieldKind::Cyclotomic: {
            std::uint64_t phi = euler_phi(f.order);
            std::vector<mpq_class> raw;
            std::uniform_int_distribution<int> c(-2, 2);
            for (std::uint64_t k = 0; k < phi; ++k)
                raw.emplace_back(c(rng), den(rng));
            s = Scalar::cyclotomic(f.order, raw);
            break;
        }
        case FieldKind::Prime: {
            std::uniform_int_distribution<std::uint64_t> v(1, f.p - 1);
            s = Scalar::prime_element(f, v(rng));
            break;
        }
        }
        if (!s.is_zero())
            return s;
    }
}

GaugeTable random_gauge(const FSymbolTable& F, std::mt19937_64& rng)
{
    const FusionRing& R = F.ring();
    GaugeTable u;
    for (int a = 0; a < R.rank(); ++a)
        for (int b = 0; b < R.rank(); ++b)
            for (int c : R.products(a, b))
                if (a != R.unit() && b != R.unit())
                    u.emplace(Triple{a, b, c}, random_nonzero_scalar(F.field(), rng));
    return u;
}

} // namespace tckit
