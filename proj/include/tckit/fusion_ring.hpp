#pragma once

#include <string>
#include <vector>

#include "tckit/error.hpp"

namespace tckit {

/// Unvalidated ring data as read from a file or built by hand.
struct FusionRingData {
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> dual;
    /// N[(i * r + j) * r + k] = N_{ij}^k.
    std::vector<int> N;

    int rank() const { return static_cast<int>(labels.size()); }
    int& n(int i, int j, int k) { return N[(i * rank() + j) * rank() + k]; }
    int n(int i, int j, int k) const { return N[(i * rank() + j) * rank() + k]; }

    /// Ring with the given labels and all N zero; dual defaults to identity.
    static FusionRingData empty(std::vector<std::string> labels, int unit = 0);
    void set(int i, int j, int k) { n(i, j, k) = 1; }
};

/// A ring axiom failure with the witnessing index tuple.
struct RingAxiomError : ValidationError {
    RingAxiomError(std::string axiom, std::vector<int> witness, const std::string& message)
        : ValidationError(message), axiom(std::move(axiom)), witness(std::move(witness))
    {
    }
    std::string axiom;
    std::vector<int> witness;
};

/// Sealed multiplicity-free fusion ring. Only validate_ring and
/// ring_from_group produce one.
class FusionRing {
public:
    int rank() const { return data_.rank(); }
    int unit() const { return data_.unit; }
    int dual(int i) const { return data_.dual[i]; }
    int N(int i, int j, int k) const { return data_.n(i, j, k); }
    bool admissible(int i, int j, int k) const { return data_.n(i, j, k) != 0; }
    /// Labels k with N_{ij}^k = 1, ascending.
    const std::vector<int>& products(int i, int j) const { return products_[i * rank() + j]; }

    const std::string& label(int i) const { return data_.labels[i]; }
    const std::vector<std::string>& labels() const { return data_.labels; }
    /// Index of a label name; throws ValidationError when absent.
    int index_of(const std::string& name) const;

    const FusionRingData& data() const { return data_; }

    friend bool operator==(const FusionRing& a, const FusionRing& b)
    {
        return a.data_.labels == b.data_.labels && a.data_.unit == b.data_.unit &&
               a.data_.dual == b.data_.dual && a.data_.N == b.data_.N;
    }

private:
    friend FusionRing validate_ring(const FusionRingData& candidate);
    FusionRingData data_;
    std::vector<std::vector<int>> products_;
};

FusionRing validate_ring(const FusionRingData& candidate);

/// Pointed ring of a finite group given by its multiplication table
/// (table[g][h] = index of gh). Labels default to "0", "1", ...
FusionRing ring_from_group(const std::vector<std::vector<int>>& table,
                           std::vector<std::string> labels = {});

/// Frobenius-Perron dimension of label i (power iteration, tolerance 1e-10).
double fp_dimension(const FusionRing& ring, int i);

} // namespace tckit
