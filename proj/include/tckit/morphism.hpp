#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tckit/fsymbols.hpp"

namespace tckit {

/// Parenthesized tensor word over simple labels. The unit object is the
/// leaf carrying the unit label.
class Word {
public:
    static Word leaf(int label);
    static Word pair(const Word& l, const Word& r);

    bool is_leaf() const { return label_ >= 0; }
    int label() const { return label_; }
    const Word& left() const { return *l_; }
    const Word& right() const { return *r_; }
    /// Number of nodes, leaves included.
    int size() const { return size_; }

    std::string to_string(const FusionRing& ring) const;

    bool operator==(const Word& o) const;
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const;

private:
    int label_ = -1;
    int size_ = 1;
    std::shared_ptr<const Word> l_, r_;
};

/// Node charges of a splitting tree in pre-order, leaves included; front()
/// is the total charge.
using Tree = std::vector<int>;

/// A morphism between words, stored in the basis split_t o fuse_s of
/// matching total charge. Keys are (target tree, source tree).
struct Morphism {
    Word source, target;
    std::map<std::pair<Tree, Tree>, Scalar> entries;
};

/// Scalar multiple of the canonical basis vector of a one-dimensional hom
/// space Hom(source, target).
struct MorphismScalar {
    Scalar value;
    Word source, target;
};

/// Left duality witnesses of one label x: coev_x = coev * split_{x* x}^1 and
/// ev_x = ev * fuse_{x x*}^1.
struct Witness {
    Scalar coev, ev;
};

/// Witness per label, used for every leaf of a word being dualized.
using WitnessTable = std::vector<Witness>;

/// Graphical calculus over one skeletal category.
class Calculus {
public:
    explicit Calculus(const FSymbolTable& F) : F_(F) {}

    const FSymbolTable& table() const { return F_; }
    const FusionRing& ring() const { return F_.ring(); }
    Word unit_word() const { return Word::leaf(ring().unit()); }

    std::vector<Tree> trees(const Word& w, int charge) const;
    std::vector<Tree> trees(const Word& w) const;

    Morphism zero(const Word& s, const Word& t) const;
    Morphism identity(const Word& w) const;
    Morphism compose(const Morphism& g, const Morphism& f) const; // g after f
    Morphism tensor(const Morphism& f, const Morphism& g) const;
    Morphism scale(const Morphism& f, const Scalar& s) const;
    Morphism add(const Morphism& f, const Morphism& g) const;

    /// (A B) C -> A (B C) and its inverse.
    Morphism assoc(const Word& A, const Word& B, const Word& C) const;
    Morphism assoc_inv(const Word& A, const Word& B, const Word& C) const;
    /// 1 A -> A, A 1 -> A and inverses.
    Morphism lunit(const Word& A) const;
    Morphism lunit_inv(const Word& A) const;
    Morphism runit(const Word& A) const;
    Morphism runit_inv(const Word& A) const;

    /// Leaf c -> (a b) and (a b) -> Leaf c basis vectors.
    Morphism split(int a, int b, int c) const;
    Morphism fuse(int a, int b, int c) const;

    /// Dimension of Hom(s, t).
    std::size_t hom_dimension(const Word& s, const Word& t) const;
    /// Coefficient of a morphism in a one-dimensional hom space.
    MorphismScalar to_scalar(const Morphism& f) const;
    Morphism from_scalar(const MorphismScalar& m) const;
    MorphismScalar compose(const MorphismScalar& g, const MorphismScalar& f) const;

    /// The word *W (equal to W* in a skeleton): labels dualized, order reversed.
    Word dual_word(const Word& w) const;

    /// ev_W : W (*W) -> 1 and coev_W : 1 -> (*W) W built from leaf witnesses.
    Morphism ev_word(const Word& w, const WitnessTable& table) const;
    Morphism coev_word(const Word& w, const WitnessTable& table) const;
    /// Right duality for W with W* = *W as words: ev^r : W* W -> 1,
    /// coev^r : 1 -> W W*. The right witness of a leaf a is the left witness of a*.
    Morphism ev_right_word(const Word& w, const WitnessTable& table) const;
    Morphism coev_right_word(const Word& w, const WitnessTable& table) const;

    /// *f : *B -> *A using coev of A from source_table and ev of B from target_table.
    Morphism left_dual(const Morphism& f, const WitnessTable& source_table, const WitnessTable& target_table) const;
    /// f* : B* -> A* using right witnesses of A and B.
    Morphism right_dual(const Morphism& f, const WitnessTable& source_table, const WitnessTable& target_table) const;

private:
    const FSymbolTable& F_;

    void enumerate(const Word& w, int charge, std::vector<Tree>& out) const;
    static void add_entry(Morphism& m, const Tree& t, const Tree& s, const Scalar& v);
};

} // namespace tckit
