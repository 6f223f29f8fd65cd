#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tckit {

// ---------------------------------------------------------------- framings

/// Homotopy class of an n-framing of the interval: an integer for n = 2,
/// a bit for n >= 3.
struct FramingClass {
    int n = 2;
    long value = 0;

    static FramingClass identity(int n);
    /// The loop bordism: -1 in dimension 2.
    static FramingClass loop(int n);
    FramingClass stabilize(int m) const;
    friend bool operator==(const FramingClass&, const FramingClass&) = default;
};

FramingClass framing_compose(const FramingClass& a, const FramingClass& b);

enum class NormalSide { Left, Right };

struct Point2 {
    mpq_class x, y;
};

struct FramedImmersedCircle {
    std::vector<Point2> vertices;
    NormalSide side = NormalSide::Left;
};

/// Exact Whitney turning number of a closed polygon (counterclockwise
/// positive). Throws DomainError on zero edges or antipodal tangents.
long turning_number(const std::vector<Point2>& vertices);

/// s * t with s = +1 for a left normal, -1 for a right normal.
long circle_invariant(const FramedImmersedCircle& c);

// ---------------------------------------------------------- word calculus

using ObjectWord = std::vector<int>;

/// Generator g whiskered by identity objects on both sides.
struct Slice {
    ObjectWord left;
    int gen = -1;
    ObjectWord right;
    friend bool operator==(const Slice&, const Slice&) = default;
    friend auto operator<=>(const Slice&, const Slice&) = default;
};

/// A 1-cell: slices in diagrammatic order between two object words.
struct Path {
    ObjectWord source, target;
    std::vector<Slice> slices;
    friend bool operator==(const Path&, const Path&) = default;
};

/// One whiskered 2-cell generator (or its formal inverse) acting on the
/// slices [pos, pos + |source|) of the current 1-cell.
struct Layer {
    std::size_t pos = 0;
    ObjectWord left, right;
    int gen = -1;
    bool inverse = false;
    friend bool operator==(const Layer&, const Layer&) = default;
    friend auto operator<=>(const Layer&, const Layer&) = default;
};

using LayerList = std::vector<Layer>;

/// A 2-cell: a source 1-cell and the layers applied to it in order.
struct Cell2 {
    Path source;
    LayerList layers;
    Path target;
};

struct OneCellGen {
    std::string name;
    ObjectWord source, target;
};

struct TwoCellGen {
    std::string name;
    Path source, target;
};

/// F -| G with unit eta : id => G F and counit eps : F G => id. In path
/// order eta produces [F, G] and eps consumes [G, F].
struct Adjunction {
    int left, right, unit, counit;
};

/// left -| right between 2-cells; only the counit 3-cell left o right => id
/// is used, as a one-way contraction.
struct CellAdjunction {
    int left, right;
};

class Signature {
public:
    int add_object(const std::string& name);
    int add_one_cell(const std::string& name, const ObjectWord& source, const ObjectWord& target);
    /// Boundary 1-cells given as plain generator lists with identity pads.
    int add_two_cell(const std::string& name, const ObjectWord& from, const ObjectWord& to,
                     const std::vector<int>& source, const std::vector<int>& target);
    void add_alias(const std::string& alias, const std::string& name);
    void add_macro(const std::string& name, const std::string& text);
    void declare_adjunction(int left, int right, int unit, int counit);
    void declare_cell_adjunction(int left, int right);
    void declare_invertible(int two_cell);

    std::optional<int> object(const std::string& name) const;
    std::optional<int> one_cell(const std::string& name) const;
    std::optional<int> two_cell(const std::string& name) const;
    const std::string* macro(const std::string& name) const;

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<OneCellGen>& one_cells() const { return one_; }
    const std::vector<TwoCellGen>& two_cells() const { return two_; }
    const std::vector<Adjunction>& adjunctions() const { return adj_; }
    const std::vector<CellAdjunction>& cell_adjunctions() const { return cell_adj_; }
    bool invertible(int two_cell) const { return invertible_.count(two_cell) > 0; }

    std::string object_text(const ObjectWord& w) const;
    std::string path_text(const Path& p) const;
    std::string layer_text(const Layer& l) const;
    std::string layers_text(const LayerList& l) const;

private:
    std::string resolve(const std::string& name) const;
    std::vector<std::string> objects_;
    std::vector<OneCellGen> one_;
    std::vector<TwoCellGen> two_;
    std::vector<Adjunction> adj_;
    std::vector<CellAdjunction> cell_adj_;
    std::set<int> invertible_;
    std::map<std::string, std::string> alias_, macro_;
};

/// Objects P+, P-; 1-cells ev, coev, evL, evR, coevL, coevR, swap; 2-cells
/// u1, v1 (evL -| ev; aliases ut, vt), u2, v2 (ev -| evR), v2R, u2R
/// (evR -| ev); cell adjunctions v2 -| v2R and u2 -| u2R; macros serre,
/// serre_inv, radford, radford_inv, radford_conj.
const Signature& bordism_signature();
/// The same without the derived adjunction evR -| ev.
const Signature& bordism_base_signature();

enum class TermKind { Object, OneCell, TwoCell };

struct Term {
    TermKind kind = TermKind::Object;
    ObjectWord object;
    Path path;
    Cell2 cell;
};

/// Grammar: expr := name | f(expr, ...), f in comp, side, tensor, id, inv.
/// comp is diagrammatic; side(A, B) is the horizontal composite A (.) B
/// with B's 1-cell first. Lower kinds are promoted to identities.
/// Throws ParseError on bad syntax and ValidationError on ill-typed terms.
Term parse_term(const std::string& text, const Signature& sig = bordism_signature());

Path identity_path(const ObjectWord& w);
Cell2 identity_cell(const Path& p);
Path compose_paths(const Path& a, const Path& b);
Path tensor_paths(const Path& a, const Path& b);
Cell2 vertical(const Cell2& a, const Cell2& b);
Cell2 side(const Cell2& a, const Cell2& b);
Cell2 tensor_cells(const Cell2& a, const Cell2& b);

/// Path after one layer, or nullopt if it does not apply.
std::optional<Path> apply_layer(const Signature& sig, const Path& p, const Layer& l);
/// Throws ValidationError naming the first bad layer.
Path typecheck(const Signature& sig, const Path& source, const LayerList& layers);

Path serre_word();
Path inverse_serre_word();
Cell2 radford_word();
Cell2 radford_inverse_word();
/// (id (x) ev) o (swap (x) id) o (id (x) R) : inverse Serre => Serre.
Cell2 radford_conjugated_word();

// ------------------------------------------------------------- rewriting

struct RewriteOptions {
    std::size_t budget = 10000; // TCKIT_REWRITE_BUDGET overrides the default
    bool interchange = true;
    bool zigzags = true;
    bool inverses = true;
    bool counits = true;
};

RewriteOptions default_rewrite_options();

struct TraceStep {
    std::string rule;
    LayerList state;
};

struct RewriteResult {
    bool success = false;
    std::size_t expansions = 0;
    std::vector<TraceStep> trace; // trace[0] is the start, rule empty
    std::vector<LayerList> frontier;
};

/// Bidirectional best-first search for a chain of rule applications from
/// lhs to rhs. Both cells must have the same source and target.
RewriteResult rewrite_check(const Signature& sig, const Cell2& lhs, const Cell2& rhs,
                            const RewriteOptions& opt = default_rewrite_options());

/// Rule applications leading out of a state in the forward direction.
std::vector<TraceStep> forward_moves(const Signature& sig, const Path& source, const LayerList& state,
                                     const RewriteOptions& opt);

/// Checks that the trace runs from lhs to rhs, that every step is a forward
/// move of the previous state and that every state typechecks with the
/// common boundary.
bool replay_trace(const Signature& sig, const Cell2& lhs, const Cell2& rhs, const std::vector<TraceStep>& trace,
                  const RewriteOptions& opt, std::string* why = nullptr);

std::string trace_text(const Signature& sig, const std::vector<TraceStep>& trace);

struct AmbidexterityReport {
    bool ok = false;
    RewriteResult first, second; // zigzag on f, zigzag on fR
};

/// For f -| fR with unit u and counit v: if u, v have left adjoints (or,
/// with use_right_adjoints, right adjoints) then these exhibit fR -| f.
/// Rewrites both zigzag composites of the new adjunction to identities.
AmbidexterityReport verify_ambidexterity(bool use_right_adjoints, const RewriteOptions& opt = default_rewrite_options());

/// The same statement on the bordism signature: v2R, u2R make evR -| ev.
AmbidexterityReport verify_bordism_ambidexterity(const RewriteOptions& opt = default_rewrite_options());

} // namespace tckit
