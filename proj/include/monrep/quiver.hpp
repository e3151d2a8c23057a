#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monrep/errors.hpp"

namespace monrep {

struct Arrow {
    std::string name;
    int source = 0; // vertex labels are 1-based
    int target = 0;
};

class Quiver;

/// Path in a quiver.  Arrows are stored in application order: arrows()[0] is
/// applied first, arrows().back() last.  Composition is right-to-left, so the
/// dotted notation "a.b.g" (g applied first) stores {g, b, a}.  A length-0
/// path is the lazy path at its vertex.
class Path {
public:
    static Path trivial(int vertex);
    static Path of_arrow(const Quiver& q, int arrow_id);
    /// Validates that consecutive arrows compose (target of one = source of next).
    static Path walk(const Quiver& q, const std::vector<int>& arrows_in_application_order);

    int length() const { return int(arrows_.size()); }
    bool is_trivial() const { return arrows_.empty(); }
    int source() const { return source_; }
    int target() const { return target_; }
    const std::vector<int>& arrows() const { return arrows_; }
    int last_arrow() const; // the arrow applied last

    /// this ∘ rhs (rhs applied first); requires rhs.target() == this->source().
    Path after(const Path& rhs) const;

    /// Dotted right-to-left display, e.g. "a.b2.g"; trivial paths show "e_3".
    std::string display(const Quiver& q) const;

    friend bool operator==(const Path&, const Path&) = default;
    /// Order by (length, lex arrow ids in application order).
    friend bool path_less(const Path& a, const Path& b);

private:
    Path(int s, int t, std::vector<int> arr) : source_(s), target_(t), arrows_(std::move(arr)) {}
    int source_;
    int target_;
    std::vector<int> arrows_;
};

bool path_less(const Path& a, const Path& b);

/// Finite quiver with vertices labeled 1..n so that every arrow goes from a
/// strictly larger label to a strictly smaller one (sinks near 1, sources near
/// n).  This forces acyclicity and makes vertex n a source.
class Quiver {
public:
    Quiver(int vertex_count, std::vector<Arrow> arrows);

    int vertex_count() const { return n_; }
    int arrow_count() const { return int(arrows_.size()); }
    const Arrow& arrow(int id) const { return arrows_[id]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::optional<int> arrow_id_by_name(const std::string& name) const;

    const std::vector<int>& arrows_into(int vertex) const { return into_[vertex]; }
    const std::vector<int>& arrows_out_of(int vertex) const { return out_[vertex]; }

private:
    int n_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> into_, out_; // indexed by vertex label
};

/// Monomial admissible ideal: generating paths of length >= 2, minimal in the
/// sense that no generator contains another as a contiguous subpath.
class MonomialIdeal {
public:
    MonomialIdeal(const Quiver& q, std::vector<Path> generators);

    const std::vector<Path>& generators() const { return gens_; }

    /// True iff some generator occurs as a contiguous subword of p.
    bool in_ideal(const Path& p) const;

private:
    std::vector<Path> gens_;
};

/// All nonzero paths (not in the ideal), including the length-0 path at every
/// vertex, sorted by (length, lex arrow ids).  Finite because Q is acyclic.
std::vector<Path> enumerate_nonzero_paths(const Quiver& q, const MonomialIdeal& ideal);

/// Nonzero paths of length >= 1 from j to i.  Requires j != i.
std::vector<Path> paths_between(const Quiver& q, const MonomialIdeal& ideal, int j, int i);

/// k_set(p): nonzero paths q of length >= 1 into s(p) with pq in the ideal.
std::vector<Path> k_set(const Quiver& q, const MonomialIdeal& ideal, const Path& p);

/// Arrow index sets controlling kernels of path maps:
/// b1 = arrows b into s(p) with pb in the ideal;
/// b2 = arrows b into s(p) with pb not in the ideal but pq in the ideal for
///      some nonzero q into s(p) whose last arrow is b.
/// Disjoint by construction.
struct BSets {
    std::vector<int> b1;
    std::vector<int> b2;
};
BSets b_sets(const Quiver& q, const MonomialIdeal& ideal, const Path& p);

/// Reversed quiver with vertices relabeled v -> n+1-v so the labeling
/// invariant still holds; arrow ids are preserved.
struct OppositeQuiver {
    Quiver quiver;
    MonomialIdeal ideal;
};
OppositeQuiver opposite(const Quiver& q, const MonomialIdeal& ideal);

/// Drops the source vertex n (arrows out of it and generators starting at it).
/// Arrow ids are compacted; arrow_id_map[old] = new id or -1 when dropped.
struct SourceDeleted {
    Quiver quiver;
    MonomialIdeal ideal;
    std::vector<int> arrow_id_map;
};
SourceDeleted delete_source_vertex(const Quiver& q, const MonomialIdeal& ideal);

} // namespace monrep
