#pragma once

#include "monrep/base_algebra.hpp"
#include "monrep/quiver.hpp"

namespace monrep {

/// Tensor-algebra context: the coefficient algebra A together with the bound
/// outer quiver (Q, I).  Modules over A tensor kQ/I are handled branchwise as
/// representations of (Q, I) with values in A-modules.
class LambdaContext {
public:
    LambdaContext(BaseAlgebra base, Quiver quiver, MonomialIdeal ideal);

    const BaseAlgebra& base() const { return base_; }
    const Quiver& quiver() const { return quiver_; }
    const MonomialIdeal& ideal() const { return ideal_; }
    const Field& field() const { return base_.field(); }
    int vertex_count() const { return quiver_.vertex_count(); }

    /// All nonzero outer paths including the lazy ones, (length, lex)-sorted.
    const std::vector<Path>& nonzero_paths() const { return nonzero_; }
    /// Nonzero outer paths of length >= 1 from j to i (cached), block order.
    const std::vector<Path>& paths(int j, int i) const;

private:
    BaseAlgebra base_;
    Quiver quiver_;
    MonomialIdeal ideal_;
    std::vector<Path> nonzero_;
    std::vector<std::vector<std::vector<Path>>> between_; // [j-1][i-1]
};

/// Representation of (Q, I) over A: an A-module per outer vertex and an A-map
/// per outer arrow, with every ideal generator acting as zero.  branch[v-1]
/// sits at the vertex labeled v.
struct LambdaRep {
    std::vector<AModule> branch;
    std::vector<AMap> arrow;

    const AModule& at(int vertex) const { return branch[vertex - 1]; }
    AModule& at(int vertex) { return branch[vertex - 1]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

LambdaRep zero_rep(const LambdaContext& c);
void validate_rep(const LambdaContext& c, const LambdaRep& x);
/// Composite A-map along an outer path (identity at the vertex when trivial).
AMap path_map(const LambdaContext& c, const LambdaRep& x, const Path& p);

/// Morphism of representations: an A-map per outer vertex commuting with the
/// outer arrow maps.
struct LambdaMorphism {
    std::vector<AMap> comp;
    const AMap& at(int vertex) const { return comp[vertex - 1]; }
    AMap& at(int vertex) { return comp[vertex - 1]; }
};

LambdaMorphism identity_morphism(const LambdaContext& c, const LambdaRep& x);
LambdaMorphism zero_morphism(const LambdaContext& c, const LambdaRep& dom, const LambdaRep& cod);
void validate_morphism(const LambdaContext& c, const LambdaRep& dom, const LambdaRep& cod,
                       const LambdaMorphism& f);
LambdaMorphism compose_morphism(const LambdaMorphism& g, const LambdaMorphism& f); // g after f
LambdaMorphism morphism_add(const LambdaContext& c, const LambdaMorphism& f,
                            const LambdaMorphism& g);
LambdaMorphism morphism_scale(const LambdaContext& c, const LambdaMorphism& f, const Scalar& s);
bool morphism_is_injective(const LambdaMorphism& f);
bool morphism_is_surjective(const LambdaRep& cod, const LambdaMorphism& f);
bool morphism_is_zero(const LambdaMorphism& f);

/// Basis of the morphism space (branchwise A-map conditions plus the
/// commutation squares over the outer arrows).
std::vector<LambdaMorphism> rep_hom_space(const LambdaContext& c, const LambdaRep& x,
                                          const LambdaRep& y);
int rep_hom_dim(const LambdaContext& c, const LambdaRep& x, const LambdaRep& y);

struct SubRepData {
    LambdaRep rep;
    LambdaMorphism inclusion;
};
struct QuotRepData {
    LambdaRep rep;
    LambdaMorphism projection;
    std::vector<AMap> section; // branchwise k-linear splittings
};

SubRepData rep_kernel(const LambdaContext& c, const LambdaRep& dom, const LambdaRep& cod,
                      const LambdaMorphism& f);
SubRepData rep_image(const LambdaContext& c, const LambdaRep& dom, const LambdaRep& cod,
                     const LambdaMorphism& f);
QuotRepData rep_cokernel(const LambdaContext& c, const LambdaRep& dom, const LambdaRep& cod,
                         const LambdaMorphism& f);

struct RepDirectSum {
    LambdaRep rep;
    std::vector<LambdaMorphism> inclusions;
    std::vector<LambdaMorphism> projections;
};
RepDirectSum rep_direct_sum(const LambdaContext& c, const std::vector<LambdaRep>& parts);

/// Exactness of 0 -> X -f-> Y -g-> Z -> 0, checked branchwise.
bool is_short_exact(const LambdaContext& c, const LambdaRep& x, const LambdaRep& y,
                    const LambdaRep& z, const LambdaMorphism& f, const LambdaMorphism& g);

/// m tensored with the outer projective at v: the branch at i carries one copy
/// of m per nonzero outer path v -> i (the lazy path included when i = v) and
/// outer arrows shift copies along path composition, killing those that land
/// in the ideal.
struct TensorRep {
    int vertex = 0;
    LambdaRep rep;
    std::vector<std::vector<Path>> copies; // copies[i-1]: paths v -> i, block order
};
TensorRep tensor_pv(const LambdaContext& c, const AModule& m, int v);

/// Seeded random representation: random branches, then arrow maps drawn from
/// the linear solution space of the relation constraints, filled in by
/// descending source label so each constraint is linear when it activates.
LambdaRep random_rep(const LambdaContext& c, std::mt19937_64& rng, int dim_cap = 4);
/// Random combination of a basis of the morphism space.
LambdaMorphism random_morphism(const LambdaContext& c, const LambdaRep& x, const LambdaRep& y,
                               std::mt19937_64& rng);

} // namespace monrep
