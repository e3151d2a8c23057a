#pragma once

#include "monrep/lambda.hpp"

namespace monrep {

/// The outer bound quiver algebra kQ/I realized as a BaseAlgebra over the
/// context's field (vertex v becomes index v-1).  Its global dimension is
/// finite because Q is acyclic.
BaseAlgebra outer_algebra(const LambdaContext& c);
int outer_global_dimension(const LambdaContext& c);

/// Opposite context: opposite coefficient algebra, reversed outer quiver with
/// vertices relabeled v -> n+1-v, reversed ideal generators.
LambdaContext opposite_context(const LambdaContext& c);

/// Direct sum of the indecomposable projectives P_A(u) tensor P(v), with the
/// bookkeeping needed for adjunction-style Hom coordinates:
///   Hom(sum, Y)  =  direct sum over summands s of (Y at v_s) at inner u_s.
/// Inside branch i the block of summand s is one copy of P_A(u_s) per outer
/// path v_s -> i, copies ordered as in `copies`, inner columns ordered as in
/// `inner[s].path_ids`.
struct LambdaProjSum {
    std::vector<std::pair<int, int>> summands; // (inner vertex u, outer vertex v)
    LambdaRep rep;
    std::vector<ProjectiveModule> inner;                // P_A(u_s)
    std::vector<std::vector<std::vector<Path>>> copies; // [s][i-1]: paths v_s -> i
    std::vector<std::vector<std::vector<int>>> offset;  // [s][i-1][w]: column offset

    /// Column of the generator e_{u_s} tensor e_{v_s} inside branch v_s at
    /// inner vertex u_s.
    int generator_column(const BaseAlgebra& a, int s) const;
    int summand_count() const { return int(summands.size()); }
};
LambdaProjSum lambda_proj_sum(const LambdaContext& c,
                              const std::vector<std::pair<int, int>>& summands);

/// The regular representation: one summand P_A(u) tensor P(v) for every pair,
/// i.e. the algebra as a module over itself.
LambdaProjSum regular_rep(const LambdaContext& c);

/// Morphism out of a projective sum determined by the images of the summand
/// generators: gens[s] is a vector in (X at v_s) at inner vertex u_s.
LambdaMorphism morphism_from_generators(const LambdaContext& c, const LambdaProjSum& ps,
                                        const LambdaRep& x,
                                        const std::vector<std::vector<Scalar>>& gens);

struct LambdaCover {
    LambdaProjSum cover;
    LambdaMorphism onto;
};
/// Minimal cover: summands match a basis of X modulo (inner radical + images
/// of the incoming outer arrows) at each vertex.
LambdaCover rep_projective_cover(const LambdaContext& c, const LambdaRep& x);
/// Non-minimal counit-style cover (one summand per branch basis vector), kept
/// to cross-check resolution independence of the Ext values.
LambdaCover rep_projective_cover_crude(const LambdaContext& c, const LambdaRep& x);

struct LambdaResolution {
    std::vector<LambdaProjSum> steps;  // F_0, F_1, ..., F_L
    std::vector<LambdaMorphism> maps;  // maps[0]: F_0 -> X, maps[j]: F_j -> F_{j-1}
    std::vector<LambdaRep> syzygies;   // K_0 = X, K_1, ...
    bool terminated = false;
};
LambdaResolution rep_resolve(const LambdaContext& c, const LambdaRep& x, int length,
                             bool minimal = true);

/// dim Ext^i(X, Y) for i = 0..max_i (index 0 = morphism-space dimension).
std::vector<int> rep_ext_dims(const LambdaContext& c, const LambdaRep& x, const LambdaRep& y,
                              int max_i, bool minimal = true);

/// Transpose over the opposite context, from a minimal projective presentation.
LambdaRep rep_transpose(const LambdaContext& c, const LambdaContext& cop, const LambdaRep& x);

/// Randomized isomorphism test (random combinations of a hom basis).
bool rep_is_isomorphic(const LambdaContext& c, const LambdaRep& x, const LambdaRep& y,
                       std::uint64_t seed, int trials = 32);

/// Decides Gorenstein-projectivity of a representation by direct homological
/// computation over the tensor algebra (no use of the monic criterion):
///  - semisimple coefficients: finite global dimension, so GP = projective and
///    a terminating resolution decides exactly;
///  - selfinjective coefficients: the algebra is Gorenstein with injective
///    dimension at most the outer global dimension nu, so GP is equivalent to
///    Ext^{1..nu}(X, Lambda) = 0, decided exactly;
///  - bounded: two-sided Ext scan (module and transpose) to the given depth
///    with a syzygy-periodicity upgrade, as for base algebras;
///  - automatic picks the strongest applicable mode.
GPVerdict rep_gp_check(const LambdaContext& c, const LambdaRep& x, const GPConfig& cfg = {});

} // namespace monrep
