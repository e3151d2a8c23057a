#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monrep/subspace.hpp"

namespace monrep {

struct BaseArrow {
    std::string name;
    int source = 0; // 0-based vertex index
    int target = 0;
};

/// Path in the coefficient-algebra quiver, arrows in application order.
/// Loops and cycles are allowed here (unlike the outer quiver).
struct BasePath {
    int start = 0;           // vertex, meaningful also when arrows is empty
    std::vector<int> arrows;
    friend bool operator==(const BasePath&, const BasePath&) = default;
    friend auto operator<=>(const BasePath&, const BasePath&) = default;
};

/// Finite-dimensional monomial bound-quiver algebra over an exact field.
/// The basis is the set of nonzero paths; finiteness is certified by a length
/// cap during enumeration (a nonzero path longer than the cap is an error).
class BaseAlgebra {
public:
    BaseAlgebra(Field f, std::vector<std::string> vertex_names, std::vector<BaseArrow> arrows,
                std::vector<std::vector<int>> relation_words, int length_cap = 64);

    const Field& field() const { return field_; }
    int vertex_count() const { return int(vertex_names_.size()); }
    const std::string& vertex_name(int v) const { return vertex_names_[v]; }
    std::optional<int> vertex_index(const std::string& name) const;
    int arrow_count() const { return int(arrows_.size()); }
    const BaseArrow& arrow(int id) const { return arrows_[id]; }
    std::optional<int> arrow_id_by_name(const std::string& name) const;
    const std::vector<std::vector<int>>& relation_words() const { return relations_; }

    int dim() const { return int(basis_.size()); }
    const std::vector<BasePath>& basis() const { return basis_; }
    int path_end(const BasePath& p) const;
    /// Basis index of a path, or -1 when the path is zero in the algebra.
    int basis_index(const BasePath& p) const;
    const std::vector<int>& basis_from(int vertex) const { return from_[vertex]; }
    const std::vector<int>& basis_ending_at(int vertex) const { return into_[vertex]; }

    bool is_semisimple() const { return arrows_.empty(); }

    /// Same vertices, reversed arrows, reversed relation words.
    BaseAlgebra opposite() const;

private:
    Field field_;
    std::vector<std::string> vertex_names_;
    std::vector<BaseArrow> arrows_;
    std::vector<std::vector<int>> relations_;
    std::vector<BasePath> basis_;
    std::map<BasePath, int> index_;
    std::vector<std::vector<int>> from_, into_;
};

/// Finite-dimensional left module, presented as a representation of the
/// algebra's quiver: a space per vertex, a matrix per arrow, relations acting
/// by zero.
struct AModule {
    std::vector<int> dims;
    std::vector<Matrix> arrow_act; // per arrow: dims[target] x dims[source]

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

AModule zero_module(const BaseAlgebra& a);
AModule simple_module(const BaseAlgebra& a, int vertex);
AModule semisimple_module(const BaseAlgebra& a, const std::vector<int>& multiplicities);
void validate_module(const BaseAlgebra& a, const AModule& m);
/// Action of a path (composition of arrow matrices), a dims[end] x dims[start] matrix.
Matrix path_action(const BaseAlgebra& a, const AModule& m, const BasePath& p);

/// Map of modules: one matrix per vertex, commuting with every arrow action.
struct AMap {
    std::vector<Matrix> mats;
};

AMap identity_map(const BaseAlgebra& a, const AModule& m);
AMap zero_map(const BaseAlgebra& a, const AModule& dom, const AModule& cod);
void validate_map(const BaseAlgebra& a, const AModule& dom, const AModule& cod, const AMap& f);
AMap compose(const AMap& g, const AMap& f); // g after f
AMap map_add(const BaseAlgebra& a, const AMap& f, const AMap& g);
AMap map_scale(const BaseAlgebra& a, const AMap& f, const Scalar& s);
bool map_is_injective(const AMap& f);
bool map_is_surjective(const AModule& cod, const AMap& f);

/// Basis of Hom(dom, cod) as a list of maps (kernel of the commutation system).
std::vector<AMap> hom_space(const BaseAlgebra& a, const AModule& dom, const AModule& cod);

struct SubmoduleData {
    AModule mod;
    AMap inclusion; // mod -> ambient
};
struct QuotientModuleData {
    AModule mod;
    AMap projection; // ambient -> mod
    AMap section;    // k-linear splitting (not a module map in general)
};

/// Per-vertex family of subspaces of a module, e.g. an image or a radical.
using SubspaceFamily = std::vector<Subspace>;

SubspaceFamily zero_family(const BaseAlgebra& a, const AModule& m);
bool family_is_invariant(const BaseAlgebra& a, const AModule& m, const SubspaceFamily& s);
/// Closes the spans of the given per-vertex generating vectors under all arrow actions.
SubspaceFamily invariant_closure(const BaseAlgebra& a, const AModule& m,
                                 const std::vector<std::vector<std::vector<Scalar>>>& gens);
SubmoduleData submodule_from_family(const BaseAlgebra& a, const AModule& m,
                                    const SubspaceFamily& s);
QuotientModuleData quotient_by_family(const BaseAlgebra& a, const AModule& m,
                                      const SubspaceFamily& s);

SubmoduleData kernel_of(const BaseAlgebra& a, const AModule& dom, const AModule& cod,
                        const AMap& f);
SubmoduleData image_of(const BaseAlgebra& a, const AModule& dom, const AModule& cod,
                       const AMap& f);
QuotientModuleData cokernel_of(const BaseAlgebra& a, const AModule& dom, const AModule& cod,
                               const AMap& f);

struct DirectSumData {
    AModule mod;
    std::vector<AMap> inclusions;
    std::vector<AMap> projections;
};
DirectSumData direct_sum(const BaseAlgebra& a, const std::vector<AModule>& parts);

SubspaceFamily radical_family(const BaseAlgebra& a, const AModule& m);

/// Indecomposable projective P(v) = (paths out of v); path_ids[u] lists the
/// algebra basis indices forming the block at vertex u, in matrix column order.
struct ProjectiveModule {
    int vertex = 0;
    AModule mod;
    std::vector<std::vector<int>> path_ids;
};
ProjectiveModule projective_module(const BaseAlgebra& a, int vertex);
std::vector<ProjectiveModule> indecomposable_projectives(const BaseAlgebra& a);

/// Indecomposable injective: dual of the right projective at the vertex.
/// path_ids[u] lists (paths u -> vertex) per block column.
struct InjectiveModule {
    int vertex = 0;
    AModule mod;
    std::vector<std::vector<int>> path_ids;
};
InjectiveModule dual_injective(const BaseAlgebra& a, int vertex);
std::vector<InjectiveModule> dual_injectives(const BaseAlgebra& a);

AModule regular_module(const BaseAlgebra& a); // direct sum of all P(v)

/// Finite direct sum of indecomposable projectives with bookkeeping for
/// adjunction-style Hom coordinates: Hom(sum, N) = direct sum of N at the
/// summand vertices.
struct ProjSum {
    std::vector<int> summand_vertices;
    AModule mod;
    /// block_offset[s][u]: column offset of summand s inside vertex u;
    /// paths_at[s][u]: algebra basis ids of the block columns (paths v_s -> u).
    std::vector<std::vector<int>> block_offset;
    std::vector<std::vector<std::vector<int>>> paths_at;

    int generator_index(const BaseAlgebra& a, int s) const; // index of e_{v_s} at vertex v_s
};
ProjSum make_proj_sum(const BaseAlgebra& a, const std::vector<int>& vertices);

struct ProjCover {
    ProjSum cover;
    AMap onto;
};
/// Minimal cover: one summand P(v) per basis vector of top(M) = M/rad(M).
ProjCover projective_cover(const BaseAlgebra& a, const AModule& m);
/// Non-minimal comparison cover: dim M_v summands P(v) per vertex, hitting
/// every basis vector.  Kept to cross-check resolution independence of Ext.
ProjCover projective_cover_crude(const BaseAlgebra& a, const AModule& m);

struct AResolution {
    std::vector<ProjSum> steps;    // F_0, F_1, ..., F_L
    std::vector<AMap> maps;        // maps[0] = eps: F_0 -> M; maps[j] = d_j: F_j -> F_{j-1}
    std::vector<AModule> syzygies; // K_0 = M, K_1, ...; K_j = ker(F_{j-1} -> K_{j-1})
    bool terminated = false;       // reached a zero syzygy
};
AResolution resolve(const BaseAlgebra& a, const AModule& m, int length, bool minimal = true);

/// dim Ext^i(M, N) for i = 0..max_i (index 0 = dim Hom).
std::vector<int> ext_dims(const BaseAlgebra& a, const AModule& m, const AModule& n, int max_i,
                          bool minimal = true);
int ext_dim(const BaseAlgebra& a, const AModule& m, const AModule& n, int i);

/// Auslander-Bridger transpose over the opposite algebra, computed from a
/// minimal projective presentation.
AModule transpose_module(const BaseAlgebra& a, const BaseAlgebra& aop, const AModule& m);

/// Randomized one-sided isomorphism test (trials random hom combinations).
bool is_isomorphic(const BaseAlgebra& a, const AModule& m, const AModule& n, std::uint64_t seed,
                   int trials = 32);

bool is_self_injective(const BaseAlgebra& a);

/// Max projective dimension of the simples; nullopt if some resolution does
/// not terminate within the cap (e.g. infinite global dimension).
std::optional<int> global_dimension(const BaseAlgebra& a, int cap = 64);

enum class GP : std::uint8_t { gp, not_gp, unknown };

struct GPVerdict {
    GP verdict = GP::unknown;
    int depth = 0;          // depth examined (meaningful for unknown)
    std::string witness;    // human-readable certificate / counterexample
    int ext_degree = -1;    // not_gp: first nonvanishing Ext degree
    int ext_dim = 0;        // not_gp: its dimension
    bool transpose_side = false;
};

enum class GPMode : std::uint8_t { automatic, semisimple, selfinjective, bounded };

struct GPConfig {
    GPMode mode = GPMode::automatic;
    int depth = 12;
    std::uint64_t seed = 1;
    int iso_trials = 32;
};

/// Decides Gorenstein-projectivity of a module:
///  - semisimple / selfinjective modes validate the algebra property and
///    return gp (every module qualifies);
///  - bounded mode checks Ext^i(M, A) and Ext^i(Tr M, A-op) for i = 1..depth
///    and upgrades "unknown" to gp when, on both sides, a syzygy repeats up to
///    isomorphism within the window (vanishing over a full period then gives
///    vanishing everywhere);
///  - automatic picks the strongest applicable mode.
GPVerdict gp_check(const BaseAlgebra& a, const AModule& m, const GPConfig& cfg = {});

/// Seeded generic module sampler: mixes projectives, injectives and simples,
/// then optionally passes to random submodules / quotients.  Per-vertex
/// dimensions are capped.
AModule random_module(const BaseAlgebra& a, std::mt19937_64& rng, int vertex_dim_cap = 4);

std::vector<Scalar> random_vector(const Field& f, int n, std::mt19937_64& rng);

} // namespace monrep
