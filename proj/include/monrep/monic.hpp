#pragma once

#include <optional>

#include "monrep/lambda_homology.hpp"

namespace monrep {

/// One failed check, located at an outer vertex or arrow and an inner vertex.
struct MonicWitness {
    std::string condition; // "images-direct" or "kernel-matches"
    int outer_vertex = 0;
    int arrow_id = -1; // kernel condition only
    int inner_vertex = 0;
    std::string detail;
};

/// Result of the monic test.  A representation is monic when at every vertex
/// the images of the incoming arrow maps sum directly (vertex_ok) and every
/// arrow map's kernel equals the sum of the images of the paths it kills
/// (arrow_ok; an empty sum means the map must be injective).
struct MonicReport {
    std::vector<bool> vertex_ok; // outer vertex - 1
    std::vector<bool> arrow_ok;  // arrow id
    std::vector<MonicWitness> witnesses;
    bool monic() const;
};

MonicReport check_m1(const LambdaContext& c, const LambdaRep& x); // image directness only
MonicReport check_m2(const LambdaContext& c, const LambdaRep& x); // kernel identities only
MonicReport check_monic(const LambdaContext& c, const LambdaRep& x);
bool is_monic(const LambdaContext& c, const LambdaRep& x);

/// Structure of path-map kernels in a monic representation.  For every
/// nonzero outer path p of length >= 1:
///  (1) Ker X_p equals the sum of Im X_q over nonzero q with pq in the ideal;
///  (2) Ker X_p decomposes as the direct sum of Im X_b (arrows b into s(p)
///      with pb in the ideal) and X_b(Ker X_{pb}) (arrows b with pb nonzero
///      but killed by some longer nonzero path ending in b);
///  (3) for every ordered vertex pair, the images of the distinct path maps
///      between them sum directly.
struct PathKernelReport {
    bool ok = true;
    int paths_checked = 0;
    int pairs_checked = 0;
    std::string first_failure;
};
PathKernelReport verify_kernel_structure(const LambdaContext& c, const LambdaRep& x);

/// Branch condition: every branch X_v and every quotient of X_v by the sum of
/// the incoming arrow images must be Gorenstein-projective over the
/// coefficient algebra.
struct BranchGPReport {
    GP verdict = GP::unknown;
    std::vector<GPVerdict> branch;   // per outer vertex
    std::vector<GPVerdict> quotient; // per outer vertex
    std::vector<int> quotient_dims;  // total dimension of each quotient
};
BranchGPReport branch_gp_condition(const LambdaContext& c, const LambdaRep& x,
                                   const GPConfig& cfg = {});

/// Main decision: Gorenstein-projective over the tensor algebra iff monic and
/// the branch condition holds.  The monic part is exact; the branch part
/// inherits the oracle's three-valued verdict.
struct GPDecision {
    GP verdict = GP::unknown;
    MonicReport monic;
    std::optional<BranchGPReport> branches; // present when monic
    std::string reason;
};
GPDecision decide_gp(const LambdaContext& c, const LambdaRep& x, const GPConfig& cfg = {});

/// Splitting off the source vertex n: the restriction X' to the smaller
/// quiver, the branch at n, and the canonical map phi whose branch at i is
/// (X_{p_1}, ..., X_{p_m}) over the nonzero paths n -> i.
struct TriangularSplit {
    LambdaContext sub;
    LambdaRep xprime;
    AModule top_branch;
    std::vector<std::vector<Path>> source_paths; // [i-1]: nonzero paths n -> i
    std::vector<int> multiplicities;             // sizes of the above
    LambdaRep tensor;                            // branch i = (X_n)^{m_i}
    LambdaMorphism phi;                          // tensor -> xprime
};
TriangularSplit split_at_source(const LambdaContext& c, const LambdaRep& x);
bool phi_is_injective(const TriangularSplit& s);
QuotRepData coker_phi(const TriangularSplit& s);

/// Recursive decision by repeated source deletion: X is GP iff the branch at
/// the source is GP over A, phi is injective, and Coker phi is GP over the
/// smaller context.  Independent of decide_gp.
GPVerdict inductive_gp(const LambdaContext& c, const LambdaRep& x, const GPConfig& cfg = {});

/// Runs all three deciders and compares: the direct criterion, the recursive
/// one, and the homological oracle.  Disagreement between two non-unknown
/// verdicts is an internal error.
struct CrossCheck {
    GPDecision direct;
    GPVerdict inductive;
    GPVerdict homological;
    GP consensus = GP::unknown;
};
CrossCheck cross_validate_gp(const LambdaContext& c, const LambdaRep& x,
                             const GPConfig& cfg = {});

} // namespace monrep
