#pragma once

#include "monrep/monic.hpp"

namespace monrep {

/// A short exact sequence 0 -> x -> mid -> z -> 0 assembled as the pushout of
/// a projective presentation of z along a random cocycle (syzygy of z) -> x.
struct ExtensionSample {
    LambdaRep mid;
    LambdaMorphism incl; // x -> mid
    LambdaMorphism proj; // mid -> z
};
ExtensionSample sample_extension(const LambdaContext& c, const LambdaRep& x, const LambdaRep& z,
                                 std::mt19937_64& rng);

/// Constructive sampler for representations satisfying both kernel/image
/// conditions by design: working from the sources down, each branch is a
/// random module plus one quotient summand X_j / (sum of killed-path images)
/// per incoming arrow, twisted by a random automorphism.
LambdaRep random_monic_rep(const LambdaContext& c, std::mt19937_64& rng, int dim_cap = 2);

/// Random module automorphism (invertible random endomorphism; identity when
/// none is found in a few tries).
AMap random_automorphism(const BaseAlgebra& a, const AModule& m, std::mt19937_64& rng,
                         int tries = 8);

/// Direct sum of all dual injectives placed at the sink vertex: an injective
/// object of the monic subcategory.
LambdaRep injective_at_sink(const LambdaContext& c);

/// True iff h: x -> j extends along f: x -> y to some u: y -> j (u.f = h).
bool lifts_against(const LambdaContext& c, const LambdaRep& x, const LambdaRep& y,
                   const LambdaMorphism& f, const LambdaRep& j, const LambdaMorphism& h);

/// Outcome of a seeded property run.  Deterministic given (kind, samples,
/// seed) regardless of the job count.
struct SuiteReport {
    std::string kind;
    int instances = 0;
    int failures = 0;
    int skipped = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> notes; // one per non-ok sample, index-tagged
};

/// Closure of the monic subcategory: each sample builds an extension of two
/// monic representations (total must be monic and short exact), a kernel of
/// an epimorphism between monic representations, and direct sums / summands.
SuiteReport run_closure_suite(const LambdaContext& c, int samples, std::uint64_t seed,
                              int jobs = 1);

/// Coefficient specializations: arrowless coefficients make monic mean
/// projective (the minimal cover has zero kernel); self-injective
/// coefficients make monic equivalent to the homological oracle's verdict;
/// otherwise tensors of projectives must pass all deciders.
SuiteReport run_corollary_suite(const LambdaContext& c, int samples, std::uint64_t seed,
                                int jobs = 1);

/// Kernel structure of path maps on constructively monic samples.
SuiteReport run_kernels_suite(const LambdaContext& c, int samples, std::uint64_t seed,
                              int jobs = 1);

/// Hom(m (x) P(v), y) has the same dimension as Hom_A(m, y_v).
SuiteReport run_adjunction_suite(const LambdaContext& c, int samples, std::uint64_t seed,
                                 int jobs = 1);

SuiteReport run_suite_kind(const LambdaContext& c, const std::string& kind, int samples,
                           std::uint64_t seed, int jobs = 1);

} // namespace monrep
