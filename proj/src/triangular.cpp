#include <algorithm>

#include "monrep/monic.hpp"

namespace monrep {

TriangularSplit split_at_source(const LambdaContext& c, const LambdaRep& x) {
    const int n = c.vertex_count();
    if (n < 2)
        throw ValidationError("source splitting needs at least two outer vertices");
    const BaseAlgebra& a = c.base();
    const Field& f = c.field();

    SourceDeleted sd = delete_source_vertex(c.quiver(), c.ideal());
    std::vector<int> old_of(sd.quiver.arrow_count(), -1);
    for (std::size_t oa = 0; oa < sd.arrow_id_map.size(); ++oa)
        if (sd.arrow_id_map[oa] >= 0) old_of[sd.arrow_id_map[oa]] = int(oa);

    TriangularSplit out{LambdaContext(a, sd.quiver, sd.ideal), {}, x.branch[n - 1], {}, {}, {},
                        {}};

    out.xprime.branch.assign(x.branch.begin(), x.branch.end() - 1);
    out.xprime.arrow.resize(sd.quiver.arrow_count());
    for (int na = 0; na < sd.quiver.arrow_count(); ++na)
        out.xprime.arrow[na] = x.arrow[old_of[na]];

    for (int i = 1; i < n; ++i) {
        out.source_paths.push_back(c.paths(n, i));
        out.multiplicities.push_back(int(out.source_paths.back().size()));
    }

    const AModule& top = out.top_branch;
    out.tensor.branch.reserve(n - 1);
    for (int i = 1; i < n; ++i)
        out.tensor.branch.push_back(
            direct_sum(a, std::vector<AModule>(out.multiplicities[i - 1], top)).mod);
    out.tensor.arrow.resize(sd.quiver.arrow_count());
    for (int na = 0; na < sd.quiver.arrow_count(); ++na) {
        const Arrow& ar = sd.quiver.arrow(na);
        const auto& src = out.source_paths[ar.source - 1];
        const auto& dst = out.source_paths[ar.target - 1];
        AMap m;
        for (int w = 0; w < a.vertex_count(); ++w) {
            Matrix block(f, out.tensor.at(ar.target).dims[w], out.tensor.at(ar.source).dims[w]);
            for (std::size_t s = 0; s < src.size(); ++s) {
                Path composite = Path::of_arrow(c.quiver(), old_of[na]).after(src[s]);
                if (c.ideal().in_ideal(composite)) continue;
                auto it = std::find(dst.begin(), dst.end(), composite);
                if (it == dst.end())
                    throw Error("internal: source tensor copy bookkeeping out of sync");
                int t = int(it - dst.begin());
                block.paste(t * top.dims[w], int(s) * top.dims[w],
                            Matrix::identity(f, top.dims[w]));
            }
            m.mats.push_back(std::move(block));
        }
        out.tensor.arrow[na] = std::move(m);
    }

    out.phi.comp.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
        AMap comp;
        for (int w = 0; w < a.vertex_count(); ++w) {
            std::vector<Matrix> blocks;
            for (const Path& q : out.source_paths[i - 1])
                blocks.push_back(path_map(c, x, q).mats[w]);
            comp.mats.push_back(blocks.empty() ? Matrix(f, x.branch[i - 1].dims[w], 0)
                                               : Matrix::hstack(blocks));
        }
        out.phi.comp.push_back(std::move(comp));
    }
    return out;
}

bool phi_is_injective(const TriangularSplit& s) { return morphism_is_injective(s.phi); }

QuotRepData coker_phi(const TriangularSplit& s) {
    return rep_cokernel(s.sub, s.tensor, s.xprime, s.phi);
}

GPVerdict inductive_gp(const LambdaContext& c, const LambdaRep& x, const GPConfig& cfg) {
    if (c.vertex_count() == 1) return gp_check(c.base(), x.branch[0], cfg);

    TriangularSplit s = split_at_source(c, x);
    GPVerdict top = gp_check(c.base(), s.top_branch, cfg);
    if (top.verdict == GP::not_gp) {
        top.witness = "branch at the source vertex: " + top.witness;
        return top;
    }
    if (!phi_is_injective(s)) {
        GPVerdict v;
        v.verdict = GP::not_gp;
        v.witness = "the canonical map from the source-branch tensor into the restriction "
                    "is not injective";
        return v;
    }
    GPVerdict rest = inductive_gp(s.sub, coker_phi(s).rep, cfg);
    if (rest.verdict == GP::not_gp) {
        rest.witness = "cokernel over the source-deleted quiver: " + rest.witness;
        return rest;
    }
    GPVerdict v;
    if (top.verdict == GP::gp && rest.verdict == GP::gp) {
        v.verdict = GP::gp;
        v.witness = "source branch passes, the canonical map is injective, and the cokernel "
                    "passes recursively";
    } else {
        v.verdict = GP::unknown;
        v.witness = top.verdict == GP::unknown ? top.witness : rest.witness;
        v.depth = std::max(top.depth, rest.depth);
    }
    return v;
}

CrossCheck cross_validate_gp(const LambdaContext& c, const LambdaRep& x, const GPConfig& cfg) {
    CrossCheck out{decide_gp(c, x, cfg), inductive_gp(c, x, cfg), rep_gp_check(c, x, cfg), GP::unknown};
    const GP verdicts[3] = {out.direct.verdict, out.inductive.verdict, out.homological.verdict};
    for (GP g : verdicts) {
        if (g == GP::unknown) continue;
        if (out.consensus == GP::unknown)
            out.consensus = g;
        else if (out.consensus != g)
            throw Error("internal: the three deciders disagree on a definite verdict");
    }
    return out;
}

} // namespace monrep
