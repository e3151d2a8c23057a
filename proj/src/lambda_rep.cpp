#include "monrep/lambda.hpp"

#include <algorithm>

namespace monrep {

LambdaContext::LambdaContext(BaseAlgebra base, Quiver quiver, MonomialIdeal ideal)
    : base_(std::move(base)), quiver_(std::move(quiver)), ideal_(std::move(ideal)) {
    nonzero_ = enumerate_nonzero_paths(quiver_, ideal_);
    int n = quiver_.vertex_count();
    between_.assign(n, std::vector<std::vector<Path>>(n));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            if (j != i) between_[j - 1][i - 1] = paths_between(quiver_, ideal_, j, i);
}

const std::vector<Path>& LambdaContext::paths(int j, int i) const {
    return between_[j - 1][i - 1];
}

int LambdaRep::total_dim() const {
    int d = 0;
    for (const auto& m : branch) d += m.total_dim();
    return d;
}

LambdaRep zero_rep(const LambdaContext& c) {
    LambdaRep x;
    x.branch.assign(c.vertex_count(), zero_module(c.base()));
    x.arrow.reserve(c.quiver().arrow_count());
    for (int a = 0; a < c.quiver().arrow_count(); ++a)
        x.arrow.push_back(zero_map(c.base(), x.branch[0], x.branch[0]));
    return x;
}

void validate_rep(const LambdaContext& c, const LambdaRep& x) {
    if (int(x.branch.size()) != c.vertex_count())
        throw ValidationError("representation has " + std::to_string(x.branch.size()) +
                              " branches, quiver has " + std::to_string(c.vertex_count()) +
                              " vertices");
    if (int(x.arrow.size()) != c.quiver().arrow_count())
        throw ValidationError("representation has " + std::to_string(x.arrow.size()) +
                              " arrow maps, quiver has " + std::to_string(c.quiver().arrow_count()) +
                              " arrows");
    for (const auto& m : x.branch) validate_module(c.base(), m);
    for (int a = 0; a < c.quiver().arrow_count(); ++a) {
        const Arrow& ar = c.quiver().arrow(a);
        try {
            validate_map(c.base(), x.at(ar.source), x.at(ar.target), x.arrow[a]);
        } catch (const ValidationError& e) {
            throw ValidationError("arrow map " + ar.name + ": " + e.what());
        }
    }
    for (const Path& rel : c.ideal().generators()) {
        AMap m = path_map(c, x, rel);
        for (const Matrix& mat : m.mats)
            if (!mat.is_zero())
                throw ValidationError("relation " + rel.display(c.quiver()) +
                                      " acts by a nonzero map");
    }
}

AMap path_map(const LambdaContext& c, const LambdaRep& x, const Path& p) {
    AMap m = identity_map(c.base(), x.at(p.source()));
    for (int a : p.arrows()) m = compose(x.arrow[a], m);
    return m;
}

LambdaMorphism identity_morphism(const LambdaContext& c, const LambdaRep& x) {
    LambdaMorphism f;
    f.comp.reserve(x.branch.size());
    for (const auto& m : x.branch) f.comp.push_back(identity_map(c.base(), m));
    return f;
}

LambdaMorphism zero_morphism(const LambdaContext& c, const LambdaRep& dom, const LambdaRep& cod) {
    LambdaMorphism f;
    f.comp.reserve(dom.branch.size());
    for (std::size_t i = 0; i < dom.branch.size(); ++i)
        f.comp.push_back(zero_map(c.base(), dom.branch[i], cod.branch[i]));
    return f;
}

void validate_morphism(const LambdaContext& c, const LambdaRep& dom, const LambdaRep& cod,
                       const LambdaMorphism& f) {
    if (f.comp.size() != dom.branch.size())
        throw ValidationError("morphism has wrong number of components");
    for (std::size_t i = 0; i < dom.branch.size(); ++i)
        validate_map(c.base(), dom.branch[i], cod.branch[i], f.comp[i]);
    for (int a = 0; a < c.quiver().arrow_count(); ++a) {
        const Arrow& ar = c.quiver().arrow(a);
        AMap lhs = compose(f.at(ar.target), dom.arrow[a]);
        AMap rhs = compose(cod.arrow[a], f.at(ar.source));
        for (std::size_t w = 0; w < lhs.mats.size(); ++w)
            if (!(lhs.mats[w] == rhs.mats[w]))
                throw ValidationError("morphism does not commute with arrow " + ar.name);
    }
}

LambdaMorphism compose_morphism(const LambdaMorphism& g, const LambdaMorphism& f) {
    LambdaMorphism h;
    h.comp.reserve(f.comp.size());
    for (std::size_t i = 0; i < f.comp.size(); ++i) h.comp.push_back(compose(g.comp[i], f.comp[i]));
    return h;
}

LambdaMorphism morphism_add(const LambdaContext& c, const LambdaMorphism& f,
                            const LambdaMorphism& g) {
    LambdaMorphism h;
    h.comp.reserve(f.comp.size());
    for (std::size_t i = 0; i < f.comp.size(); ++i)
        h.comp.push_back(map_add(c.base(), f.comp[i], g.comp[i]));
    return h;
}

LambdaMorphism morphism_scale(const LambdaContext& c, const LambdaMorphism& f, const Scalar& s) {
    LambdaMorphism h;
    h.comp.reserve(f.comp.size());
    for (std::size_t i = 0; i < f.comp.size(); ++i)
        h.comp.push_back(map_scale(c.base(), f.comp[i], s));
    return h;
}

bool morphism_is_injective(const LambdaMorphism& f) {
    for (const auto& m : f.comp)
        if (!map_is_injective(m)) return false;
    return true;
}

bool morphism_is_surjective(const LambdaRep& cod, const LambdaMorphism& f) {
    for (std::size_t i = 0; i < f.comp.size(); ++i)
        if (!map_is_surjective(cod.branch[i], f.comp[i])) return false;
    return true;
}

bool morphism_is_zero(const LambdaMorphism& f) {
    for (const auto& m : f.comp)
        for (const auto& mat : m.mats)
            if (!mat.is_zero()) return false;
    return true;
}

std::vector<LambdaMorphism> rep_hom_space(const LambdaContext& c, const LambdaRep& x,
                                          const LambdaRep& y) {
    const BaseAlgebra& a = c.base();
    const Field& f = c.field();
    int n = c.vertex_count();
    int nw = a.vertex_count();

    // Unknowns: entry (r, cc) of the block at (outer vertex v, inner vertex w).
    std::vector<std::vector<int>> off(n, std::vector<int>(nw, 0));
    int nvars = 0;
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < nw; ++w) {
            off[v][w] = nvars;
            nvars += y.branch[v].dims[w] * x.branch[v].dims[w];
        }
    auto var = [&](int v, int w, int r, int cc) {
        return off[v][w] + r * x.branch[v].dims[w] + cc;
    };

    int nrows = 0;
    for (int v = 0; v < n; ++v)
        for (int ia = 0; ia < a.arrow_count(); ++ia)
            nrows += y.branch[v].dims[a.arrow(ia).target] * x.branch[v].dims[a.arrow(ia).source];
    for (int qa = 0; qa < c.quiver().arrow_count(); ++qa) {
        const Arrow& ar = c.quiver().arrow(qa);
        for (int w = 0; w < nw; ++w)
            nrows += y.at(ar.target).dims[w] * x.at(ar.source).dims[w];
    }

    Matrix sys(f, nrows, nvars);
    int row = 0;
    // Branch components are maps of A-modules.
    for (int v = 0; v < n; ++v)
        for (int ia = 0; ia < a.arrow_count(); ++ia) {
            int s = a.arrow(ia).source, t = a.arrow(ia).target;
            const Matrix& xa = x.branch[v].arrow_act[ia];
            const Matrix& ya = y.branch[v].arrow_act[ia];
            for (int r = 0; r < y.branch[v].dims[t]; ++r)
                for (int cc = 0; cc < x.branch[v].dims[s]; ++cc) {
                    for (int k = 0; k < x.branch[v].dims[t]; ++k)
                        sys.at(row, var(v, t, r, k)) =
                            f.sub(sys.at(row, var(v, t, r, k)), xa.at(k, cc));
                    for (int k = 0; k < y.branch[v].dims[s]; ++k)
                        sys.at(row, var(v, s, k, cc)) =
                            f.add(sys.at(row, var(v, s, k, cc)), ya.at(r, k));
                    ++row;
                }
        }
    // Squares over the outer arrows.
    for (int qa = 0; qa < c.quiver().arrow_count(); ++qa) {
        const Arrow& ar = c.quiver().arrow(qa);
        int j = ar.source - 1, i = ar.target - 1;
        for (int w = 0; w < nw; ++w) {
            const Matrix& xa = x.arrow[qa].mats[w];
            const Matrix& ya = y.arrow[qa].mats[w];
            for (int r = 0; r < y.branch[i].dims[w]; ++r)
                for (int cc = 0; cc < x.branch[j].dims[w]; ++cc) {
                    for (int k = 0; k < x.branch[i].dims[w]; ++k)
                        sys.at(row, var(i, w, r, k)) =
                            f.add(sys.at(row, var(i, w, r, k)), xa.at(k, cc));
                    for (int k = 0; k < y.branch[j].dims[w]; ++k)
                        sys.at(row, var(j, w, k, cc)) =
                            f.sub(sys.at(row, var(j, w, k, cc)), ya.at(r, k));
                    ++row;
                }
        }
    }

    Matrix null = kernel_basis_matrix(sys);
    std::vector<LambdaMorphism> basis;
    basis.reserve(null.cols());
    for (int b = 0; b < null.cols(); ++b) {
        LambdaMorphism m = zero_morphism(c, x, y);
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < nw; ++w)
                for (int r = 0; r < y.branch[v].dims[w]; ++r)
                    for (int cc = 0; cc < x.branch[v].dims[w]; ++cc)
                        m.comp[v].mats[w].at(r, cc) = null.at(var(v, w, r, cc), b);
        basis.push_back(std::move(m));
    }
    return basis;
}

int rep_hom_dim(const LambdaContext& c, const LambdaRep& x, const LambdaRep& y) {
    return int(rep_hom_space(c, x, y).size());
}

SubRepData rep_kernel(const LambdaContext& c, const LambdaRep& dom, const LambdaRep& cod,
                      const LambdaMorphism& f) {
    const BaseAlgebra& a = c.base();
    SubRepData out;
    std::vector<SubmoduleData> per;
    per.reserve(dom.branch.size());
    for (std::size_t v = 0; v < dom.branch.size(); ++v)
        per.push_back(kernel_of(a, dom.branch[v], cod.branch[v], f.comp[v]));
    for (auto& s : per) {
        out.rep.branch.push_back(s.mod);
        out.inclusion.comp.push_back(s.inclusion);
    }
    for (int qa = 0; qa < c.quiver().arrow_count(); ++qa) {
        const Arrow& ar = c.quiver().arrow(qa);
        const SubmoduleData& sj = per[ar.source - 1];
        const SubmoduleData& si = per[ar.target - 1];
        AMap induced;
        for (int w = 0; w < a.vertex_count(); ++w) {
            Matrix rhs = dom.arrow[qa].mats[w].mul(sj.inclusion.mats[w]);
            auto sol = solve(si.inclusion.mats[w], rhs);
            if (!sol) throw Error("internal: kernel is not arrow-invariant");
            induced.mats.push_back(std::move(*sol));
        }
        out.rep.arrow.push_back(std::move(induced));
    }
    return out;
}

SubRepData rep_image(const LambdaContext& c, const LambdaRep& dom, const LambdaRep& cod,
                     const LambdaMorphism& f) {
    const BaseAlgebra& a = c.base();
    SubRepData out;
    std::vector<SubmoduleData> per;
    per.reserve(dom.branch.size());
    for (std::size_t v = 0; v < dom.branch.size(); ++v)
        per.push_back(image_of(a, dom.branch[v], cod.branch[v], f.comp[v]));
    for (auto& s : per) {
        out.rep.branch.push_back(s.mod);
        out.inclusion.comp.push_back(s.inclusion);
    }
    for (int qa = 0; qa < c.quiver().arrow_count(); ++qa) {
        const Arrow& ar = c.quiver().arrow(qa);
        const SubmoduleData& sj = per[ar.source - 1];
        const SubmoduleData& si = per[ar.target - 1];
        AMap induced;
        for (int w = 0; w < a.vertex_count(); ++w) {
            Matrix rhs = cod.arrow[qa].mats[w].mul(sj.inclusion.mats[w]);
            auto sol = solve(si.inclusion.mats[w], rhs);
            if (!sol) throw Error("internal: image is not arrow-invariant");
            induced.mats.push_back(std::move(*sol));
        }
        out.rep.arrow.push_back(std::move(induced));
    }
    return out;
}

QuotRepData rep_cokernel(const LambdaContext& c, const LambdaRep& dom, const LambdaRep& cod,
                         const LambdaMorphism& f) {
    const BaseAlgebra& a = c.base();
    QuotRepData out;
    std::vector<QuotientModuleData> per;
    per.reserve(cod.branch.size());
    for (std::size_t v = 0; v < cod.branch.size(); ++v)
        per.push_back(cokernel_of(a, dom.branch[v], cod.branch[v], f.comp[v]));
    for (auto& q : per) {
        out.rep.branch.push_back(q.mod);
        out.projection.comp.push_back(q.projection);
        out.section.push_back(q.section);
    }
    for (int qa = 0; qa < c.quiver().arrow_count(); ++qa) {
        const Arrow& ar = c.quiver().arrow(qa);
        const QuotientModuleData& qj = per[ar.source - 1];
        const QuotientModuleData& qi = per[ar.target - 1];
        AMap induced;
        for (int w = 0; w < a.vertex_count(); ++w)
            induced.mats.push_back(
                qi.projection.mats[w].mul(cod.arrow[qa].mats[w]).mul(qj.section.mats[w]));
        out.rep.arrow.push_back(std::move(induced));
    }
    return out;
}

RepDirectSum rep_direct_sum(const LambdaContext& c, const std::vector<LambdaRep>& parts) {
    const BaseAlgebra& a = c.base();
    int n = c.vertex_count();
    RepDirectSum out;
    std::vector<DirectSumData> per;
    per.reserve(n);
    for (int v = 0; v < n; ++v) {
        std::vector<AModule> mods;
        mods.reserve(parts.size());
        for (const auto& p : parts) mods.push_back(p.branch[v]);
        per.push_back(direct_sum(a, mods));
    }
    for (int v = 0; v < n; ++v) out.rep.branch.push_back(per[v].mod);
    for (int qa = 0; qa < c.quiver().arrow_count(); ++qa) {
        AMap big;
        for (int w = 0; w < a.vertex_count(); ++w) {
            std::vector<Matrix> blocks;
            blocks.reserve(parts.size());
            for (const auto& p : parts) blocks.push_back(p.arrow[qa].mats[w]);
            big.mats.push_back(Matrix::block_diag(blocks));
        }
        out.rep.arrow.push_back(std::move(big));
    }
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        LambdaMorphism incl, proj;
        for (int v = 0; v < n; ++v) {
            incl.comp.push_back(per[v].inclusions[pi]);
            proj.comp.push_back(per[v].projections[pi]);
        }
        out.inclusions.push_back(std::move(incl));
        out.projections.push_back(std::move(proj));
    }
    return out;
}

bool is_short_exact(const LambdaContext& c, const LambdaRep& x, const LambdaRep& y,
                    const LambdaRep& z, const LambdaMorphism& f, const LambdaMorphism& g) {
    validate_morphism(c, x, y, f);
    validate_morphism(c, y, z, g);
    if (!morphism_is_injective(f)) return false;
    if (!morphism_is_surjective(z, g)) return false;
    LambdaMorphism gf = compose_morphism(g, f);
    if (!morphism_is_zero(gf)) return false;
    for (std::size_t v = 0; v < y.branch.size(); ++v)
        for (std::size_t w = 0; w < y.branch[v].dims.size(); ++w)
            if (rank(f.comp[v].mats[w]) + rank(g.comp[v].mats[w]) != y.branch[v].dims[w])
                return false;
    return true;
}

TensorRep tensor_pv(const LambdaContext& c, const AModule& m, int v) {
    const BaseAlgebra& a = c.base();
    int n = c.vertex_count();
    TensorRep t;
    t.vertex = v;
    t.copies.assign(n, {});
    for (int i = 1; i <= n; ++i) {
        if (i == v)
            t.copies[i - 1] = {Path::trivial(v)};
        else
            t.copies[i - 1] = c.paths(v, i);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<AModule> mods(t.copies[i].size(), m);
        t.rep.branch.push_back(direct_sum(a, mods).mod);
    }
    for (int qa = 0; qa < c.quiver().arrow_count(); ++qa) {
        const Arrow& ar = c.quiver().arrow(qa);
        const auto& src = t.copies[ar.source - 1];
        const auto& dst = t.copies[ar.target - 1];
        Path step = Path::of_arrow(c.quiver(), qa);
        AMap f;
        for (int w = 0; w < a.vertex_count(); ++w) {
            Matrix blk(c.field(), int(dst.size()) * m.dims[w], int(src.size()) * m.dims[w]);
            for (std::size_t s = 0; s < src.size(); ++s) {
                Path composite = step.after(src[s]);
                if (c.ideal().in_ideal(composite)) continue;
                auto it = std::find(dst.begin(), dst.end(), composite);
                if (it == dst.end()) throw Error("internal: tensor copy bookkeeping out of sync");
                int d = int(it - dst.begin());
                blk.paste(d * m.dims[w], int(s) * m.dims[w], Matrix::identity(c.field(), m.dims[w]));
            }
            f.mats.push_back(std::move(blk));
        }
        t.rep.arrow.push_back(std::move(f));
    }
    return t;
}

LambdaRep random_rep(const LambdaContext& c, std::mt19937_64& rng, int dim_cap) {
    const BaseAlgebra& a = c.base();
    const Field& f = c.field();
    int n = c.vertex_count();
    LambdaRep x;
    x.branch.reserve(n);
    for (int v = 0; v < n; ++v) x.branch.push_back(random_module(a, rng, dim_cap));
    x.arrow.assign(c.quiver().arrow_count(), AMap{});

    // Fill arrows by descending source label: along any relation word the
    // sources strictly descend, so when an arrow is reached every other arrow
    // of each relation through it is already fixed and the constraint is
    // linear in the new matrix.
    std::vector<int> order(c.quiver().arrow_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int l, int r) {
        int sl = c.quiver().arrow(l).source, sr = c.quiver().arrow(r).source;
        return sl != sr ? sl > sr : l < r;
    });

    for (int qa : order) {
        const Arrow& ar = c.quiver().arrow(qa);
        const AModule& dom = x.at(ar.source);
        const AModule& cod = x.at(ar.target);
        std::vector<AMap> basis = hom_space(a, dom, cod);
        if (basis.empty()) {
            x.arrow[qa] = zero_map(a, dom, cod);
            continue;
        }
        std::vector<AMap> prefixes;
        for (const Path& rel : c.ideal().generators()) {
            if (rel.arrows().back() != qa) continue;
            std::vector<int> head(rel.arrows().begin(), rel.arrows().end() - 1);
            prefixes.push_back(path_map(c, x, Path::walk(c.quiver(), head)));
        }
        std::vector<Scalar> coeffs;
        if (prefixes.empty()) {
            coeffs = random_vector(f, int(basis.size()), rng);
        } else {
            int nrows = 0;
            for (const AMap& p : prefixes)
                for (std::size_t w = 0; w < p.mats.size(); ++w)
                    nrows += cod.dims[int(w)] * p.mats[w].cols();
            Matrix sys(f, nrows, int(basis.size()));
            for (std::size_t b = 0; b < basis.size(); ++b) {
                int row = 0;
                for (const AMap& p : prefixes)
                    for (std::size_t w = 0; w < p.mats.size(); ++w) {
                        Matrix prod = basis[b].mats[w].mul(p.mats[w]);
                        for (int r = 0; r < prod.rows(); ++r)
                            for (int cc = 0; cc < prod.cols(); ++cc) sys.at(row++, b) = prod.at(r, cc);
                    }
            }
            Matrix null = kernel_basis_matrix(sys);
            std::vector<Scalar> mix = random_vector(f, null.cols(), rng);
            coeffs.assign(basis.size(), f.zero());
            for (int b = 0; b < int(basis.size()); ++b)
                for (int k = 0; k < null.cols(); ++k)
                    coeffs[b] = f.add(coeffs[b], f.mul(null.at(b, k), mix[k]));
        }
        AMap chosen = zero_map(a, dom, cod);
        for (std::size_t b = 0; b < basis.size(); ++b)
            chosen = map_add(a, chosen, map_scale(a, basis[b], coeffs[b]));
        x.arrow[qa] = std::move(chosen);
    }
    return x;
}

LambdaMorphism random_morphism(const LambdaContext& c, const LambdaRep& x, const LambdaRep& y,
                               std::mt19937_64& rng) {
    std::vector<LambdaMorphism> basis = rep_hom_space(c, x, y);
    LambdaMorphism m = zero_morphism(c, x, y);
    if (basis.empty()) return m;
    std::vector<Scalar> coeffs = random_vector(c.field(), int(basis.size()), rng);
    for (std::size_t b = 0; b < basis.size(); ++b)
        m = morphism_add(c, m, morphism_scale(c, basis[b], coeffs[b]));
    return m;
}

} // namespace monrep
