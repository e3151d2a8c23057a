#include "monrep/lambda_homology.hpp"

#include <algorithm>
#include <optional>

namespace monrep {

BaseAlgebra outer_algebra(const LambdaContext& c) {
    std::vector<std::string> names;
    for (int v = 1; v <= c.vertex_count(); ++v) names.push_back(std::to_string(v));
    std::vector<BaseArrow> arrows;
    for (int a = 0; a < c.quiver().arrow_count(); ++a) {
        const Arrow& ar = c.quiver().arrow(a);
        arrows.push_back({ar.name, ar.source - 1, ar.target - 1});
    }
    std::vector<std::vector<int>> rels;
    for (const Path& p : c.ideal().generators()) rels.push_back(p.arrows());
    return BaseAlgebra(c.field(), std::move(names), std::move(arrows), std::move(rels));
}

int outer_global_dimension(const LambdaContext& c) {
    auto gd = global_dimension(outer_algebra(c));
    if (!gd) throw Error("internal: acyclic outer algebra reported infinite global dimension");
    return *gd;
}

LambdaContext opposite_context(const LambdaContext& c) {
    OppositeQuiver op = opposite(c.quiver(), c.ideal());
    return LambdaContext(c.base().opposite(), std::move(op.quiver), std::move(op.ideal));
}

int LambdaProjSum::generator_column(const BaseAlgebra& a, int s) const {
    auto [u, v] = summands[s];
    const std::vector<int>& ids = inner[s].path_ids[u];
    int lazy = a.basis_index(BasePath{u, {}});
    auto it = std::find(ids.begin(), ids.end(), lazy);
    if (it == ids.end()) throw Error("internal: projective block misses its lazy path");
    return offset[s][v - 1][u] + int(it - ids.begin());
}

LambdaProjSum lambda_proj_sum(const LambdaContext& c,
                              const std::vector<std::pair<int, int>>& summands) {
    const BaseAlgebra& a = c.base();
    int n = c.vertex_count();
    int nw = a.vertex_count();
    LambdaProjSum ps;
    ps.summands = summands;
    ps.inner.reserve(summands.size());
    std::vector<LambdaRep> parts;
    parts.reserve(summands.size());
    for (auto [u, v] : summands) {
        ps.inner.push_back(projective_module(a, u));
        TensorRep t = tensor_pv(c, ps.inner.back().mod, v);
        ps.copies.push_back(std::move(t.copies));
        parts.push_back(std::move(t.rep));
    }
    ps.rep = parts.empty() ? zero_rep(c) : rep_direct_sum(c, parts).rep;
    ps.offset.assign(summands.size(),
                     std::vector<std::vector<int>>(n, std::vector<int>(nw, 0)));
    for (int i = 0; i < n; ++i)
        for (int w = 0; w < nw; ++w) {
            int off = 0;
            for (std::size_t s = 0; s < summands.size(); ++s) {
                ps.offset[s][i][w] = off;
                off += int(ps.copies[s][i].size()) * ps.inner[s].mod.dims[w];
            }
            if (off != ps.rep.branch[i].dims[w])
                throw Error("internal: projective sum offsets out of sync");
        }
    return ps;
}

LambdaProjSum regular_rep(const LambdaContext& c) {
    std::vector<std::pair<int, int>> summands;
    for (int v = 1; v <= c.vertex_count(); ++v)
        for (int u = 0; u < c.base().vertex_count(); ++u) summands.push_back({u, v});
    return lambda_proj_sum(c, summands);
}

LambdaMorphism morphism_from_generators(const LambdaContext& c, const LambdaProjSum& ps,
                                        const LambdaRep& x,
                                        const std::vector<std::vector<Scalar>>& gens) {
    const BaseAlgebra& a = c.base();
    int n = c.vertex_count();
    int nw = a.vertex_count();
    LambdaMorphism out = zero_morphism(c, ps.rep, x);
    for (int s = 0; s < ps.summand_count(); ++s) {
        auto [u, v] = ps.summands[s];
        for (int i = 1; i <= n; ++i) {
            const auto& qpaths = ps.copies[s][i - 1];
            for (std::size_t qi = 0; qi < qpaths.size(); ++qi) {
                AMap xq = path_map(c, x, qpaths[qi]);
                std::vector<Scalar> vq = xq.mats[u].apply(gens[s]);
                for (int w = 0; w < nw; ++w) {
                    const std::vector<int>& ids = ps.inner[s].path_ids[w];
                    for (std::size_t pi = 0; pi < ids.size(); ++pi) {
                        std::vector<Scalar> col =
                            path_action(a, x.branch[i - 1], a.basis()[ids[pi]]).apply(vq);
                        int c0 = ps.offset[s][i - 1][w] +
                                 int(qi) * ps.inner[s].mod.dims[w] + int(pi);
                        for (std::size_t r = 0; r < col.size(); ++r)
                            out.comp[i - 1].mats[w].at(int(r), c0) = col[r];
                    }
                }
            }
        }
    }
    return out;
}

namespace {

LambdaCover cover_from_generators(const LambdaContext& c,
                                  std::vector<std::pair<int, int>> summands,
                                  std::vector<std::vector<Scalar>> gens, const LambdaRep& x) {
    LambdaCover out{lambda_proj_sum(c, std::move(summands)), {}};
    out.onto = morphism_from_generators(c, out.cover, x, gens);
    if (!morphism_is_surjective(x, out.onto))
        throw Error("internal: projective cover fails to be onto");
    return out;
}

} // namespace

LambdaCover rep_projective_cover(const LambdaContext& c, const LambdaRep& x) {
    const BaseAlgebra& a = c.base();
    std::vector<std::pair<int, int>> summands;
    std::vector<std::vector<Scalar>> gens;
    for (int v = 1; v <= c.vertex_count(); ++v) {
        const AModule& m = x.at(v);
        SubspaceFamily fam = radical_family(a, m);
        for (int qa : c.quiver().arrows_into(v))
            for (int w = 0; w < a.vertex_count(); ++w)
                fam[w] = Subspace::sum({fam[w], column_space(x.arrow[qa].mats[w])});
        QuotientModuleData top = quotient_by_family(a, m, fam);
        for (int w = 0; w < a.vertex_count(); ++w)
            for (int j = 0; j < top.mod.dims[w]; ++j) {
                summands.push_back({w, v});
                gens.push_back(top.section.mats[w].col(j));
            }
    }
    return cover_from_generators(c, std::move(summands), std::move(gens), x);
}

LambdaCover rep_projective_cover_crude(const LambdaContext& c, const LambdaRep& x) {
    const Field& f = c.field();
    std::vector<std::pair<int, int>> summands;
    std::vector<std::vector<Scalar>> gens;
    for (int v = 1; v <= c.vertex_count(); ++v)
        for (int w = 0; w < c.base().vertex_count(); ++w)
            for (int j = 0; j < x.at(v).dims[w]; ++j) {
                summands.push_back({w, v});
                std::vector<Scalar> e(x.at(v).dims[w], f.zero());
                e[j] = f.one();
                gens.push_back(std::move(e));
            }
    return cover_from_generators(c, std::move(summands), std::move(gens), x);
}

LambdaResolution rep_resolve(const LambdaContext& c, const LambdaRep& x, int length,
                             bool minimal) {
    LambdaResolution res;
    res.syzygies.push_back(x);
    LambdaRep cur = x;
    LambdaMorphism prev_incl;
    for (int j = 0; j <= length; ++j) {
        if (cur.is_zero()) {
            res.terminated = true;
            break;
        }
        LambdaCover cov = minimal ? rep_projective_cover(c, cur) : rep_projective_cover_crude(c, cur);
        res.maps.push_back(j == 0 ? cov.onto : compose_morphism(prev_incl, cov.onto));
        SubRepData ker = rep_kernel(c, cov.cover.rep, cur, cov.onto);
        res.steps.push_back(std::move(cov.cover));
        res.syzygies.push_back(ker.rep);
        prev_incl = ker.inclusion;
        cur = std::move(ker.rep);
    }
    return res;
}

namespace {

/// Coordinates of Hom(F_j, Y): one block per summand s of size (Y at v_s)_{u_s}.
std::vector<int> hom_coord_offsets(const LambdaProjSum& ps, const LambdaRep& y) {
    std::vector<int> off(ps.summand_count() + 1, 0);
    for (int s = 0; s < ps.summand_count(); ++s) {
        auto [u, v] = ps.summands[s];
        off[s + 1] = off[s] + y.at(v).dims[u];
    }
    return off;
}

/// Matrix of Hom(d_j, Y): Hom(F_{j-1}, Y) -> Hom(F_j, Y) in adjunction
/// coordinates.
Matrix hom_differential(const LambdaContext& c, const LambdaResolution& res, int j,
                        const LambdaRep& y) {
    const BaseAlgebra& a = c.base();
    const Field& f = c.field();
    const LambdaProjSum& fj = res.steps[j];
    const LambdaProjSum& fp = res.steps[j - 1];
    std::vector<int> roff = hom_coord_offsets(fj, y);
    std::vector<int> coff = hom_coord_offsets(fp, y);
    Matrix d(f, roff.back(), coff.back());
    for (int s = 0; s < fj.summand_count(); ++s) {
        auto [u, v] = fj.summands[s];
        std::vector<Scalar> g =
            res.maps[j].comp[v - 1].mats[u].col(fj.generator_column(a, s));
        for (int sp = 0; sp < fp.summand_count(); ++sp) {
            auto [u0, v0] = fp.summands[sp];
            const auto& qpaths = fp.copies[sp][v - 1];
            for (std::size_t qi = 0; qi < qpaths.size(); ++qi) {
                AMap yq = path_map(c, y, qpaths[qi]);
                const std::vector<int>& ids = fp.inner[sp].path_ids[u];
                for (std::size_t pi = 0; pi < ids.size(); ++pi) {
                    Scalar coeff = g[fp.offset[sp][v - 1][u] +
                                     int(qi) * fp.inner[sp].mod.dims[u] + int(pi)];
                    if (f.is_zero(coeff)) continue;
                    Matrix t = path_action(a, y.at(v), a.basis()[ids[pi]]).mul(yq.mats[u0]);
                    for (int e = 0; e < t.cols(); ++e)
                        for (int r = 0; r < t.rows(); ++r)
                            d.at(roff[s] + r, coff[sp] + e) =
                                f.add(d.at(roff[s] + r, coff[sp] + e), f.mul(coeff, t.at(r, e)));
                }
            }
        }
    }
    return d;
}

std::vector<int> ext_from_resolution(const LambdaContext& c, const LambdaResolution& res,
                                     const LambdaRep& y, int max_i) {
    int last = int(res.steps.size()) - 1;
    std::vector<int> out(max_i + 1, 0);
    if (last < 0) return out; // zero object
    std::vector<int> cdim(last + 1, 0), rk(last + 1, 0);
    for (int j = 0; j <= last; ++j) cdim[j] = hom_coord_offsets(res.steps[j], y).back();
    for (int j = 1; j <= std::min(last, max_i + 1); ++j)
        rk[j] = rank(hom_differential(c, res, j, y));
    for (int i = 0; i <= max_i; ++i) {
        if (i > last) continue;
        int kdim = i < last ? cdim[i] - rk[i + 1] : cdim[i];
        out[i] = kdim - (i >= 1 ? rk[i] : 0);
    }
    return out;
}

} // namespace

std::vector<int> rep_ext_dims(const LambdaContext& c, const LambdaRep& x, const LambdaRep& y,
                              int max_i, bool minimal) {
    LambdaResolution res = rep_resolve(c, x, max_i + 1, minimal);
    return ext_from_resolution(c, res, y, max_i);
}

LambdaRep rep_transpose(const LambdaContext& c, const LambdaContext& cop, const LambdaRep& x) {
    const BaseAlgebra& a = c.base();
    const BaseAlgebra& aop = cop.base();
    const Field& f = c.field();
    LambdaResolution res = rep_resolve(c, x, 1, true);
    if (res.steps.size() < 2) return zero_rep(cop);
    const LambdaProjSum& f0 = res.steps[0];
    const LambdaProjSum& f1 = res.steps[1];
    int n = c.vertex_count();
    auto opv = [&](int v) { return n + 1 - v; };

    std::vector<std::pair<int, int>> s0, s1;
    for (auto [u, v] : f0.summands) s0.push_back({u, opv(v)});
    for (auto [u, v] : f1.summands) s1.push_back({u, opv(v)});
    LambdaProjSum g0 = lambda_proj_sum(cop, s0);
    LambdaProjSum g1 = lambda_proj_sum(cop, s1);
    LambdaMorphism dual = zero_morphism(cop, g0.rep, g1.rep);

    for (int s = 0; s < f1.summand_count(); ++s) {
        auto [u1, v1] = f1.summands[s];
        std::vector<Scalar> g = res.maps[1].comp[v1 - 1].mats[u1].col(f1.generator_column(a, s));
        for (int sp = 0; sp < f0.summand_count(); ++sp) {
            auto [u0, v0] = f0.summands[sp];
            (void)v0;
            const auto& qpaths = f0.copies[sp][v1 - 1];
            for (std::size_t qi = 0; qi < qpaths.size(); ++qi) {
                std::vector<int> qrev(qpaths[qi].arrows().rbegin(), qpaths[qi].arrows().rend());
                const std::vector<int>& ids = f0.inner[sp].path_ids[u1];
                for (std::size_t pi = 0; pi < ids.size(); ++pi) {
                    Scalar coeff = g[f0.offset[sp][v1 - 1][u1] +
                                     int(qi) * f0.inner[sp].mod.dims[u1] + int(pi)];
                    if (f.is_zero(coeff)) continue;
                    const BasePath& piPath = a.basis()[ids[pi]];
                    std::vector<int> prev(piPath.arrows.rbegin(), piPath.arrows.rend());
                    // Dual of "extend by (q, pi)": prepend the reversed words
                    // over the opposite context.
                    for (int i = 1; i <= n; ++i) {
                        const auto& srcq = g0.copies[sp][i - 1];
                        const auto& dstq = g1.copies[s][i - 1];
                        for (std::size_t sqi = 0; sqi < srcq.size(); ++sqi) {
                            std::vector<int> word = qrev;
                            word.insert(word.end(), srcq[sqi].arrows().begin(),
                                        srcq[sqi].arrows().end());
                            Path tq = word.empty() ? Path::trivial(opv(v1))
                                                   : Path::walk(cop.quiver(), word);
                            if (cop.ideal().in_ideal(tq)) continue;
                            auto itq = std::find(dstq.begin(), dstq.end(), tq);
                            if (itq == dstq.end())
                                throw Error("internal: transpose copy bookkeeping out of sync");
                            int tqi = int(itq - dstq.begin());
                            for (int w = 0; w < aop.vertex_count(); ++w) {
                                const std::vector<int>& sids = g0.inner[sp].path_ids[w];
                                const std::vector<int>& tids = g1.inner[s].path_ids[w];
                                for (std::size_t spi = 0; spi < sids.size(); ++spi) {
                                    BasePath tgt{u1, prev};
                                    const BasePath& sig = aop.basis()[sids[spi]];
                                    tgt.arrows.insert(tgt.arrows.end(), sig.arrows.begin(),
                                                      sig.arrows.end());
                                    int tid = aop.basis_index(tgt);
                                    if (tid < 0) continue;
                                    auto itp = std::find(tids.begin(), tids.end(), tid);
                                    if (itp == tids.end())
                                        throw Error(
                                            "internal: transpose inner bookkeeping out of sync");
                                    int tpi = int(itp - tids.begin());
                                    int col = g0.offset[sp][i - 1][w] +
                                              int(sqi) * g0.inner[sp].mod.dims[w] + int(spi);
                                    int row = g1.offset[s][i - 1][w] +
                                              tqi * g1.inner[s].mod.dims[w] + tpi;
                                    Matrix& cell = dual.comp[i - 1].mats[w];
                                    cell.at(row, col) = f.add(cell.at(row, col), coeff);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return rep_cokernel(cop, g0.rep, g1.rep, dual).rep;
}

bool rep_is_isomorphic(const LambdaContext& c, const LambdaRep& x, const LambdaRep& y,
                       std::uint64_t seed, int trials) {
    for (std::size_t v = 0; v < x.branch.size(); ++v)
        if (x.branch[v].dims != y.branch[v].dims) return false;
    if (x.is_zero()) return true;
    std::vector<LambdaMorphism> basis = rep_hom_space(c, x, y);
    if (basis.empty()) return false;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<Scalar> coeffs = random_vector(c.field(), int(basis.size()), rng);
        LambdaMorphism m = zero_morphism(c, x, y);
        for (std::size_t b = 0; b < basis.size(); ++b)
            m = morphism_add(c, m, morphism_scale(c, basis[b], coeffs[b]));
        if (morphism_is_injective(m)) return true;
    }
    return false;
}

namespace {

GPVerdict scan_side(const LambdaContext& c, const LambdaResolution& res, const LambdaRep& reg,
                    int depth, bool transpose_side) {
    GPVerdict out;
    out.depth = depth;
    out.transpose_side = transpose_side;
    const std::string who = transpose_side ? "transpose" : "module";
    int max_i = res.terminated ? std::min(depth + 1, int(res.steps.size()) - 1) : depth;
    std::vector<int> ext = ext_from_resolution(c, res, reg, std::max(max_i, 0));
    for (int i = 1; i <= max_i; ++i)
        if (ext[i] != 0) {
            out.verdict = GP::not_gp;
            out.ext_degree = i;
            out.ext_dim = ext[i];
            out.witness = "Ext^" + std::to_string(i) + "(" + who +
                          ", algebra) has dimension " + std::to_string(ext[i]);
            return out;
        }
    if (res.terminated) {
        out.verdict = GP::gp;
        out.witness = who + " has finite projective dimension and no Ext against the algebra, "
                            "hence is projective";
        return out;
    }
    out.verdict = GP::unknown;
    return out;
}

std::optional<std::pair<int, int>> rep_syzygy_repeat(const LambdaContext& c,
                                                     const LambdaResolution& res, int max_index,
                                                     std::uint64_t seed, int trials) {
    int top = std::min<int>(max_index, int(res.syzygies.size()) - 1);
    auto dims_of = [](const LambdaRep& r) {
        std::vector<int> d;
        for (const auto& m : r.branch) d.insert(d.end(), m.dims.begin(), m.dims.end());
        return d;
    };
    for (int x = 0; x <= top; ++x)
        for (int y = x + 1; y <= top; ++y) {
            if (dims_of(res.syzygies[x]) != dims_of(res.syzygies[y])) continue;
            if (rep_is_isomorphic(c, res.syzygies[x], res.syzygies[y],
                                  seed + std::uint64_t(17 * x + y), trials))
                return std::make_pair(x, y);
        }
    return std::nullopt;
}

/// Exact decision when the tensor algebra has finite global dimension
/// (semisimple coefficients): GP = projective, and a minimal resolution
/// terminates by the outer global dimension.
GPVerdict finite_gldim_decide(const LambdaContext& c, const LambdaRep& x) {
    GPVerdict out;
    int nu = outer_global_dimension(c);
    out.depth = nu;
    if (x.is_zero()) {
        out.verdict = GP::gp;
        out.witness = "zero representation";
        return out;
    }
    LambdaResolution res = rep_resolve(c, x, nu + 1, true);
    if (!res.terminated)
        throw Error("internal: resolution exceeded the finite global dimension bound");
    return scan_side(c, res, regular_rep(c).rep, nu, false);
}

/// Exact decision for self-injective coefficients: the tensor algebra is
/// Gorenstein with one-sided injective dimension at most the outer global
/// dimension nu, so X is Gorenstein-projective iff Ext^{1..nu}(X, algebra)
/// vanishes (higher degrees vanish automatically).
GPVerdict selfinjective_decide(const LambdaContext& c, const LambdaRep& x) {
    GPVerdict out;
    int nu = outer_global_dimension(c);
    out.depth = nu;
    if (x.is_zero()) {
        out.verdict = GP::gp;
        out.witness = "zero representation";
        return out;
    }
    std::vector<int> ext = rep_ext_dims(c, x, regular_rep(c).rep, nu);
    for (int i = 1; i <= nu; ++i)
        if (ext[i] != 0) {
            out.verdict = GP::not_gp;
            out.ext_degree = i;
            out.ext_dim = ext[i];
            out.witness = "Ext^" + std::to_string(i) + "(module, algebra) has dimension " +
                          std::to_string(ext[i]);
            return out;
        }
    out.verdict = GP::gp;
    out.witness = "Ext^{1.." + std::to_string(nu) +
                  "}(module, algebra) vanishes; with self-injective coefficients the tensor "
                  "algebra is Gorenstein with injective dimension at most " + std::to_string(nu);
    return out;
}

GPVerdict bounded_decide(const LambdaContext& c, const LambdaRep& x, const GPConfig& cfg) {
    GPVerdict out;
    out.depth = cfg.depth;
    if (x.is_zero()) {
        out.verdict = GP::gp;
        out.witness = "zero representation";
        return out;
    }
    LambdaResolution left = rep_resolve(c, x, cfg.depth + 1, true);
    GPVerdict lv = scan_side(c, left, regular_rep(c).rep, cfg.depth, false);
    if (lv.verdict != GP::unknown) return lv;

    LambdaContext cop = opposite_context(c);
    LambdaRep tr = rep_transpose(c, cop, x);
    LambdaResolution right = rep_resolve(cop, tr, cfg.depth + 1, true);
    GPVerdict rv = scan_side(cop, right, regular_rep(cop).rep, cfg.depth, true);
    if (rv.verdict != GP::unknown) return rv;

    auto lp = rep_syzygy_repeat(c, left, cfg.depth, cfg.seed, cfg.iso_trials);
    if (lp) {
        auto rp = rep_syzygy_repeat(cop, right, cfg.depth, cfg.seed ^ 0x9e3779b97f4a7c15ULL,
                                    cfg.iso_trials);
        if (rp) {
            out.verdict = GP::gp;
            out.witness = "Ext vanishes through depth " + std::to_string(cfg.depth) +
                          " on both sides, with periodic syzygies (module: " +
                          std::to_string(lp->first) + "~" + std::to_string(lp->second) +
                          ", transpose: " + std::to_string(rp->first) + "~" +
                          std::to_string(rp->second) + ")";
            return out;
        }
    }
    out.verdict = GP::unknown;
    out.witness = "Ext vanishes through depth " + std::to_string(cfg.depth) +
                  " on both sides, but no syzygy period was found";
    return out;
}

} // namespace

GPVerdict rep_gp_check(const LambdaContext& c, const LambdaRep& x, const GPConfig& cfg) {
    GPMode mode = cfg.mode;
    if (mode == GPMode::automatic) {
        if (c.base().is_semisimple())
            mode = GPMode::semisimple;
        else if (is_self_injective(c.base()))
            mode = GPMode::selfinjective;
        else
            mode = GPMode::bounded;
    } else if (mode == GPMode::semisimple) {
        if (!c.base().is_semisimple())
            throw ValidationError("semisimple mode requires an arrowless coefficient algebra");
    } else if (mode == GPMode::selfinjective) {
        if (!is_self_injective(c.base()))
            throw ValidationError(
                "self-injective mode: the regular module is not isomorphic to its dual");
    }
    switch (mode) {
    case GPMode::semisimple: return finite_gldim_decide(c, x);
    case GPMode::selfinjective: return selfinjective_decide(c, x);
    default: return bounded_decide(c, x, cfg);
    }
}

} // namespace monrep
