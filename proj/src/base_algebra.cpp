#include "monrep/base_algebra.hpp"

#include <algorithm>
#include <set>

namespace monrep {

namespace {

bool contains_subword(const std::vector<int>& word, const std::vector<int>& sub) {
    if (sub.empty() || sub.size() > word.size()) return sub.empty();
    for (std::size_t off = 0; off + sub.size() <= word.size(); ++off) {
        bool hit = true;
        for (std::size_t k = 0; k < sub.size(); ++k)
            if (word[off + k] != sub[k]) {
                hit = false;
                break;
            }
        if (hit) return true;
    }
    return false;
}

std::string word_display(const BaseAlgebra& a, const std::vector<int>& word) {
    std::string out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (!out.empty()) out += ".";
        out += a.arrow(*it).name;
    }
    return out;
}

} // namespace

BaseAlgebra::BaseAlgebra(Field f, std::vector<std::string> vertex_names,
                         std::vector<BaseArrow> arrows, std::vector<std::vector<int>> relations,
                         int length_cap)
    : field_(f),
      vertex_names_(std::move(vertex_names)),
      arrows_(std::move(arrows)),
      relations_(std::move(relations)) {
    const int n = vertex_count();
    if (n < 1) throw ValidationError("algebra needs at least one vertex");
    {
        std::set<std::string> seen;
        for (const std::string& v : vertex_names_)
            if (!seen.insert(v).second) throw ValidationError("duplicate vertex name " + v);
    }
    std::set<std::string> arrow_names;
    for (const BaseArrow& a : arrows_) {
        if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
            throw ValidationError("arrow " + a.name + " touches an undeclared vertex");
        if (!arrow_names.insert(a.name).second)
            throw ValidationError("duplicate arrow name " + a.name);
    }
    for (const std::vector<int>& w : relations_) {
        if (w.size() < 2)
            throw ValidationError("relation " + word_display(*this, w) +
                                  " has length < 2 (ideal must be admissible)");
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (arrows_[w[k]].target != arrows_[w[k + 1]].source)
                throw ValidationError("relation " + word_display(*this, w) + " does not compose");
    }
    for (std::size_t i = 0; i < relations_.size(); ++i)
        for (std::size_t j = 0; j < relations_.size(); ++j)
            if (i != j && contains_subword(relations_[i], relations_[j]))
                throw ValidationError("relation set not minimal: " +
                                      word_display(*this, relations_[j]) + " is a subword of " +
                                      word_display(*this, relations_[i]));

    // Basis = nonzero paths, grown by length; a nonzero path beyond the cap
    // means the quotient is not visibly finite dimensional.
    auto in_ideal = [&](const std::vector<int>& w) {
        for (const std::vector<int>& g : relations_)
            if (contains_subword(w, g)) return true;
        return false;
    };
    for (int v = 0; v < n; ++v) basis_.push_back({v, {}});
    std::size_t lo = 0, hi = basis_.size();
    int len = 0;
    while (lo != hi) {
        ++len;
        if (len > length_cap)
            throw ValidationError("algebra has nonzero paths longer than the length cap (" +
                                  std::to_string(length_cap) +
                                  "); not finite dimensional (or raise the cap)");
        for (std::size_t k = lo; k < hi; ++k) {
            BasePath p = basis_[k];
            int end = path_end(p);
            for (int id = 0; id < arrow_count(); ++id) {
                if (arrows_[id].source != end) continue;
                BasePath ext = p;
                ext.arrows.push_back(id);
                if (!in_ideal(ext.arrows)) basis_.push_back(std::move(ext));
            }
        }
        lo = hi;
        hi = basis_.size();
    }
    std::sort(basis_.begin(), basis_.end(), [](const BasePath& a, const BasePath& b) {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        if (a.arrows.empty()) return a.start < b.start;
        return a.arrows < b.arrows;
    });
    from_.assign(n, {});
    into_.assign(n, {});
    for (int i = 0; i < int(basis_.size()); ++i) {
        index_[basis_[i]] = i;
        from_[basis_[i].start].push_back(i);
        into_[path_end(basis_[i])].push_back(i);
    }
}

std::optional<int> BaseAlgebra::vertex_index(const std::string& name) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertex_names_[v] == name) return v;
    return std::nullopt;
}

std::optional<int> BaseAlgebra::arrow_id_by_name(const std::string& name) const {
    for (int id = 0; id < arrow_count(); ++id)
        if (arrows_[id].name == name) return id;
    return std::nullopt;
}

int BaseAlgebra::path_end(const BasePath& p) const {
    return p.arrows.empty() ? p.start : arrows_[p.arrows.back()].target;
}

int BaseAlgebra::basis_index(const BasePath& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

BaseAlgebra BaseAlgebra::opposite() const {
    std::vector<BaseArrow> rev;
    for (const BaseArrow& a : arrows_) rev.push_back({a.name, a.target, a.source});
    std::vector<std::vector<int>> rels;
    for (const std::vector<int>& w : relations_) rels.emplace_back(w.rbegin(), w.rend());
    return BaseAlgebra(field_, vertex_names_, std::move(rev), std::move(rels));
}

// ---------------------------------------------------------------------------
// modules and maps

int AModule::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

AModule zero_module(const BaseAlgebra& a) {
    AModule m;
    m.dims.assign(a.vertex_count(), 0);
    for (int id = 0; id < a.arrow_count(); ++id)
        m.arrow_act.push_back(Matrix(a.field(), 0, 0));
    return m;
}

AModule simple_module(const BaseAlgebra& a, int vertex) {
    std::vector<int> mult(a.vertex_count(), 0);
    mult[vertex] = 1;
    return semisimple_module(a, mult);
}

AModule semisimple_module(const BaseAlgebra& a, const std::vector<int>& multiplicities) {
    AModule m;
    m.dims = multiplicities;
    for (int id = 0; id < a.arrow_count(); ++id)
        m.arrow_act.push_back(
            Matrix(a.field(), m.dims[a.arrow(id).target], m.dims[a.arrow(id).source]));
    return m;
}

void validate_module(const BaseAlgebra& a, const AModule& m) {
    if (int(m.dims.size()) != a.vertex_count())
        throw ValidationError("module has wrong number of vertex spaces");
    if (int(m.arrow_act.size()) != a.arrow_count())
        throw ValidationError("module has wrong number of arrow actions");
    for (int id = 0; id < a.arrow_count(); ++id) {
        const Matrix& mat = m.arrow_act[id];
        if (mat.rows() != m.dims[a.arrow(id).target] || mat.cols() != m.dims[a.arrow(id).source])
            throw ValidationError("arrow " + a.arrow(id).name + " action has wrong shape");
        if (!(mat.field() == a.field())) throw ValidationError("module over the wrong field");
    }
    for (const std::vector<int>& w : a.relation_words()) {
        BasePath p{a.arrow(w.front()).source, w};
        if (!path_action(a, m, p).is_zero())
            throw ValidationError("relation " + word_display(a, w) + " acts nonzero");
    }
}

Matrix path_action(const BaseAlgebra& a, const AModule& m, const BasePath& p) {
    Matrix act = Matrix::identity(a.field(), m.dims[p.start]);
    for (int id : p.arrows) act = m.arrow_act[id].mul(act);
    return act;
}

AMap identity_map(const BaseAlgebra& a, const AModule& m) {
    AMap f;
    for (int v = 0; v < a.vertex_count(); ++v)
        f.mats.push_back(Matrix::identity(a.field(), m.dims[v]));
    return f;
}

AMap zero_map(const BaseAlgebra& a, const AModule& dom, const AModule& cod) {
    AMap f;
    for (int v = 0; v < a.vertex_count(); ++v)
        f.mats.push_back(Matrix(a.field(), cod.dims[v], dom.dims[v]));
    return f;
}

void validate_map(const BaseAlgebra& a, const AModule& dom, const AModule& cod, const AMap& f) {
    if (int(f.mats.size()) != a.vertex_count())
        throw ValidationError("map has wrong number of components");
    for (int v = 0; v < a.vertex_count(); ++v)
        if (f.mats[v].rows() != cod.dims[v] || f.mats[v].cols() != dom.dims[v])
            throw ValidationError("map component at vertex " + a.vertex_name(v) +
                                  " has wrong shape");
    for (int id = 0; id < a.arrow_count(); ++id) {
        const BaseArrow& ar = a.arrow(id);
        if (!(cod.arrow_act[id].mul(f.mats[ar.source]) == f.mats[ar.target].mul(dom.arrow_act[id])))
            throw ValidationError("map does not commute with arrow " + ar.name);
    }
}

AMap compose(const AMap& g, const AMap& f) {
    AMap h;
    for (std::size_t v = 0; v < f.mats.size(); ++v) h.mats.push_back(g.mats[v].mul(f.mats[v]));
    return h;
}

AMap map_add(const BaseAlgebra&, const AMap& f, const AMap& g) {
    AMap h;
    for (std::size_t v = 0; v < f.mats.size(); ++v) h.mats.push_back(f.mats[v].add(g.mats[v]));
    return h;
}

AMap map_scale(const BaseAlgebra&, const AMap& f, const Scalar& s) {
    AMap h;
    for (const Matrix& m : f.mats) h.mats.push_back(m.scale(s));
    return h;
}

bool map_is_injective(const AMap& f) {
    for (const Matrix& m : f.mats)
        if (rank(m) != m.cols()) return false;
    return true;
}

bool map_is_surjective(const AModule& cod, const AMap& f) {
    for (std::size_t v = 0; v < f.mats.size(); ++v)
        if (rank(f.mats[v]) != cod.dims[v]) return false;
    return true;
}

std::vector<AMap> hom_space(const BaseAlgebra& a, const AModule& dom, const AModule& cod) {
    const Field& f = a.field();
    const int n = a.vertex_count();
    std::vector<int> voff(n + 1, 0);
    for (int v = 0; v < n; ++v) voff[v + 1] = voff[v] + cod.dims[v] * dom.dims[v];
    const int unknowns = voff[n];

    int rows = 0;
    for (int id = 0; id < a.arrow_count(); ++id)
        rows += cod.dims[a.arrow(id).target] * dom.dims[a.arrow(id).source];

    Matrix sys(f, rows, unknowns);
    int row = 0;
    for (int id = 0; id < a.arrow_count(); ++id) {
        const BaseArrow& ar = a.arrow(id);
        const Matrix& Na = cod.arrow_act[id];
        const Matrix& Ma = dom.arrow_act[id];
        // N_a f_s - f_t M_a = 0, entrywise (r, c).
        for (int r = 0; r < cod.dims[ar.target]; ++r)
            for (int c = 0; c < dom.dims[ar.source]; ++c) {
                for (int k = 0; k < cod.dims[ar.source]; ++k) {
                    int var = voff[ar.source] + k * dom.dims[ar.source] + c;
                    sys.at(row, var) = f.add(sys.at(row, var), Na.at(r, k));
                }
                for (int k = 0; k < dom.dims[ar.target]; ++k) {
                    int var = voff[ar.target] + r * dom.dims[ar.target] + k;
                    sys.at(row, var) = f.sub(sys.at(row, var), Ma.at(k, c));
                }
                ++row;
            }
    }

    Matrix ker = kernel_basis_matrix(sys);
    std::vector<AMap> out;
    for (int j = 0; j < ker.cols(); ++j) {
        AMap h;
        for (int v = 0; v < n; ++v) {
            Matrix comp(f, cod.dims[v], dom.dims[v]);
            for (int r = 0; r < cod.dims[v]; ++r)
                for (int c = 0; c < dom.dims[v]; ++c)
                    comp.at(r, c) = ker.at(voff[v] + r * dom.dims[v] + c, j);
            h.mats.push_back(std::move(comp));
        }
        out.push_back(std::move(h));
    }
    return out;
}

// ---------------------------------------------------------------------------
// subspace families, submodules, quotients

SubspaceFamily zero_family(const BaseAlgebra& a, const AModule& m) {
    SubspaceFamily s;
    for (int v = 0; v < a.vertex_count(); ++v) s.emplace_back(a.field(), m.dims[v]);
    return s;
}

bool family_is_invariant(const BaseAlgebra& a, const AModule& m, const SubspaceFamily& s) {
    for (int id = 0; id < a.arrow_count(); ++id) {
        const BaseArrow& ar = a.arrow(id);
        Subspace pushed = Subspace::span(m.arrow_act[id].mul(s[ar.source].basis()));
        if (!s[ar.target].contains(pushed)) return false;
    }
    return true;
}

SubspaceFamily invariant_closure(const BaseAlgebra& a, const AModule& m,
                                 const std::vector<std::vector<std::vector<Scalar>>>& gens) {
    SubspaceFamily s;
    for (int v = 0; v < a.vertex_count(); ++v)
        s.push_back(Subspace::span(Matrix::from_columns(a.field(), m.dims[v], gens[v])));
    bool changed = true;
    while (changed) {
        changed = false;
        for (int id = 0; id < a.arrow_count(); ++id) {
            const BaseArrow& ar = a.arrow(id);
            Subspace pushed = Subspace::span(m.arrow_act[id].mul(s[ar.source].basis()));
            if (!s[ar.target].contains(pushed)) {
                s[ar.target] = Subspace::sum({s[ar.target], pushed});
                changed = true;
            }
        }
    }
    return s;
}

SubmoduleData submodule_from_family(const BaseAlgebra& a, const AModule& m,
                                    const SubspaceFamily& s) {
    if (!family_is_invariant(a, m, s))
        throw ValidationError("subspace family is not arrow-invariant");
    SubmoduleData out;
    out.mod.dims.resize(a.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v) {
        out.mod.dims[v] = s[v].dim();
        out.inclusion.mats.push_back(s[v].basis());
    }
    for (int id = 0; id < a.arrow_count(); ++id) {
        const BaseArrow& ar = a.arrow(id);
        auto y = solve(s[ar.target].basis(), m.arrow_act[id].mul(s[ar.source].basis()));
        if (!y) throw ValidationError("internal: invariant family failed coordinate solve");
        out.mod.arrow_act.push_back(std::move(*y));
    }
    return out;
}

QuotientModuleData quotient_by_family(const BaseAlgebra& a, const AModule& m,
                                      const SubspaceFamily& s) {
    if (!family_is_invariant(a, m, s))
        throw ValidationError("subspace family is not arrow-invariant");
    QuotientModuleData out;
    std::vector<QuotientData> q;
    out.mod.dims.resize(a.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v) {
        q.push_back(quotient_with_projection(s[v]));
        out.mod.dims[v] = q[v].dim;
        out.projection.mats.push_back(q[v].projection);
        out.section.mats.push_back(q[v].section);
    }
    for (int id = 0; id < a.arrow_count(); ++id) {
        const BaseArrow& ar = a.arrow(id);
        out.mod.arrow_act.push_back(
            q[ar.target].projection.mul(m.arrow_act[id]).mul(q[ar.source].section));
    }
    return out;
}

SubmoduleData kernel_of(const BaseAlgebra& a, const AModule& dom, const AModule&, const AMap& f) {
    SubspaceFamily s;
    for (int v = 0; v < a.vertex_count(); ++v) s.push_back(kernel_space(f.mats[v]));
    return submodule_from_family(a, dom, s);
}

SubmoduleData image_of(const BaseAlgebra& a, const AModule&, const AModule& cod, const AMap& f) {
    SubspaceFamily s;
    for (int v = 0; v < a.vertex_count(); ++v) s.push_back(column_space(f.mats[v]));
    return submodule_from_family(a, cod, s);
}

QuotientModuleData cokernel_of(const BaseAlgebra& a, const AModule&, const AModule& cod,
                               const AMap& f) {
    SubspaceFamily s;
    for (int v = 0; v < a.vertex_count(); ++v) s.push_back(column_space(f.mats[v]));
    return quotient_by_family(a, cod, s);
}

DirectSumData direct_sum(const BaseAlgebra& a, const std::vector<AModule>& parts) {
    const Field& f = a.field();
    DirectSumData out;
    out.mod.dims.assign(a.vertex_count(), 0);
    for (const AModule& p : parts)
        for (int v = 0; v < a.vertex_count(); ++v) out.mod.dims[v] += p.dims[v];
    for (int id = 0; id < a.arrow_count(); ++id) {
        std::vector<Matrix> blocks;
        for (const AModule& p : parts) blocks.push_back(p.arrow_act[id]);
        out.mod.arrow_act.push_back(parts.empty()
                                        ? Matrix(f, 0, 0)
                                        : Matrix::block_diag(blocks));
    }
    std::vector<int> off(a.vertex_count(), 0);
    for (const AModule& p : parts) {
        AMap incl, proj;
        for (int v = 0; v < a.vertex_count(); ++v) {
            Matrix in(f, out.mod.dims[v], p.dims[v]);
            Matrix pr(f, p.dims[v], out.mod.dims[v]);
            for (int i = 0; i < p.dims[v]; ++i) {
                in.at(off[v] + i, i) = f.one();
                pr.at(i, off[v] + i) = f.one();
            }
            incl.mats.push_back(std::move(in));
            proj.mats.push_back(std::move(pr));
        }
        out.inclusions.push_back(std::move(incl));
        out.projections.push_back(std::move(proj));
        for (int v = 0; v < a.vertex_count(); ++v) off[v] += p.dims[v];
    }
    return out;
}

SubspaceFamily radical_family(const BaseAlgebra& a, const AModule& m) {
    SubspaceFamily s = zero_family(a, m);
    for (int id = 0; id < a.arrow_count(); ++id) {
        const BaseArrow& ar = a.arrow(id);
        s[ar.target] = Subspace::sum({s[ar.target], column_space(m.arrow_act[id])});
    }
    return s;
}

// ---------------------------------------------------------------------------
// projectives, injectives

ProjectiveModule projective_module(const BaseAlgebra& a, int vertex) {
    const Field& f = a.field();
    ProjectiveModule out;
    out.vertex = vertex;
    out.path_ids.assign(a.vertex_count(), {});
    for (int idx : a.basis_from(vertex)) out.path_ids[a.path_end(a.basis()[idx])].push_back(idx);
    out.mod.dims.resize(a.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v) out.mod.dims[v] = int(out.path_ids[v].size());

    auto position = [&](int v, int idx) {
        for (int k = 0; k < int(out.path_ids[v].size()); ++k)
            if (out.path_ids[v][k] == idx) return k;
        return -1;
    };
    for (int id = 0; id < a.arrow_count(); ++id) {
        const BaseArrow& ar = a.arrow(id);
        Matrix mat(f, out.mod.dims[ar.target], out.mod.dims[ar.source]);
        for (int c = 0; c < out.mod.dims[ar.source]; ++c) {
            BasePath ext = a.basis()[out.path_ids[ar.source][c]];
            ext.arrows.push_back(id);
            int tgt = a.basis_index(ext);
            if (tgt >= 0) mat.at(position(ar.target, tgt), c) = f.one();
        }
        out.mod.arrow_act.push_back(std::move(mat));
    }
    return out;
}

std::vector<ProjectiveModule> indecomposable_projectives(const BaseAlgebra& a) {
    std::vector<ProjectiveModule> out;
    for (int v = 0; v < a.vertex_count(); ++v) out.push_back(projective_module(a, v));
    return out;
}

InjectiveModule dual_injective(const BaseAlgebra& a, int vertex) {
    const Field& f = a.field();
    InjectiveModule out;
    out.vertex = vertex;
    out.path_ids.assign(a.vertex_count(), {});
    for (int idx : a.basis_ending_at(vertex)) out.path_ids[a.basis()[idx].start].push_back(idx);
    out.mod.dims.resize(a.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v) out.mod.dims[v] = int(out.path_ids[v].size());

    auto position = [&](int v, int idx) {
        for (int k = 0; k < int(out.path_ids[v].size()); ++k)
            if (out.path_ids[v][k] == idx) return k;
        return -1;
    };
    // Arrow b: u -> t sends the functional of p (starting with b at u) to the
    // functional of p with b stripped (starting at t).
    for (int id = 0; id < a.arrow_count(); ++id) {
        const BaseArrow& ar = a.arrow(id);
        Matrix mat(f, out.mod.dims[ar.target], out.mod.dims[ar.source]);
        for (int c = 0; c < out.mod.dims[ar.source]; ++c) {
            const BasePath& p = a.basis()[out.path_ids[ar.source][c]];
            if (p.arrows.empty() || p.arrows.front() != id) continue;
            BasePath rest{ar.target, {p.arrows.begin() + 1, p.arrows.end()}};
            int tgt = a.basis_index(rest);
            if (tgt >= 0) mat.at(position(ar.target, tgt), c) = f.one();
        }
        out.mod.arrow_act.push_back(std::move(mat));
    }
    return out;
}

std::vector<InjectiveModule> dual_injectives(const BaseAlgebra& a) {
    std::vector<InjectiveModule> out;
    for (int v = 0; v < a.vertex_count(); ++v) out.push_back(dual_injective(a, v));
    return out;
}

AModule regular_module(const BaseAlgebra& a) {
    std::vector<AModule> parts;
    for (int v = 0; v < a.vertex_count(); ++v) parts.push_back(projective_module(a, v).mod);
    return direct_sum(a, parts).mod;
}

} // namespace monrep
