#include "monrep/quiver.hpp"

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

} // namespace

Path Path::trivial(int vertex) { return Path(vertex, vertex, {}); }

Path Path::of_arrow(const Quiver& q, int arrow_id) {
    const Arrow& a = q.arrow(arrow_id);
    return Path(a.source, a.target, {arrow_id});
}

Path Path::walk(const Quiver& q, const std::vector<int>& ids) {
    if (ids.empty()) throw ValidationError("walk of no arrows has no endpoints; use trivial()");
    for (std::size_t k = 0; k + 1 < ids.size(); ++k)
        if (q.arrow(ids[k]).target != q.arrow(ids[k + 1]).source)
            throw ValidationError("arrows " + q.arrow(ids[k]).name + " and " +
                                  q.arrow(ids[k + 1]).name + " do not compose");
    return Path(q.arrow(ids.front()).source, q.arrow(ids.back()).target, ids);
}

int Path::last_arrow() const {
    if (arrows_.empty()) throw ValidationError("trivial path has no last arrow");
    return arrows_.back();
}

Path Path::after(const Path& rhs) const {
    if (rhs.target_ != source_) throw ValidationError("paths do not compose");
    std::vector<int> ids = rhs.arrows_;
    ids.insert(ids.end(), arrows_.begin(), arrows_.end());
    return Path(rhs.source_, target_, std::move(ids));
}

std::string Path::display(const Quiver& q) const {
    if (arrows_.empty()) return "e_" + std::to_string(source_);
    std::string out;
    for (auto it = arrows_.rbegin(); it != arrows_.rend(); ++it) {
        if (!out.empty()) out += ".";
        out += q.arrow(*it).name;
    }
    return out;
}

bool path_less(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.is_trivial()) return a.source() < b.source();
    return a.arrows() < b.arrows();
}

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)) {
    if (n_ < 1) throw ValidationError("quiver needs at least one vertex");
    std::set<std::string> names;
    for (const Arrow& a : arrows_) {
        if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_)
            throw ValidationError("arrow " + a.name + " touches a vertex outside 1.." +
                                  std::to_string(n_));
        if (a.source <= a.target)
            throw ValidationError("arrow " + a.name + ": " + std::to_string(a.source) + "->" +
                                  std::to_string(a.target) +
                                  " violates the descending labeling (source must exceed target)");
        if (!names.insert(a.name).second)
            throw ValidationError("duplicate arrow name " + a.name);
    }
    into_.assign(n_ + 1, {});
    out_.assign(n_ + 1, {});
    for (int id = 0; id < int(arrows_.size()); ++id) {
        into_[arrows_[id].target].push_back(id);
        out_[arrows_[id].source].push_back(id);
    }
}

std::optional<int> Quiver::arrow_id_by_name(const std::string& name) const {
    for (int id = 0; id < int(arrows_.size()); ++id)
        if (arrows_[id].name == name) return id;
    return std::nullopt;
}

MonomialIdeal::MonomialIdeal(const Quiver& q, std::vector<Path> generators)
    : gens_(std::move(generators)) {
    for (const Path& g : gens_)
        if (g.length() < 2)
            throw ValidationError("ideal generator " + g.display(q) +
                                  " has length < 2 (ideal must be admissible)");
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (i == j) continue;
            if (contains_subword(gens_[i].arrows(), gens_[j].arrows()))
                throw ValidationError("generating set not minimal: " + gens_[j].display(q) +
                                      " is a subpath of " + gens_[i].display(q));
        }
    std::sort(gens_.begin(), gens_.end(), path_less);
}

bool MonomialIdeal::in_ideal(const Path& p) const {
    for (const Path& g : gens_)
        if (contains_subword(p.arrows(), g.arrows())) return true;
    return false;
}

std::vector<Path> enumerate_nonzero_paths(const Quiver& q, const MonomialIdeal& ideal) {
    std::vector<Path> out;
    for (int v = 1; v <= q.vertex_count(); ++v) out.push_back(Path::trivial(v));
    // Grow nonzero paths arrow by arrow; extensions of zero paths stay zero,
    // so pruning at the first ideal hit is exhaustive.
    std::size_t frontier_begin = 0;
    std::size_t frontier_end = out.size();
    while (frontier_begin != frontier_end) {
        for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
            Path p = out[k];
            for (int id : q.arrows_out_of(p.target())) {
                Path ext = Path::of_arrow(q, id).after(p);
                if (!ideal.in_ideal(ext)) out.push_back(std::move(ext));
            }
        }
        frontier_begin = frontier_end;
        frontier_end = out.size();
    }
    std::sort(out.begin(), out.end(), path_less);
    return out;
}

std::vector<Path> paths_between(const Quiver& q, const MonomialIdeal& ideal, int j, int i) {
    if (j == i) throw ValidationError("paths_between requires distinct endpoints");
    std::vector<Path> out;
    for (const Path& p : enumerate_nonzero_paths(q, ideal))
        if (p.length() >= 1 && p.source() == j && p.target() == i) out.push_back(p);
    return out;
}

std::vector<Path> k_set(const Quiver& q, const MonomialIdeal& ideal, const Path& p) {
    std::vector<Path> out;
    for (const Path& cand : enumerate_nonzero_paths(q, ideal))
        if (cand.length() >= 1 && cand.target() == p.source() && ideal.in_ideal(p.after(cand)))
            out.push_back(cand);
    return out;
}

BSets b_sets(const Quiver& q, const MonomialIdeal& ideal, const Path& p) {
    BSets out;
    std::vector<Path> killers = k_set(q, ideal, p);
    for (int id : q.arrows_into(p.source())) {
        Path b = Path::of_arrow(q, id);
        if (ideal.in_ideal(p.after(b))) {
            out.b1.push_back(id);
        } else {
            for (const Path& killer : killers)
                if (killer.last_arrow() == id) {
                    out.b2.push_back(id);
                    break;
                }
        }
    }
    return out;
}

OppositeQuiver opposite(const Quiver& q, const MonomialIdeal& ideal) {
    const int n = q.vertex_count();
    std::vector<Arrow> rev;
    for (const Arrow& a : q.arrows())
        rev.push_back({a.name, n + 1 - a.target, n + 1 - a.source});
    Quiver qop(n, std::move(rev));
    std::vector<Path> gens;
    for (const Path& g : ideal.generators()) {
        std::vector<int> ids(g.arrows().rbegin(), g.arrows().rend());
        gens.push_back(Path::walk(qop, ids));
    }
    return {qop, MonomialIdeal(qop, std::move(gens))};
}

SourceDeleted delete_source_vertex(const Quiver& q, const MonomialIdeal& ideal) {
    const int n = q.vertex_count();
    if (n < 2) throw ValidationError("cannot delete the only vertex");
    std::vector<Arrow> kept;
    std::vector<int> id_map(q.arrow_count(), -1);
    for (int id = 0; id < q.arrow_count(); ++id) {
        const Arrow& a = q.arrow(id);
        if (a.source == n) continue; // a target can never be n (n is a source)
        id_map[id] = int(kept.size());
        kept.push_back(a);
    }
    Quiver sub(n - 1, std::move(kept));
    std::vector<Path> gens;
    for (const Path& g : ideal.generators()) {
        if (g.source() == n) continue;
        std::vector<int> ids;
        for (int old : g.arrows()) ids.push_back(id_map[old]);
        gens.push_back(Path::walk(sub, ids));
    }
    return {sub, MonomialIdeal(sub, std::move(gens)), std::move(id_map)};
}

} // namespace monrep
