#include "monrep/subspace.hpp"

namespace monrep {

Subspace::Subspace(Field f, int ambient) : ambient_(ambient), basis_(f, ambient, 0) {
    if (ambient < 0) throw ValidationError("negative ambient dimension");
}

Subspace Subspace::span(const Matrix& columns) {
    // Reduced column echelon form = transposed RREF of the transpose.
    Rref r = rref(columns.transpose());
    Subspace s(columns.field(), columns.rows());
    int k = int(r.pivot_cols.size());
    s.basis_ = r.mat.slice(0, k, 0, columns.rows()).transpose();
    s.pivot_rows_ = r.pivot_cols;
    return s;
}

Subspace Subspace::full(Field f, int ambient) { return span(Matrix::identity(f, ambient)); }

std::optional<std::vector<Scalar>> Subspace::coordinates(const std::vector<Scalar>& v) const {
    if (int(v.size()) != ambient_) throw ValidationError("vector size mismatch in coordinates");
    const Field& f = field();
    // Reduced column echelon: the coordinate of basis column i is v[pivot_rows_[i]].
    std::vector<Scalar> coords(dim(), f.zero());
    for (int i = 0; i < dim(); ++i) coords[i] = v[pivot_rows_[i]];
    std::vector<Scalar> w = basis_.apply(coords);
    for (int i = 0; i < ambient_; ++i)
        if (!(w[i] == v[i])) return std::nullopt;
    return coords;
}

bool Subspace::contains(const std::vector<Scalar>& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw ValidationError("ambient mismatch in contains");
    for (int j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_.col(j))) return false;
    return true;
}

Subspace Subspace::sum(const std::vector<Subspace>& parts) {
    if (parts.empty()) throw ValidationError("sum of no subspaces needs an ambient dimension");
    std::vector<Matrix> bases;
    for (const Subspace& p : parts) {
        if (p.ambient() != parts[0].ambient()) throw ValidationError("ambient mismatch in sum");
        bases.push_back(p.basis());
    }
    return span(Matrix::hstack(bases));
}

DirectSumCheck sum_is_direct(const std::vector<Subspace>& parts) {
    DirectSumCheck out;
    if (parts.empty()) return out; // empty sum is the zero space: direct
    std::vector<Matrix> bases;
    for (const Subspace& p : parts) bases.push_back(p.basis());
    Matrix joint = Matrix::hstack(bases);
    Matrix ker = kernel_basis_matrix(joint);
    if (ker.cols() == 0) return out;

    out.direct = false;
    out.dependency = ker.col(0);
    // Realize the ambient vector carried by the first part that contributes.
    const Field& f = joint.field();
    std::vector<Scalar> v(joint.rows(), f.zero());
    int off = 0;
    for (const Subspace& p : parts) {
        bool hit = false;
        for (int j = 0; j < p.dim(); ++j)
            if (!f.is_zero(out.dependency[off + j])) hit = true;
        if (hit) {
            std::vector<Scalar> coords(p.dim(), f.zero());
            for (int j = 0; j < p.dim(); ++j) coords[j] = out.dependency[off + j];
            v = p.basis().apply(coords);
            break;
        }
        off += p.dim();
    }
    out.witness_vector = std::move(v);
    return out;
}

QuotientData quotient_with_projection(const Subspace& s) {
    const Field& f = s.field();
    const int n = s.ambient();
    const int k = s.dim();

    std::vector<bool> is_pivot(n, false);
    for (int r : s.pivot_rows()) is_pivot[r] = true;

    QuotientData q;
    q.dim = n - k;
    q.projection = Matrix(f, q.dim, n);
    q.section = Matrix(f, n, q.dim);
    int row = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        // pi(x)_row = x_c - sum_i basis[c][i] * x_{pivot_i}
        q.projection.at(row, c) = f.one();
        for (int i = 0; i < k; ++i) {
            const Scalar& b = s.basis().at(c, i);
            if (!f.is_zero(b)) q.projection.at(row, s.pivot_rows()[i]) = f.neg(b);
        }
        q.section.at(c, row) = f.one();
        ++row;
    }
    return q;
}

Subspace column_space(const Matrix& m) { return Subspace::span(m); }

Subspace kernel_space(const Matrix& m) { return Subspace::span(kernel_basis_matrix(m)); }

} // namespace monrep
