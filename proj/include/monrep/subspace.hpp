#pragma once

#include <optional>
#include <vector>

#include "monrep/matrix.hpp"

namespace monrep {

/// Subspace of k^ambient stored as a basis matrix (ambient x dim) in reduced
/// column echelon form: each basis column has a leading 1 in a distinct pivot
/// row and all other basis columns vanish in pivot rows.  The form is unique,
/// so equal subspaces compare equal as matrices.
class Subspace {
public:
    Subspace(Field f, int ambient); // zero subspace
    static Subspace span(const Matrix& columns);
    static Subspace full(Field f, int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const Field& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivot_rows() const { return pivot_rows_; }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in this basis; nullopt when v lies outside.
    std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;

    static Subspace sum(const std::vector<Subspace>& parts);

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    int ambient_;
    Matrix basis_;
    std::vector<int> pivot_rows_;
};

/// Result of a directness test.  When `direct` is false, `dependency` holds a
/// nontrivial coefficient vector across the concatenated part bases whose
/// combination is zero, and `witness_vector` the (nonzero) ambient vector
/// realized by the positive part of that dependency.
struct DirectSumCheck {
    bool direct = true;
    std::vector<Scalar> dependency;
    std::vector<Scalar> witness_vector;
};
DirectSumCheck sum_is_direct(const std::vector<Subspace>& parts);

/// Quotient k^ambient / s with an explicit splitting:
/// projection (dim x ambient, kernel exactly s) and section (ambient x dim)
/// with projection * section = identity.
struct QuotientData {
    int dim = 0;
    Matrix projection;
    Matrix section;
};
QuotientData quotient_with_projection(const Subspace& s);

/// Column span of a matrix, as a canonical subspace of k^rows.
Subspace column_space(const Matrix& m);

/// Kernel {v : m v = 0} as a canonical subspace of k^cols.
Subspace kernel_space(const Matrix& m);

} // namespace monrep
