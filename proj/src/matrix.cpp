#include "monrep/matrix.hpp"

#include <numeric>
#include <sstream>

namespace monrep {

namespace {
using i64 = std::int64_t;
using i128 = __int128;

void require(bool ok, const char* msg) {
    if (!ok) throw ValidationError(msg);
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i64 narrow(i128 v) {
    if (abs128(v) > i128(INT64_MAX))
        throw ArithmeticOverflow(
            "fraction-free elimination overflow; re-run over a prime field (e.g. field 101)");
    return static_cast<i64>(v);
}
} // namespace

Matrix::Matrix(Field f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, f.zero()) {
    require(rows >= 0 && cols >= 0, "negative matrix dimension");
}

Matrix Matrix::identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_int_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
    int r = int(rows.size());
    int c = r == 0 ? 0 : int(rows[0].size());
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        require(int(rows[i].size()) == c, "ragged matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = f.from_int(rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(Field f, int ambient, const std::vector<std::vector<Scalar>>& cols) {
    Matrix m(f, ambient, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) {
        require(int(cols[j].size()) == ambient, "column size mismatch");
        for (int i = 0; i < ambient; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::mul(const Matrix& rhs) const {
    require(field_ == rhs.field_, "field mismatch in mul");
    require(cols_ == rhs.rows_, "dimension mismatch in mul");
    Matrix out(field_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (field_.is_zero(x)) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Scalar& y = rhs.at(k, j);
                if (field_.is_zero(y)) continue;
                out.at(i, j) = field_.add(out.at(i, j), field_.mul(x, y));
            }
        }
    return out;
}

Matrix Matrix::add(const Matrix& rhs) const {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "dimension mismatch in add");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.add(a_[i], rhs.a_[i]);
    return out;
}

Matrix Matrix::sub(const Matrix& rhs) const {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "dimension mismatch in sub");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.sub(a_[i], rhs.a_[i]);
    return out;
}

Matrix Matrix::neg() const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.neg(a_[i]);
    return out;
}

Matrix Matrix::scale(const Scalar& s) const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.mul(a_[i], s);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    require(int(v.size()) == cols_, "vector size mismatch in apply");
    std::vector<Scalar> out(rows_, field_.zero());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!field_.is_zero(at(i, j)) && !field_.is_zero(v[j]))
                out[i] = field_.add(out[i], field_.mul(at(i, j), v[j]));
    return out;
}

std::vector<Scalar> Matrix::col(int j) const {
    std::vector<Scalar> out(rows_, field_.zero());
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

void Matrix::set_col(int j, const std::vector<Scalar>& v) {
    require(int(v.size()) == rows_, "column size mismatch in set_col");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool Matrix::is_zero() const {
    for (const Scalar& s : a_)
        if (s.num != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Scalar& s = at(i, j);
            if (i == j ? !field_.is_one(s) : !field_.is_zero(s)) return false;
        }
    return true;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
    require(!blocks.empty(), "hstack of nothing");
    int r = blocks[0].rows();
    int c = 0;
    for (const Matrix& b : blocks) {
        require(b.rows() == r, "row count mismatch in hstack");
        c += b.cols();
    }
    Matrix out(blocks[0].field(), r, c);
    int off = 0;
    for (const Matrix& b : blocks) {
        out.paste(0, off, b);
        off += b.cols();
    }
    return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
    require(!blocks.empty(), "vstack of nothing");
    int c = blocks[0].cols();
    int r = 0;
    for (const Matrix& b : blocks) {
        require(b.cols() == c, "col count mismatch in vstack");
        r += b.rows();
    }
    Matrix out(blocks[0].field(), r, c);
    int off = 0;
    for (const Matrix& b : blocks) {
        out.paste(off, 0, b);
        off += b.rows();
    }
    return out;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
    require(!blocks.empty(), "block_diag of nothing");
    int r = 0, c = 0;
    for (const Matrix& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix out(blocks[0].field(), r, c);
    int ro = 0, co = 0;
    for (const Matrix& b : blocks) {
        out.paste(ro, co, b);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

void Matrix::paste(int r0, int c0, const Matrix& src) {
    require(r0 + src.rows() <= rows_ && c0 + src.cols() <= cols_, "paste out of range");
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j) at(r0 + i, c0 + j) = src.at(i, j);
}

Matrix Matrix::slice(int r0, int rcount, int c0, int ccount) const {
    require(r0 >= 0 && c0 >= 0 && r0 + rcount <= rows_ && c0 + ccount <= cols_,
            "slice out of range");
    Matrix out(field_, rcount, ccount);
    for (int i = 0; i < rcount; ++i)
        for (int j = 0; j < ccount; ++j) out.at(i, j) = at(r0 + i, c0 + j);
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << field_.to_string(at(i, j));
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.field_ == rhs.field_ && lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ &&
           lhs.a_ == rhs.a_;
}

namespace {

// Gauss-Jordan over F_p.
Rref rref_prime(Matrix m) {
    const Field f = m.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!f.is_zero(m.at(i, c))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Scalar piv_inv = f.inv(m.at(r, c));
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), piv_inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            Scalar factor = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

// Fraction-free forward elimination (Bareiss) + rational Jordan phase.
Rref rref_rational(const Matrix& m) {
    const Field f = m.field();
    const int R = m.rows(), C = m.cols();

    // Scale each row to integers (row operations do not change the RREF).
    std::vector<std::vector<i128>> a(R, std::vector<i128>(C, 0));
    for (int i = 0; i < R; ++i) {
        i64 l = 1;
        for (int j = 0; j < C; ++j) l = narrow(i128(l) / std::gcd(l, m.at(i, j).den) * m.at(i, j).den);
        for (int j = 0; j < C; ++j) {
            const Scalar& s = m.at(i, j);
            a[i][j] = i128(s.num) * (l / s.den);
        }
    }

    std::vector<int> pivots;
    i128 prev = 1;
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int sel = -1;
        for (int i = r; i < R; ++i)
            if (a[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[r]);
        for (int i = r + 1; i < R; ++i) {
            for (int j = c + 1; j < C; ++j)
                a[i][j] = narrow((a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev);
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }

    // Jordan phase with exact rational division; entries are input minors.
    Matrix out(f, R, C);
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) out.at(i, j) = f.from_fraction(narrow(a[i][j]), 1);
    for (int k = int(pivots.size()) - 1; k >= 0; --k) {
        int c = pivots[k];
        Scalar piv_inv = f.inv(out.at(k, c));
        for (int j = c; j < C; ++j) out.at(k, j) = f.mul(out.at(k, j), piv_inv);
        for (int i = 0; i < k; ++i) {
            Scalar factor = out.at(i, c);
            if (f.is_zero(factor)) continue;
            for (int j = c; j < C; ++j)
                out.at(i, j) = f.sub(out.at(i, j), f.mul(factor, out.at(k, j)));
        }
    }
    return {std::move(out), std::move(pivots)};
}

} // namespace

Rref rref(const Matrix& m) {
    return m.field().is_prime_field() ? rref_prime(m) : rref_rational(m);
}

int rank(const Matrix& m) { return int(rref(m).pivot_cols.size()); }

Matrix kernel_basis_matrix(const Matrix& m) {
    Rref r = rref(m);
    const Field f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : r.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<Scalar> v(m.cols(), f.zero());
        v[j] = f.one();
        for (int i = 0; i < int(r.pivot_cols.size()); ++i)
            v[r.pivot_cols[i]] = f.neg(r.mat.at(i, j));
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(f, m.cols(), basis);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ValidationError("solve: row count mismatch");
    Rref r = rref(Matrix::hstack({a, b}));
    const Field f = a.field();
    for (int c : r.pivot_cols)
        if (c >= a.cols()) return std::nullopt; // pivot in the augmented part
    Matrix x(f, a.cols(), b.cols());
    for (int i = 0; i < int(r.pivot_cols.size()); ++i)
        for (int j = 0; j < b.cols(); ++j) x.at(r.pivot_cols[i], j) = r.mat.at(i, a.cols() + j);
    return x;
}

} // namespace monrep
