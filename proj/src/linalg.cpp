#include "mdsgit/linalg.hpp"

#include "mdsgit/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace mdsgit {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("matrix row has wrong length");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVector> out;
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        IntVector v;
        for (long x : r) v.emplace_back(x);
        out.push_back(std::move(v));
    }
    return from_rows(out, cols);
}

IntegerMatrix IntegerMatrix::from_columns(std::span<const IntVector> columns, std::size_t rows) {
    IntegerMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw DimensionMismatch("matrix column has wrong length");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

IntVector IntegerMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntegerMatrix::column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<IntVector> IntegerMatrix::row_list() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

std::vector<IntVector> IntegerMatrix::column_list() const {
    std::vector<IntVector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::select_columns(std::span<const std::size_t> indices) const {
    IntegerMatrix out(rows_, indices.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < indices.size(); ++k) out(i, k) = (*this)(i, indices[k]);
    return out;
}

IntegerMatrix IntegerMatrix::select_rows(std::size_t begin, std::size_t end) const {
    IntegerMatrix out(end - begin, cols_);
    for (std::size_t i = begin; i < end; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i - begin, j) = (*this)(i, j);
    return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::negate_column(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool IntegerMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

IntVector operator*(const IntegerMatrix& a, const IntVector& x) {
    if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    IntVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << mdsgit::to_string(row(i));
    }
    os << ']';
    return os.str();
}

std::vector<Integer> SmithForm::elementary_divisors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
    return out;
}

namespace {

// Leftmost (then topmost) entry of minimal nonzero absolute value in d[t.., t..].
bool find_min_pivot(const IntegerMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t j = t; j < d.cols(); ++j)
        for (std::size_t i = t; i < d.rows(); ++i) {
            if (d(i, j) == 0) continue;
            Integer a = abs(d(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
    SmithForm s{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols()), 0};
    IntegerMatrix& d = s.d;
    const std::size_t limit = std::min(d.rows(), d.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!find_min_pivot(d, t, pi, pj)) break;
        d.swap_rows(t, pi);
        s.u.swap_rows(t, pi);
        d.swap_columns(t, pj);
        s.v.swap_columns(t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Integer q = d(i, t) / d(t, t);
                d.add_row_multiple(i, t, -q);
                s.u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Integer q = d(t, j) / d(t, t);
                d.add_column_multiple(j, t, -q);
                s.v.add_column_multiple(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) {
                // Bring the smallest remainder in row/column t into the pivot position.
                std::size_t bi = t, bj = t;
                Integer best = abs(d(t, t));
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(t, j) != 0 && abs(d(t, j)) < best) {
                        best = abs(d(t, j));
                        bi = t;
                        bj = j;
                    }
                for (std::size_t i = t + 1; i < d.rows(); ++i)
                    if (d(i, t) != 0 && abs(d(i, t)) < best) {
                        best = abs(d(i, t));
                        bi = i;
                        bj = t;
                    }
                d.swap_rows(t, bi);
                s.u.swap_rows(t, bi);
                d.swap_columns(t, bj);
                s.v.swap_columns(t, bj);
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and reduce again.
            bool divides = true;
            for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        s.u.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            s.u.negate_row(t);
        }
    }
    s.rank = t;
    return s;
}

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
    HermiteForm hf{m, IntegerMatrix::identity(m.rows()), 0};
    IntegerMatrix& h = hf.h;
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
        bool pivot = false;
        for (;;) {
            std::size_t best_i = h.rows();
            for (std::size_t i = row; i < h.rows(); ++i)
                if (h(i, col) != 0 && (best_i == h.rows() || abs(h(i, col)) < abs(h(best_i, col))))
                    best_i = i;
            if (best_i == h.rows()) break;
            pivot = true;
            h.swap_rows(row, best_i);
            hf.u.swap_rows(row, best_i);
            bool clean = true;
            for (std::size_t i = row + 1; i < h.rows(); ++i) {
                if (h(i, col) == 0) continue;
                Integer q = h(i, col) / h(row, col);
                h.add_row_multiple(i, row, -q);
                hf.u.add_row_multiple(i, row, -q);
                if (h(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!pivot) continue;
        if (h(row, col) < 0) {
            h.negate_row(row);
            hf.u.negate_row(row);
        }
        for (std::size_t i = 0; i < row; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
            h.add_row_multiple(i, row, -q);
            hf.u.add_row_multiple(i, row, -q);
        }
        ++row;
    }
    hf.rank = row;
    return hf;
}

IntegerMatrix saturated_kernel_basis(const IntegerMatrix& m) {
    SmithForm s = smith_normal_form(m);
    const std::size_t k = m.cols() - s.rank;
    IntegerMatrix basis(k, m.cols());
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t j = 0; j < m.cols(); ++j) basis(a, j) = s.v(j, s.rank + a);
    if (k == 0) return basis;
    return hermite_normal_form(basis).h;
}

namespace {

// Reduced row echelon form over Q, in place. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::vector<RatVector> to_rational_rows(std::span<const IntVector> vectors) {
    std::vector<RatVector> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) rows.push_back(to_rational(v));
    return rows;
}

}  // namespace

std::size_t rank(std::span<const IntVector> vectors) {
    if (vectors.empty()) return 0;
    auto rows = to_rational_rows(vectors);
    return rref(rows, vectors.front().size()).size();
}

std::size_t rank(const IntegerMatrix& m) {
    auto rows = m.row_list();
    return rank(std::span<const IntVector>(rows));
}

Integer determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntegerMatrix a = m;
    Integer prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer x = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sgn * a(n - 1, n - 1);
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product dimension mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

int sign(const Integer& x) { return sgn(x); }
int sign(const Rational& x) { return sgn(x); }

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntVector primitive(IntVector v) {
    Integer g = content(v);
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

IntVector clear_denominators(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational y = v[i] * l;
        out[i] = y.get_num();
    }
    return out;
}

IntVector primitive(const RatVector& v) { return primitive(clear_denominators(v)); }

RatVector to_rational(const IntVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

IntVector operator+(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sum dimension mismatch");
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector difference dimension mismatch");
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

IntVector operator-(const IntVector& a) {
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

IntVector operator*(const Integer& s, const IntVector& v) {
    IntVector c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
    return c;
}

std::vector<IntVector> canonical_span_basis(std::span<const IntVector> vectors, std::size_t dim) {
    for (const auto& v : vectors)
        if (v.size() != dim) throw DimensionMismatch("span basis dimension mismatch");
    auto rows = to_rational_rows(vectors);
    rref(rows, dim);
    std::vector<IntVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(primitive(r));
    return out;
}

std::vector<IntVector> orthogonal_complement(std::span<const IntVector> vectors, std::size_t dim) {
    for (const auto& v : vectors)
        if (v.size() != dim) throw DimensionMismatch("complement dimension mismatch");
    auto rows = to_rational_rows(vectors);
    auto pivots = rref(rows, dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<IntVector> kernel;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        RatVector x(dim);
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][f];
        kernel.push_back(primitive(x));
    }
    return canonical_span_basis(kernel, dim);
}

bool solve_rational(std::span<const IntVector> rows, const RatVector& rhs, RatVector& out,
                    std::size_t unknowns) {
    if (rows.size() != rhs.size()) throw DimensionMismatch("linear system shape mismatch");
    std::vector<RatVector> aug;
    aug.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != unknowns) throw DimensionMismatch("linear system shape mismatch");
        RatVector r = to_rational(rows[i]);
        r.push_back(rhs[i]);
        aug.push_back(std::move(r));
    }
    auto pivots = rref(aug, unknowns + 1);
    if (!pivots.empty() && pivots.back() == unknowns) return false;
    out.assign(unknowns, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) out[pivots[r]] = aug[r][unknowns];
    return true;
}

std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string to_string(const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace mdsgit
