#include "ringext/zlinalg.hpp"

#include <sstream>
#include <stdexcept>

namespace ringext::zlinalg {

namespace {

BigInt babs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// floor(a / b) for b != 0
BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

}  // namespace

// ---------------------------------------------------------------- FormalSum

FormalSum FormalSum::generator(std::size_t g, const BigInt& coeff) {
    FormalSum s;
    s.add_term(g, coeff);
    return s;
}

FormalSum FormalSum::from_vector(const std::vector<BigInt>& v) {
    FormalSum s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.terms_.emplace(i, v[i]);
    return s;
}

BigInt FormalSum::coefficient(std::size_t g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void FormalSum::add_term(std::size_t g, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(g, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
    for (const auto& [g, c] : other.terms_) add_term(g, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
    for (const auto& [g, c] : other.terms_) add_term(g, -c);
    return *this;
}

FormalSum FormalSum::operator+(const FormalSum& other) const {
    FormalSum s = *this;
    return s += other;
}

FormalSum FormalSum::operator-(const FormalSum& other) const {
    FormalSum s = *this;
    return s -= other;
}

FormalSum FormalSum::operator-() const { return scaled(-1); }

FormalSum FormalSum::scaled(const BigInt& k) const {
    FormalSum s;
    if (k == 0) return s;
    for (const auto& [g, c] : terms_) s.terms_.emplace(g, c * k);
    return s;
}

std::vector<BigInt> FormalSum::to_vector(std::size_t dim) const {
    std::vector<BigInt> v(dim);
    for (const auto& [g, c] : terms_) {
        if (g >= dim) throw std::out_of_range("formal sum has a generator outside the basis");
        v[g] = c;
    }
    return v;
}

std::string FormalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const BigInt a = babs(c);
        if (a != 1) os << a << "*";
        os << "[" << g << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<FormalSum>& cols, std::size_t dim) {
    IntMatrix m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [g, c] : cols[j].terms()) {
            if (g >= dim) throw std::out_of_range("column has a generator outside the basis");
            m.at(g, j) = c;
        }
    return m;
}

FormalSum IntMatrix::column(std::size_t c) const {
    FormalSum s;
    for (std::size_t r = 0; r < rows_; ++r) s.add_term(r, at(r, c));
    return s;
}

std::vector<FormalSum> IntMatrix::columns() const {
    std::vector<FormalSum> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

FormalSum IntMatrix::apply(const FormalSum& x) const {
    std::vector<BigInt> acc(rows_);
    for (const auto& [g, c] : x.terms()) {
        if (g >= cols_) throw std::out_of_range("vector has a generator outside the domain");
        for (std::size_t r = 0; r < rows_; ++r)
            if (at(r, g) != 0) acc[r] += at(r, g) * c;
    }
    return FormalSum::from_vector(acc);
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix shapes do not compose");
    IntMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (other.at(k, j) != 0) p.at(i, j) += a * other.at(k, j);
        }
    return p;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        if (at(j, c) != 0) at(i, c) += k * at(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
        if (at(r, j) != 0) at(r, i) += k * at(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

std::vector<std::vector<std::string>> IntMatrix::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c).str();
    return out;
}

// ---------------------------------------------------------------- normal forms

NormalForm hermite_form(const IntMatrix& m) {
    NormalForm nf{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), m};
    IntMatrix& H = nf.D;
    IntMatrix& V = nf.V;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t k = 0;
    for (std::size_t r = 0; r < rows && k < cols; ++r) {
        while (true) {
            // smallest nonzero |entry| in row r among columns >= k, lowest column on ties
            std::size_t best = cols;
            for (std::size_t c = k; c < cols; ++c)
                if (H.at(r, c) != 0 && (best == cols || babs(H.at(r, c)) < babs(H.at(r, best)))) best = c;
            if (best == cols) break;
            H.swap_cols(k, best);
            V.swap_cols(k, best);
            bool clean = true;
            for (std::size_t c = k + 1; c < cols; ++c) {
                if (H.at(r, c) == 0) continue;
                const BigInt q = floor_div(H.at(r, c), H.at(r, k));
                H.add_col_multiple(c, k, -q);
                V.add_col_multiple(c, k, -q);
                if (H.at(r, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (H.at(r, k) == 0) continue;
        if (H.at(r, k) < 0) {
            H.negate_col(k);
            V.negate_col(k);
        }
        for (std::size_t j = 0; j < k; ++j) {
            const BigInt q = floor_div(H.at(r, j), H.at(r, k));
            H.add_col_multiple(j, k, -q);
            V.add_col_multiple(j, k, -q);
        }
        ++k;
    }
    return nf;
}

NormalForm smith_form(const IntMatrix& m) {
    NormalForm nf{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), m};
    IntMatrix &D = nf.D, &U = nf.U, &V = nf.V;
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t lim = std::min(rows, cols);

    auto row_op = [&](std::size_t i, std::size_t j, const BigInt& k) {
        D.add_row_multiple(i, j, k);
        U.add_row_multiple(i, j, k);
    };
    auto col_op = [&](std::size_t i, std::size_t j, const BigInt& k) {
        D.add_col_multiple(i, j, k);
        V.add_col_multiple(i, j, k);
    };
    auto swap_r = [&](std::size_t i, std::size_t j) {
        D.swap_rows(i, j);
        U.swap_rows(i, j);
    };
    auto swap_c = [&](std::size_t i, std::size_t j) {
        D.swap_cols(i, j);
        V.swap_cols(i, j);
    };

    for (std::size_t t = 0; t < lim; ++t) {
        // pivot: smallest nonzero |entry| in the trailing block, lowest row then column
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (D.at(i, j) != 0 && (pr == rows || babs(D.at(i, j)) < babs(D.at(pr, pc)))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        swap_r(t, pr);
        swap_c(t, pc);

        while (true) {
            bool done = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D.at(i, t) == 0) continue;
                row_op(i, t, -(D.at(i, t) / D.at(t, t)));
                if (D.at(i, t) != 0) done = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D.at(t, j) == 0) continue;
                col_op(j, t, -(D.at(t, j) / D.at(t, t)));
                if (D.at(t, j) != 0) done = false;
            }
            if (!done) {
                // move the smallest remainder in row/column t onto the diagonal
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (D.at(i, t) != 0 && babs(D.at(i, t)) < babs(D.at(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D.at(t, j) != 0 && babs(D.at(t, j)) < babs(D.at(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                swap_r(t, bi);
                swap_c(t, bj);
                continue;
            }
            // divisibility of the remaining block
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        row_op(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (D.at(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return nf;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
    const auto nf = smith_form(m);
    std::vector<BigInt> out;
    for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t)
        if (nf.D.at(t, t) != 0) out.push_back(nf.D.at(t, t));
    return out;
}

// ---------------------------------------------------------------- solving

LinearSolver::LinearSolver(IntMatrix m) : form_(hermite_form(m)) {
    const IntMatrix& H = form_.D;
    std::size_t k = 0;
    for (std::size_t r = 0; r < H.rows() && k < H.cols(); ++r)
        if (H.at(r, k) != 0) {
            pivot_rows_.push_back(r);
            ++k;
        }
}

std::optional<FormalSum> LinearSolver::solve(const FormalSum& b) const {
    const IntMatrix& H = form_.D;
    const auto bv = b.to_vector(H.rows());
    std::vector<BigInt> y(H.cols());
    for (std::size_t i = 0; i < pivot_rows_.size(); ++i) {
        const std::size_t r = pivot_rows_[i];
        BigInt rest = bv[r];
        for (std::size_t j = 0; j < i; ++j) rest -= H.at(r, j) * y[j];
        if (rest % H.at(r, i) != 0) return std::nullopt;
        y[i] = rest / H.at(r, i);
    }
    // every row, pivot or not, has to match
    const FormalSum yy = FormalSum::from_vector(y);
    if (H.apply(yy) != b) return std::nullopt;
    FormalSum x = form_.V.apply(yy);
    if (form_.original.apply(x) != b) throw std::logic_error("solver produced a non-solution");
    return x;
}

std::vector<FormalSum> LinearSolver::kernel_basis() const {
    std::vector<FormalSum> out;
    for (std::size_t c = rank(); c < form_.V.cols(); ++c) out.push_back(form_.V.column(c));
    return out;
}

std::vector<FormalSum> kernel_basis(const IntMatrix& m) { return LinearSolver(m).kernel_basis(); }

std::optional<FormalSum> solve(const IntMatrix& m, const FormalSum& b) { return LinearSolver(m).solve(b); }

bool in_span(const std::vector<FormalSum>& gens, const FormalSum& v, std::size_t dim) {
    if (v.is_zero()) return true;
    if (gens.empty()) return false;
    return LinearSolver(IntMatrix::from_columns(gens, dim)).solve(v).has_value();
}

bool subgroup_equal(const std::vector<FormalSum>& gens1, const std::vector<FormalSum>& gens2, std::size_t dim) {
    auto contains_all = [dim](const std::vector<FormalSum>& a, const std::vector<FormalSum>& b) {
        if (a.empty()) {
            for (const auto& v : b)
                if (!v.is_zero()) return false;
            return true;
        }
        LinearSolver s(IntMatrix::from_columns(a, dim));
        for (const auto& v : b)
            if (!s.solve(v)) return false;
        return true;
    };
    return contains_all(gens1, gens2) && contains_all(gens2, gens1);
}

}  // namespace ringext::zlinalg
