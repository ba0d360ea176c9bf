#include "pnm/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace pnm {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {
int inv_mod(int x, int p) {
    // extended Euclid
    long long a = x, b = p, u = 1, v = 0;
    while (b != 0) {
        long long q = a / b;
        std::swap(a -= q * b, b);
        std::swap(u -= q * v, v);
    }
    if (a != 1) throw std::domain_error("inverse of zero mod p");
    long long r = u % p;
    return static_cast<int>(r < 0 ? r + p : r);
}
}  // namespace

bool Echelon::reduce(std::vector<int>& v) const {
    bool zero = true;
    for (size_t r = 0; r < rows_.size(); ++r) {
        int c = v[pivots_[r]];
        if (c == 0) continue;
        const auto& row = rows_[r];
        for (int j = pivots_[r]; j < width_; ++j)
            if (row[j] != 0) v[j] = static_cast<int>(((v[j] - static_cast<long long>(c) * row[j]) % p_ + p_) % p_);
    }
    for (int x : v)
        if (x != 0) { zero = false; break; }
    return zero;
}

bool Echelon::insert(std::vector<int> v) {
    if (reduce(v)) return false;
    int q = 0;
    while (v[q] == 0) ++q;
    int s = inv_mod(v[q], p_);
    for (int j = q; j < width_; ++j) v[j] = static_cast<int>(static_cast<long long>(v[j]) * s % p_);
    for (auto& row : rows_) {
        int c = row[q];
        if (c == 0) continue;
        for (int j = q; j < width_; ++j)
            row[j] = static_cast<int>(((row[j] - static_cast<long long>(c) * v[j]) % p_ + p_) % p_);
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), q);
    auto pos = it - pivots_.begin();
    pivots_.insert(it, q);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

std::vector<int> Echelon::non_pivots() const {
    std::vector<int> out;
    size_t k = 0;
    for (int j = 0; j < width_; ++j) {
        if (k < pivots_.size() && pivots_[k] == j) { ++k; continue; }
        out.push_back(j);
    }
    return out;
}

Field::Field(int p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
}

int Field::inv(int x) const { return inv_mod(norm(x), p_); }

Mat Field::identity(int n) const {
    Mat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

Mat Field::mul(const Mat& A, const Mat& B) const {
    if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch in product");
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            int a = A.at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < B.cols; ++j) C.at(i, j) = (C.at(i, j) + a * B.at(k, j)) % p_;
        }
    return C;
}

Mat Field::add(const Mat& A, const Mat& B) const {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("matrix shape mismatch in sum");
    Mat C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = (C.a[i] + B.a[i]) % p_;
    return C;
}

Mat Field::sub(const Mat& A, const Mat& B) const {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("matrix shape mismatch in difference");
    Mat C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = (C.a[i] - B.a[i] + p_) % p_;
    return C;
}

Mat Field::scale(int k, const Mat& A) const {
    Mat C = A;
    for (auto& x : C.a) x = mul(k, x);
    return C;
}

Mat Field::kron(const Mat& A, const Mat& B) const {
    Mat C(A.rows * B.rows, A.cols * B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            int a = A.at(i, j);
            if (a == 0) continue;
            for (int k = 0; k < B.rows; ++k)
                for (int l = 0; l < B.cols; ++l)
                    C.at(i * B.rows + k, j * B.cols + l) = (a * B.at(k, l)) % p_;
        }
    return C;
}

Mat Field::transpose(const Mat& A) const {
    Mat T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Echelon Field::rref(const Mat& A) const {
    Echelon E(p_, A.cols);
    for (int i = 0; i < A.rows; ++i)
        E.insert(std::vector<int>(A.a.begin() + static_cast<long>(i) * A.cols,
                                  A.a.begin() + static_cast<long>(i + 1) * A.cols));
    return E;
}

Field::Kernel Field::kernel(const Mat& A) const {
    Echelon E = rref(A);
    Echelon K(p_, A.cols);
    for (int f : E.non_pivots()) {
        std::vector<int> v(A.cols, 0);
        v[f] = 1;
        for (int r = 0; r < E.rank(); ++r) v[E.pivots()[r]] = neg(E.rows()[r][f]);
        K.insert(std::move(v));
    }
    Kernel out;
    out.basis = Mat(A.cols, K.rank());
    for (int t = 0; t < K.rank(); ++t)
        for (int j = 0; j < A.cols; ++j) out.basis.at(j, t) = K.rows()[t][j];
    out.pivots = K.pivots();
    return out;
}

std::optional<Mat> Field::solve(const Mat& A, const Mat& B, bool reverse) const {
    if (A.rows != B.rows) throw std::invalid_argument("solve: row mismatch");
    const int n = A.cols, m = B.cols, rows = A.rows;
    std::vector<int> order(n);
    for (int j = 0; j < n; ++j) order[j] = reverse ? n - 1 - j : j;
    // augmented [A(order) | B]
    std::vector<std::vector<int>> M(rows, std::vector<int>(n + m));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < n; ++j) M[i][j] = A.at(i, order[j]);
        for (int j = 0; j < m; ++j) M[i][n + j] = B.at(i, j);
    }
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < n && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (M[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(M[r], M[sel]);
        int s = inv(M[r][c]);
        for (auto& x : M[r]) x = mul(x, s);
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            int k = M[i][c];
            for (int j = c; j < n + m; ++j) M[i][j] = sub(M[i][j], mul(k, M[r][j]));
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        for (int j = 0; j < m; ++j)
            if (M[i][n + j] != 0) return std::nullopt;
    Mat X(n, m);
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < m; ++j) X.at(order[pivcol[k]], j) = M[k][n + j];
    return X;
}

std::optional<Mat> Field::inverse(const Mat& A) const {
    if (A.rows != A.cols) return std::nullopt;
    if (rank(A) != A.rows) return std::nullopt;
    return solve(A, identity(A.rows));
}

}  // namespace pnm
