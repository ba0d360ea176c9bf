#pragma once
#include <cstdint>
#include <optional>
#include <vector>

namespace pnm {

// Dense row-major matrix with entries in [0, p).
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<int> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    int at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    bool operator==(const Mat&) const = default;
};

// Reduced row echelon form of a subspace, maintained incrementally.
// Pivot rule: leftmost nonzero entry, normalized to 1; rows kept sorted by pivot.
class Echelon {
public:
    Echelon(int p, int width) : p_(p), width_(width) {}

    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Reduces v in place against the current rows; returns true if v is now zero.
    bool reduce(std::vector<int>& v) const;
    // Inserts v (reduced first); returns true if the rank grew.
    bool insert(std::vector<int> v);
    std::vector<int> non_pivots() const;

private:
    int p_;
    int width_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> pivots_;
};

class Field {
public:
    explicit Field(int p);

    int p() const { return p_; }
    int norm(long long x) const {
        long long r = x % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }
    int add(int x, int y) const { return norm(static_cast<long long>(x) + y); }
    int sub(int x, int y) const { return norm(static_cast<long long>(x) - y); }
    int mul(int x, int y) const { return norm(static_cast<long long>(x) * y); }
    int neg(int x) const { return norm(-static_cast<long long>(x)); }
    int inv(int x) const;

    Mat identity(int n) const;
    Mat zero(int r, int c) const { return Mat(r, c); }
    Mat mul(const Mat& A, const Mat& B) const;
    Mat add(const Mat& A, const Mat& B) const;
    Mat sub(const Mat& A, const Mat& B) const;
    Mat scale(int k, const Mat& A) const;
    Mat kron(const Mat& A, const Mat& B) const;
    Mat transpose(const Mat& A) const;

    Echelon rref(const Mat& A) const;
    int rank(const Mat& A) const { return rref(A).rank(); }

    // Kernel basis as columns (cols x k). The basis is the reduced echelon basis of
    // the kernel itself, so it depends only on the subspace: each basis vector has a
    // 1 at its pivot coordinate and 0 at the other pivots, pivots leftmost.
    struct Kernel {
        Mat basis;
        std::vector<int> pivots;
    };
    Kernel kernel(const Mat& A) const;

    // Solves A X = B. Free variables are set to zero; the pivot search runs over
    // columns left to right, or right to left when reverse is set.
    std::optional<Mat> solve(const Mat& A, const Mat& B, bool reverse = false) const;
    std::optional<Mat> inverse(const Mat& A) const;

private:
    int p_;
};

bool is_prime(int p);

}  // namespace pnm
