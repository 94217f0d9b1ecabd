#pragma once

#include <complex>
#include <span>
#include <vector>

namespace scatent {

using cplx = std::complex<double>;

// Row-major square complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

  static CMatrix identity(int n);

  int size() const { return n_; }
  cplx& operator()(int row, int col) { return data_[static_cast<std::size_t>(row) * n_ + col]; }
  const cplx& operator()(int row, int col) const {
    return data_[static_cast<std::size_t>(row) * n_ + col];
  }
  std::span<cplx> row(int r) { return {data_.data() + static_cast<std::size_t>(r) * n_, static_cast<std::size_t>(n_)}; }
  std::span<const cplx> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * n_, static_cast<std::size_t>(n_)};
  }

  void resize(int n) {
    n_ = n;
    data_.assign(static_cast<std::size_t>(n) * n, cplx{});
  }

  std::vector<cplx> multiply(std::span<const cplx> x) const;

 private:
  int n_ = 0;
  std::vector<cplx> data_;
};

// LU factorization with partial (row) pivoting, PA = LU, stored in place.
// Exact zeros are skipped, so banded systems cost O(n b^2).
class ComplexLU {
 public:
  ComplexLU() = default;
  explicit ComplexLU(CMatrix a) { factor(std::move(a)); }

  void factor(CMatrix a);

  int size() const { return lu_.size(); }
  // Smallest |u_kk| met during elimination; +inf for an empty matrix.
  double min_pivot() const { return min_pivot_; }
  cplx determinant() const;

  // Solves A x = b in place.
  void solve(std::span<cplx> b) const;
  // Solves A^T x = b in place.
  void solve_transposed(std::span<cplx> b) const;

 private:
  CMatrix lu_;
  std::vector<int> perm_;
  // Structural extent of each row: first nonzero of L, last nonzero of U.
  std::vector<int> row_lo_;
  std::vector<int> row_hi_;
  int swaps_ = 0;
  double min_pivot_ = 0.0;
};

// Band LU with partial pivoting for matrices with a(i, j) = 0 unless
// -kl <= j - i <= ku. Row interchanges widen U to ku + kl superdiagonals,
// so each row stores 2 kl + ku + 1 entries. Interchanges are applied to the
// right-hand side step by step, as in LAPACK gbtrf/gbtrs.
class BandedLU {
 public:
  BandedLU() = default;
  BandedLU(int n, int kl, int ku);

  int size() const { return n_; }
  int lower() const { return kl_; }
  int upper() const { return ku_; }

  // Zeroes the storage; entries outside the band must stay zero.
  void clear();
  cplx& at(int row, int col) { return data_[index(row, col)]; }
  const cplx& at(int row, int col) const { return data_[index(row, col)]; }

  void factor();

  double min_pivot() const { return min_pivot_; }
  cplx determinant() const;
  void solve(std::span<cplx> b) const;
  void solve_transposed(std::span<cplx> b) const;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width_ + (col - row + kl_);
  }

  int n_ = 0;
  int kl_ = 0;
  int ku_ = 0;
  int width_ = 1;
  std::vector<cplx> data_;
  std::vector<int> pivot_;
  int swaps_ = 0;
  double min_pivot_ = 0.0;
};

double max_abs(std::span<const cplx> v);

}  // namespace scatent
