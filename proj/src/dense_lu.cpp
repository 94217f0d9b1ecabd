#include "scatent/dense_lu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace scatent {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<cplx> CMatrix::multiply(std::span<const cplx> x) const {
  std::vector<cplx> y(n_);
  for (int i = 0; i < n_; ++i) {
    cplx acc{};
    const auto r = row(i);
    for (int j = 0; j < n_; ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

void ComplexLU::factor(CMatrix a) {
  lu_ = std::move(a);
  const int n = lu_.size();
  perm_.resize(n);
  std::iota(perm_.begin(), perm_.end(), 0);
  swaps_ = 0;
  min_pivot_ = std::numeric_limits<double>::infinity();

  // col_last[j]: last row that can hold a nonzero in column j. Fill never
  // reaches below it, so pivot search and elimination stop there.
  std::vector<int> col_last(n, -1);
  row_lo_.resize(n);
  row_hi_.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto r = lu_.row(i);
    row_lo_[i] = i;
    for (int j = 0; j < n; ++j) {
      if (r[j] != cplx{}) col_last[j] = i;
    }
  }

  for (int k = 0; k < n; ++k) {
    const int last = std::max(col_last[k], k);
    int p = k;
    double best = std::abs(lu_(k, k));
    for (int i = k + 1; i <= last; ++i) {
      const double mag = std::abs(lu_(i, k));
      if (mag > best) {
        best = mag;
        p = i;
      }
    }
    min_pivot_ = std::min(min_pivot_, best);
    if (p != k) {
      std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
      std::swap(perm_[k], perm_[p]);
      std::swap(row_lo_[k], row_lo_[p]);
      ++swaps_;
    }
    const auto pivot_row = lu_.row(k);
    int hi = n - 1;
    while (hi > k && pivot_row[hi] == cplx{}) --hi;
    row_hi_[k] = hi;
    if (best == 0.0) continue;

    const cplx inv = 1.0 / pivot_row[k];
    for (int i = k + 1; i <= last; ++i) {
      auto r = lu_.row(i);
      if (r[k] == cplx{}) continue;
      const cplx m = r[k] * inv;
      r[k] = m;
      row_lo_[i] = std::min(row_lo_[i], k);
      for (int j = k + 1; j <= hi; ++j) r[j] -= m * pivot_row[j];
      for (int j = k + 1; j <= hi; ++j) col_last[j] = std::max(col_last[j], i);
    }
  }
}

cplx ComplexLU::determinant() const {
  cplx det = (swaps_ % 2) ? -1.0 : 1.0;
  for (int i = 0; i < lu_.size(); ++i) det *= lu_(i, i);
  return det;
}

void ComplexLU::solve(std::span<cplx> b) const {
  const int n = lu_.size();
  std::vector<cplx> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (int i = 0; i < n; ++i) {
    const auto r = lu_.row(i);
    cplx acc = x[i];
    for (int j = row_lo_[i]; j < i; ++j) acc -= r[j] * x[j];
    x[i] = acc;
  }
  for (int i = n - 1; i >= 0; --i) {
    const auto r = lu_.row(i);
    cplx acc = x[i];
    for (int j = i + 1; j <= row_hi_[i]; ++j) acc -= r[j] * x[j];
    x[i] = acc / r[i];
  }
  std::copy(x.begin(), x.end(), b.begin());
}

void ComplexLU::solve_transposed(std::span<cplx> b) const {
  // A^T = U^T L^T P: forward with U^T, backward with L^T, then undo P.
  // Both sweeps walk rows of the stored factors.
  const int n = lu_.size();
  std::vector<cplx> y(b.begin(), b.end());
  for (int j = 0; j < n; ++j) {
    const auto r = lu_.row(j);
    y[j] /= r[j];
    for (int i = j + 1; i <= row_hi_[j]; ++i) y[i] -= r[i] * y[j];
  }
  for (int i = n - 1; i >= 0; --i) {
    const auto r = lu_.row(i);
    for (int j = row_lo_[i]; j < i; ++j) y[j] -= r[j] * y[i];
  }
  for (int i = 0; i < n; ++i) b[perm_[i]] = y[i];
}

BandedLU::BandedLU(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), width_(2 * kl + ku + 1),
      data_(static_cast<std::size_t>(n) * (2 * kl + ku + 1)), pivot_(n) {}

void BandedLU::clear() { std::fill(data_.begin(), data_.end(), cplx{}); }

void BandedLU::factor() {
  swaps_ = 0;
  min_pivot_ = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n_; ++k) {
    const int last_row = std::min(n_ - 1, k + kl_);
    const int last_col = std::min(n_ - 1, k + kl_ + ku_);
    int p = k;
    double best = std::norm(at(k, k));
    for (int i = k + 1; i <= last_row; ++i) {
      const double mag = std::norm(at(i, k));
      if (mag > best) {
        best = mag;
        p = i;
      }
    }
    pivot_[k] = p;
    min_pivot_ = std::min(min_pivot_, std::sqrt(best));
    if (p != k) {
      for (int j = k; j <= last_col; ++j) std::swap(at(k, j), at(p, j));
      ++swaps_;
    }
    if (best == 0.0) continue;

    const cplx inv = 1.0 / at(k, k);
    for (int i = k + 1; i <= last_row; ++i) {
      cplx& lik = at(i, k);
      if (lik == cplx{}) continue;
      lik *= inv;
      const cplx m = lik;
      for (int j = k + 1; j <= last_col; ++j) at(i, j) -= m * at(k, j);
    }
  }
}

cplx BandedLU::determinant() const {
  cplx det = (swaps_ % 2) ? -1.0 : 1.0;
  for (int i = 0; i < n_; ++i) det *= at(i, i);
  return det;
}

void BandedLU::solve(std::span<cplx> b) const {
  for (int k = 0; k < n_; ++k) {
    std::swap(b[k], b[pivot_[k]]);
    const int last_row = std::min(n_ - 1, k + kl_);
    for (int i = k + 1; i <= last_row; ++i) b[i] -= at(i, k) * b[k];
  }
  for (int i = n_ - 1; i >= 0; --i) {
    const int last_col = std::min(n_ - 1, i + kl_ + ku_);
    cplx acc = b[i];
    for (int j = i + 1; j <= last_col; ++j) acc -= at(i, j) * b[j];
    b[i] = acc / at(i, i);
  }
}

void BandedLU::solve_transposed(std::span<cplx> b) const {
  for (int j = 0; j < n_; ++j) {
    b[j] /= at(j, j);
    const int last_col = std::min(n_ - 1, j + kl_ + ku_);
    for (int i = j + 1; i <= last_col; ++i) b[i] -= at(j, i) * b[j];
  }
  for (int k = n_ - 1; k >= 0; --k) {
    const int last_row = std::min(n_ - 1, k + kl_);
    cplx acc = b[k];
    for (int i = k + 1; i <= last_row; ++i) acc -= at(i, k) * b[i];
    b[k] = acc;
    std::swap(b[k], b[pivot_[k]]);
  }
}

double max_abs(std::span<const cplx> v) {
  double m = 0.0;
  for (const cplx& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace scatent
