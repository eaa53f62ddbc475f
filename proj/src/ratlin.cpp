#include "sexp/ratlin.hpp"

#include <ostream>

#include "sexp/error.hpp"

namespace sexp {

  RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
      : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
    _entries.reserve(_rows * _cols);
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw Error(ErrorCode::IndexOutOfRange, "ragged matrix literal");
      }
      _entries.insert(_entries.end(), r.begin(), r.end());
    }
  }

  RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  RatMatrix RatMatrix::from_rows(std::vector<RatVector> const& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) {
        throw Error(ErrorCode::IndexOutOfRange, "ragged row list");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = rows[r][c];
      }
    }
    return m;
  }

  RatMatrix RatMatrix::from_columns(std::vector<RatVector> const& columns,
                                    std::size_t rows) {
    RatMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) {
        throw Error(ErrorCode::IndexOutOfRange, "column length mismatch");
      }
      for (std::size_t r = 0; r < rows; ++r) {
        m(r, c) = columns[c][r];
      }
    }
    return m;
  }

  RatMatrix RatMatrix::diagonal(RatVector const& d) {
    RatMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      m(i, i) = d[i];
    }
    return m;
  }

  bool RatMatrix::is_symmetric() const {
    if (!is_square()) {
      return false;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = i + 1; j < _cols; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  bool RatMatrix::is_zero() const {
    for (auto const& e : _entries) {
      if (!e.is_zero()) {
        return false;
      }
    }
    return true;
  }

  RatVector RatMatrix::row(std::size_t r) const {
    return RatVector(_entries.begin() + r * _cols,
                     _entries.begin() + (r + 1) * _cols);
  }

  RatVector RatMatrix::column(std::size_t c) const {
    RatVector v(_rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      v[r] = (*this)(r, c);
    }
    return v;
  }

  RatMatrix RatMatrix::transpose() const {
    RatMatrix t(_cols, _rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  RatMatrix operator+(RatMatrix const& a, RatMatrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw Error(ErrorCode::IndexOutOfRange, "matrix shape mismatch in +");
    }
    RatMatrix out = a;
    for (std::size_t i = 0; i < out._entries.size(); ++i) {
      out._entries[i] += b._entries[i];
    }
    return out;
  }

  RatMatrix operator-(RatMatrix const& a, RatMatrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw Error(ErrorCode::IndexOutOfRange, "matrix shape mismatch in -");
    }
    RatMatrix out = a;
    for (std::size_t i = 0; i < out._entries.size(); ++i) {
      out._entries[i] -= b._entries[i];
    }
    return out;
  }

  RatMatrix operator*(RatMatrix const& a, RatMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw Error(ErrorCode::IndexOutOfRange, "matrix shape mismatch in *");
    }
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        Rational const& aik = a(i, k);
        if (aik.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          if (!b(k, j).is_zero()) {
            out(i, j) += aik * b(k, j);
          }
        }
      }
    }
    return out;
  }

  RatMatrix operator*(Rational const& s, RatMatrix const& a) {
    RatMatrix out = a;
    for (auto& e : out._entries) {
      e *= s;
    }
    return out;
  }

  RatVector operator*(RatMatrix const& a, RatVector const& v) {
    if (a.cols() != v.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "matrix-vector shape mismatch");
    }
    RatVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (!a(i, k).is_zero() && !v[k].is_zero()) {
          out[i] += a(i, k) * v[k];
        }
      }
    }
    return out;
  }

  std::ostream& operator<<(std::ostream& os, RatMatrix const& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      os << (r == 0 ? "[" : ", [");
      for (std::size_t c = 0; c < m.cols(); ++c) {
        os << (c == 0 ? "" : ", ") << m(r, c);
      }
      os << ']';
    }
    return os << ']';
  }

  std::ostream& operator<<(std::ostream& os, InertiaSignature const& s) {
    return os << '(' << s.n_plus << ',' << s.n_minus << ',' << s.n_zero << ')';
  }

  InertiaSignature exact_inertia(RatMatrix const& m) {
    if (!m.is_symmetric()) {
      throw Error(ErrorCode::NonSymmetric, "inertia requires a symmetric matrix");
    }
    std::size_t const n = m.rows();
    RatMatrix a = m;
    std::vector<bool> alive(n, true);
    std::size_t remaining = n;
    InertiaSignature sig;

    while (remaining > 0) {
      std::size_t pivot = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (alive[i] && !a(i, i).is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot == n) {
        // Zero diagonal: look for a hyperbolic pair.
        std::size_t pi = n, pj = n;
        for (std::size_t i = 0; i < n && pi == n; ++i) {
          if (!alive[i]) {
            continue;
          }
          for (std::size_t j = i + 1; j < n; ++j) {
            if (alive[j] && !a(i, j).is_zero()) {
              pi = i;
              pj = j;
              break;
            }
          }
        }
        if (pi == n) {
          sig.n_zero += remaining;
          break;
        }
        // e_i <- e_i + e_j
        for (std::size_t l = 0; l < n; ++l) {
          if (alive[l]) {
            a(pi, l) += a(pj, l);
          }
        }
        for (std::size_t l = 0; l < n; ++l) {
          if (alive[l]) {
            a(l, pi) += a(l, pj);
          }
        }
        continue;
      }

      Rational const d = a(pivot, pivot);
      if (d.sign() > 0) {
        ++sig.n_plus;
      } else {
        ++sig.n_minus;
      }
      alive[pivot] = false;
      --remaining;
      for (std::size_t j = 0; j < n; ++j) {
        if (!alive[j] || a(j, pivot).is_zero()) {
          continue;
        }
        Rational const f = a(j, pivot) / d;
        for (std::size_t l = 0; l < n; ++l) {
          if (alive[l] && !a(pivot, l).is_zero()) {
            a(j, l) -= f * a(pivot, l);
          }
        }
      }
    }
    return sig;
  }

  RatMatrix reduced_row_echelon(RatMatrix m, std::vector<std::size_t>& pivots) {
    pivots.clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
      std::size_t p = r;
      while (p < m.rows() && m(p, c).is_zero()) {
        ++p;
      }
      if (p == m.rows()) {
        continue;
      }
      if (p != r) {
        for (std::size_t k = 0; k < m.cols(); ++k) {
          std::swap(m(p, k), m(r, k));
        }
      }
      Rational const inv = Rational(1) / m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        m(r, k) *= inv;
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == r || m(i, c).is_zero()) {
          continue;
        }
        Rational const f = m(i, c);
        for (std::size_t k = c; k < m.cols(); ++k) {
          if (!m(r, k).is_zero()) {
            m(i, k) -= f * m(r, k);
          }
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return m;
  }

  std::size_t rational_rank(RatMatrix const& m) {
    std::vector<std::size_t> pivots;
    reduced_row_echelon(m, pivots);
    return pivots.size();
  }

  std::vector<RatVector> kernel_basis(RatMatrix const& m) {
    std::vector<std::size_t> pivots;
    RatMatrix const e = reduced_row_echelon(m, pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
      is_pivot[p] = true;
    }
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
      if (is_pivot[f]) {
        continue;
      }
      RatVector v(m.cols());
      v[f] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        v[pivots[r]] = -e(r, f);
      }
      for (auto const& x : v) {
        if (!x.is_zero()) {
          if (x.sign() < 0) {
            for (auto& y : v) {
              y = -y;
            }
          }
          break;
        }
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  RatMatrix inverse(RatMatrix const& m) {
    if (!m.is_square()) {
      throw Error(ErrorCode::SingularMatrix, "inverse of a non-square matrix");
    }
    std::size_t const n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        aug(i, j) = m(i, j);
      }
      aug(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots;
    RatMatrix const e = reduced_row_echelon(std::move(aug), pivots);
    if (pivots.size() < n || pivots[n - 1] != n - 1) {
      throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
    }
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        inv(i, j) = e(i, n + j);
      }
    }
    return inv;
  }

  Rational determinant(RatMatrix const& m) {
    if (!m.is_square()) {
      throw Error(ErrorCode::IndexOutOfRange, "determinant of non-square matrix");
    }
    RatMatrix a = m;
    std::size_t const n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && a(p, c).is_zero()) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      if (p != c) {
        for (std::size_t k = 0; k < n; ++k) {
          std::swap(a(p, k), a(c, k));
        }
        det = -det;
      }
      det *= a(c, c);
      for (std::size_t i = c + 1; i < n; ++i) {
        if (a(i, c).is_zero()) {
          continue;
        }
        Rational const f = a(i, c) / a(c, c);
        for (std::size_t k = c; k < n; ++k) {
          a(i, k) -= f * a(c, k);
        }
      }
    }
    return det;
  }

  RatMatrix kronecker(RatMatrix const& a, RatMatrix const& b) {
    RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j).is_zero()) {
          continue;
        }
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (std::size_t l = 0; l < b.cols(); ++l) {
            out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
          }
        }
      }
    }
    return out;
  }

  std::vector<IntegerEigenspace> integer_eigen_spectrum(RatMatrix const& m,
                                                        long bound) {
    if (!m.is_square()) {
      throw Error(ErrorCode::IndexOutOfRange, "eigen spectrum of non-square matrix");
    }
    std::vector<IntegerEigenspace> out;
    for (long t = -bound; t <= bound; ++t) {
      RatMatrix shifted = m;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        shifted(i, i) -= Rational(t);
      }
      auto basis = kernel_basis(shifted);
      if (!basis.empty()) {
        out.push_back({t, std::move(basis)});
      }
    }
    return out;
  }

  Rational dot(RatVector const& a, RatVector const& b) {
    if (a.size() != b.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "dot product length mismatch");
    }
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_zero() && !b[i].is_zero()) {
        s += a[i] * b[i];
      }
    }
    return s;
  }

}  // namespace sexp
