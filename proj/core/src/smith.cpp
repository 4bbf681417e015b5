#include "lefschetz/smith.hpp"

#include <sstream>
#include <utility>

namespace lefschetz {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r].at(c);
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v.at(c);
  return out;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// Elementary operations applied simultaneously to D and the transforms.
struct Reducer {
  IntMatrix d, u, uinv, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    for (std::size_t r = 0; r < uinv.rows(); ++r) std::swap(uinv(r, i), uinv(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row i += k * row j
  void add_row(std::size_t i, std::size_t j, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) += k * d(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) += k * u(j, c);
    for (std::size_t r = 0; r < uinv.rows(); ++r) uinv(r, j) -= k * uinv(r, i);
  }
  // col i += k * col j
  void add_col(std::size_t i, std::size_t j, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, i) += k * d(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) += k * v(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    for (std::size_t r = 0; r < uinv.rows(); ++r) uinv(r, i) = -uinv(r, i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Reducer red{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& d = red.d;

  std::size_t t = 0;
  while (t < m && t < n) {
    // smallest nonzero pivot in the remaining block
    std::size_t pr = m, pc = n;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < n; ++c)
        if (d(r, c) != 0 && (pr == m || abs(d(r, c)) < abs(d(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr == m) break;
    red.swap_rows(t, pr);
    red.swap_cols(t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (d(r, t) == 0) continue;
        BigInt q = d(r, t) / d(t, t);
        red.add_row(r, t, -q);
        if (d(r, t) != 0) {
          red.swap_rows(t, r);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (d(t, c) == 0) continue;
        BigInt q = d(t, c) / d(t, t);
        red.add_col(c, t, -q);
        if (d(t, c) != 0) {
          red.swap_cols(t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: fold a non-divisible row into the pivot row
      for (std::size_t r = t + 1; r < m && clean; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (d(r, c) % d(t, t) != 0) {
            red.add_row(t, r, 1);
            clean = false;
            break;
          }
    }
    if (d(t, t) < 0) red.negate_row(t);
    ++t;
  }

  SmithForm out;
  out.left = std::move(red.u);
  out.left_inverse = std::move(red.uinv);
  out.right = std::move(red.v);
  for (std::size_t i = 0; i < std::min(m, n); ++i)
    if (red.d(i, i) != 0) out.invariants.push_back(red.d(i, i));
  out.diagonal = std::move(red.d);
  return out;
}

AbelianGroup cokernel(const IntMatrix& a) {
  SmithForm snf = smith_normal_form(a);
  AbelianGroup g;
  g.free_rank = a.rows() - snf.rank();
  for (const auto& x : snf.invariants)
    if (x > 1) g.torsion.push_back(x);
  return g;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

}  // namespace lefschetz
