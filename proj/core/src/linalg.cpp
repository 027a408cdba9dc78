#include "reinet/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace reinet {

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix rref(RatMatrix m) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols && lead < m.rows; ++c) {
    std::size_t piv = lead;
    while (piv < m.rows && sgn(m(piv, c)) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(lead, j));
    Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < m.cols; ++j) m(lead, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == lead || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(lead, j);
    }
    ++lead;
  }
  return m;
}

static std::size_t nonzero_rows(const RatMatrix& r) {
  std::size_t k = 0;
  for (; k < r.rows; ++k) {
    bool zero = true;
    for (std::size_t j = 0; j < r.cols && zero; ++j) zero = sgn(r(k, j)) == 0;
    if (zero) break;
  }
  return k;
}

std::size_t rank(const RatMatrix& m) { return nonzero_rows(rref(m)); }

SpanKey span_key_of_rows(const std::vector<std::vector<long>>& rows, std::size_t ambient_dim) {
  RatMatrix r = rref(RatMatrix::from_rows(rows, ambient_dim));
  std::size_t k = nonzero_rows(r);
  r.data.resize(k * r.cols);
  r.rows = k;
  return {std::move(r), ambient_dim};
}

SpanKey span_key(const std::vector<SquareMatrix>& mats) {
  if (mats.empty()) return {RatMatrix(0, 0), 0};
  const int n = mats.front().size();
  std::vector<std::vector<long>> rows;
  for (const auto& m : mats) {
    if (m.size() != n) throw std::invalid_argument("span_key: matrix dimension mismatch");
    rows.emplace_back(m.data().begin(), m.data().end());
  }
  return span_key_of_rows(rows, static_cast<std::size_t>(n) * n);
}

bool row_space_equal(const SpanKey& a, const SpanKey& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("row_space_equal: ambient dimensions differ");
  return a == b;
}

bool operator<(const SpanKey& a, const SpanKey& b) {
  if (a.ambient_dim != b.ambient_dim) return a.ambient_dim < b.ambient_dim;
  if (a.basis.rows != b.basis.rows) return a.basis.rows < b.basis.rows;
  for (std::size_t k = 0; k < a.basis.data.size(); ++k) {
    int c = cmp(a.basis.data[k], b.basis.data[k]);
    if (c) return c < 0;
  }
  return false;
}

std::string SpanKey::serialize() const {
  std::ostringstream os;
  os << ambient_dim << ':';
  for (std::size_t i = 0; i < basis.rows; ++i) {
    if (i) os << '|';
    for (std::size_t j = 0; j < basis.cols; ++j) {
      if (j) os << ',';
      os << basis(i, j).get_str();
    }
  }
  return os.str();
}

}  // namespace reinet
