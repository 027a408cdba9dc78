// Exact rational linear algebra: reduced row echelon form and the span keys
// used to compare spaces of linear admissible maps.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "reinet/network.hpp"

namespace reinet {

using Rational = mpq_class;

struct RatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rational(0)) {}
  static RatMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

  Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool operator==(const RatMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }
};

RatMatrix rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);

struct SpanKey {
  RatMatrix basis;  // rref, zero rows dropped
  std::size_t ambient_dim = 0;

  std::size_t dim() const { return basis.rows; }
  std::string serialize() const;
  bool operator==(const SpanKey& o) const {
    return ambient_dim == o.ambient_dim && basis == o.basis;
  }
};

// Total order used for "least key" selection and ordered maps.
bool operator<(const SpanKey& a, const SpanKey& b);

// Flattens each matrix row-major and returns the canonical basis of their span.
SpanKey span_key(const std::vector<SquareMatrix>& mats);
SpanKey span_key_of_rows(const std::vector<std::vector<long>>& rows, std::size_t ambient_dim);

// Throws std::invalid_argument on ambient dimension mismatch.
bool row_space_equal(const SpanKey& a, const SpanKey& b);

}  // namespace reinet
