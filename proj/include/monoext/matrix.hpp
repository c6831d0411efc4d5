// Dense and sparse matrices over a Field.
#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "monoext/field.hpp"

namespace monoext {

  using Vector = std::vector<Rational>;

  // Dense row-major matrix.  Entries are kept normalized for the field.
  class Matrix {
   public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, std::vector<Vector> const& rows);
    // Builds a matrix from integer entries (convenient in tests and builders).
    static Matrix from_ints(Field field, std::vector<std::vector<long>> const& rows);

    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }
    [[nodiscard]] Field const& field() const noexcept {
      return _field;
    }

    [[nodiscard]] Rational const& at(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }
    // Stores field.normalize(value).
    void set(std::size_t i, std::size_t j, Rational const& value);
    // Raw access; callers must store normalized values.
    Rational& raw(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }

    [[nodiscard]] Matrix operator*(Matrix const& other) const;
    [[nodiscard]] Matrix operator+(Matrix const& other) const;
    [[nodiscard]] Matrix operator-(Matrix const& other) const;
    [[nodiscard]] Matrix scaled(Rational const& c) const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Vector apply(Vector const& v) const;

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] bool is_square() const noexcept {
      return _rows == _cols;
    }

    bool operator==(Matrix const& other) const;
    bool operator!=(Matrix const& other) const {
      return !(*this == other);
    }

    [[nodiscard]] Vector row(std::size_t i) const;
    [[nodiscard]] Vector column(std::size_t j) const;

   private:
    Field _field;
    std::size_t _rows = 0;
    std::size_t _cols = 0;
    std::vector<Rational> _data;
  };

  // Kronecker product a (x) b, row-major block convention.
  Matrix kron(Matrix const& a, Matrix const& b);
  // Block-diagonal sum.
  Matrix direct_sum(Matrix const& a, Matrix const& b);

  // Sparse matrix stored by rows; no explicit zeros, columns sorted.
  class SparseMatrix {
   public:
    using Entry = std::pair<std::uint32_t, Rational>;
    using Row = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(Field field, std::size_t cols) : _field(field), _cols(cols) {}

    // Sorts, merges duplicate columns, normalizes and drops zeros.
    void add_row(Row row);

    [[nodiscard]] std::size_t rows() const noexcept {
      return _data.size();
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }
    [[nodiscard]] Field const& field() const noexcept {
      return _field;
    }
    [[nodiscard]] Row const& row(std::size_t i) const {
      return _data[i];
    }
    [[nodiscard]] std::size_t nonzeros() const;
    [[nodiscard]] Matrix to_dense() const;
    static SparseMatrix from_dense(Matrix const& m);

   private:
    Field _field;
    std::size_t _cols = 0;
    std::vector<Row> _data;
  };

}  // namespace monoext
