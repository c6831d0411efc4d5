#include "monoext/matrix.hpp"

#include <algorithm>

#include "monoext/error.hpp"

namespace monoext {

  namespace {
    void check_same_field(Field const& a, Field const& b) {
      require(a == b, ErrorCode::kFieldMismatch,
              "matrices over different fields " + a.to_string() + " and " + b.to_string());
    }
  }  // namespace

  Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
      : _field(field), _rows(rows), _cols(cols), _data(rows * cols) {}

  Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m._data[i * n + i] = 1;
    }
    return m;
  }

  Matrix Matrix::from_rows(Field field, std::vector<Vector> const& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == cols, ErrorCode::kDimensionMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) {
        m.set(i, j, rows[i][j]);
      }
    }
    return m;
  }

  Matrix Matrix::from_ints(Field field, std::vector<std::vector<long>> const& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == cols, ErrorCode::kDimensionMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) {
        m.set(i, j, Rational(rows[i][j]));
      }
    }
    return m;
  }

  void Matrix::set(std::size_t i, std::size_t j, Rational const& value) {
    _data[i * _cols + j] = _field.normalize(value);
  }

  Matrix Matrix::operator*(Matrix const& other) const {
    check_same_field(_field, other._field);
    require(_cols == other._rows, ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
    Matrix out(_field, _rows, other._cols);
    if (!_field.is_rational()) {
      std::uint64_t p = _field.characteristic();
      std::vector<std::uint64_t> a(_data.size()), b(other._data.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        a[k] = _data[k].get_num().get_ui();
      }
      for (std::size_t k = 0; k < b.size(); ++k) {
        b[k] = other._data[k].get_num().get_ui();
      }
      std::vector<std::uint64_t> acc(other._cols);
      for (std::size_t i = 0; i < _rows; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < _cols; ++k) {
          std::uint64_t x = a[i * _cols + k];
          if (x == 0) {
            continue;
          }
          for (std::size_t j = 0; j < other._cols; ++j) {
            acc[j] = (acc[j] + x * b[k * other._cols + j]) % p;
          }
        }
        for (std::size_t j = 0; j < other._cols; ++j) {
          out._data[i * other._cols + j] = acc[j];
        }
      }
      return out;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        Rational const& x = _data[i * _cols + k];
        if (sgn(x) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < other._cols; ++j) {
          Rational const& y = other._data[k * other._cols + j];
          if (sgn(y) != 0) {
            out._data[i * other._cols + j] += x * y;
          }
        }
      }
    }
    return out;
  }

  Matrix Matrix::operator+(Matrix const& other) const {
    check_same_field(_field, other._field);
    require(_rows == other._rows && _cols == other._cols, ErrorCode::kDimensionMismatch,
            "matrix sum shape mismatch");
    Matrix out(_field, _rows, _cols);
    for (std::size_t k = 0; k < _data.size(); ++k) {
      out._data[k] = _field.add(_data[k], other._data[k]);
    }
    return out;
  }

  Matrix Matrix::operator-(Matrix const& other) const {
    check_same_field(_field, other._field);
    require(_rows == other._rows && _cols == other._cols, ErrorCode::kDimensionMismatch,
            "matrix difference shape mismatch");
    Matrix out(_field, _rows, _cols);
    for (std::size_t k = 0; k < _data.size(); ++k) {
      out._data[k] = _field.sub(_data[k], other._data[k]);
    }
    return out;
  }

  Matrix Matrix::scaled(Rational const& c) const {
    Matrix out(_field, _rows, _cols);
    Rational cc = _field.normalize(c);
    for (std::size_t k = 0; k < _data.size(); ++k) {
      out._data[k] = _field.mul(_data[k], cc);
    }
    return out;
  }

  Matrix Matrix::transpose() const {
    Matrix out(_field, _cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        out._data[j * _rows + i] = _data[i * _cols + j];
      }
    }
    return out;
  }

  Vector Matrix::apply(Vector const& v) const {
    require(v.size() == _cols, ErrorCode::kDimensionMismatch, "vector length mismatch");
    Vector out(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < _cols; ++j) {
        if (sgn(_data[i * _cols + j]) != 0 && sgn(v[j]) != 0) {
          acc += _data[i * _cols + j] * v[j];
        }
      }
      out[i] = _field.normalize(acc);
    }
    return out;
  }

  bool Matrix::is_zero() const {
    return std::all_of(_data.begin(), _data.end(), [](Rational const& x) { return sgn(x) == 0; });
  }

  bool Matrix::is_identity() const {
    if (_rows != _cols) {
      return false;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if (_data[i * _cols + j] != (i == j ? 1 : 0)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Matrix::operator==(Matrix const& other) const {
    return _field == other._field && _rows == other._rows && _cols == other._cols
           && _data == other._data;
  }

  Vector Matrix::row(std::size_t i) const {
    return Vector(_data.begin() + i * _cols, _data.begin() + (i + 1) * _cols);
  }

  Vector Matrix::column(std::size_t j) const {
    Vector out(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      out[i] = _data[i * _cols + j];
    }
    return out;
  }

  Matrix kron(Matrix const& a, Matrix const& b) {
    check_same_field(a.field(), b.field());
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Rational const& x = a.at(i, j);
        if (sgn(x) == 0) {
          continue;
        }
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (std::size_t l = 0; l < b.cols(); ++l) {
            if (sgn(b.at(k, l)) != 0) {
              out.set(i * b.rows() + k, j * b.cols() + l, x * b.at(k, l));
            }
          }
        }
      }
    }
    return out;
  }

  Matrix direct_sum(Matrix const& a, Matrix const& b) {
    check_same_field(a.field(), b.field());
    Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        out.raw(i, j) = a.at(i, j);
      }
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.raw(a.rows() + i, a.cols() + j) = b.at(i, j);
      }
    }
    return out;
  }

  void SparseMatrix::add_row(Row row) {
    std::sort(row.begin(), row.end(),
              [](Entry const& x, Entry const& y) { return x.first < y.first; });
    Row merged;
    merged.reserve(row.size());
    for (auto& entry : row) {
      require(entry.first < _cols, ErrorCode::kDimensionMismatch, "sparse column out of range");
      if (!merged.empty() && merged.back().first == entry.first) {
        merged.back().second += entry.second;
      } else {
        merged.push_back(std::move(entry));
      }
    }
    Row clean;
    clean.reserve(merged.size());
    for (auto& entry : merged) {
      Rational v = _field.normalize(entry.second);
      if (sgn(v) != 0) {
        clean.emplace_back(entry.first, std::move(v));
      }
    }
    _data.push_back(std::move(clean));
  }

  std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (auto const& r : _data) {
      n += r.size();
    }
    return n;
  }

  Matrix SparseMatrix::to_dense() const {
    Matrix out(_field, _data.size(), _cols);
    for (std::size_t i = 0; i < _data.size(); ++i) {
      for (auto const& [j, v] : _data[i]) {
        out.raw(i, j) = v;
      }
    }
    return out;
  }

  SparseMatrix SparseMatrix::from_dense(Matrix const& m) {
    SparseMatrix out(m.field(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Row r;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (sgn(m.at(i, j)) != 0) {
          r.emplace_back(static_cast<std::uint32_t>(j), m.at(i, j));
        }
      }
      out._data.push_back(std::move(r));
    }
    return out;
  }

}  // namespace monoext
