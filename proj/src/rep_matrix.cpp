#include "vvmf/rep_matrix.hpp"

#include <cmath>

#include "vvmf/errors.hpp"

namespace vvmf {

RepMatrix RepMatrix::identity(std::size_t n) {
  RepMatrix m = zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m.phases_[i * n + i] = Phase::one();
  return m;
}

RepMatrix RepMatrix::zero(std::size_t rows, std::size_t cols) {
  RepMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.phases_.assign(rows * cols, std::nullopt);
  return m;
}

RepMatrix RepMatrix::exact(std::size_t rows, std::size_t cols, std::vector<Entry> entries) {
  if (entries.size() != rows * cols) throw LengthMismatch("entry count does not match shape");
  RepMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.phases_ = std::move(entries);
  return m;
}

RepMatrix RepMatrix::numeric(const ComplexMatrix& c) {
  RepMatrix m;
  m.rows_ = static_cast<std::size_t>(c.rows());
  m.cols_ = static_cast<std::size_t>(c.cols());
  m.exact_ = false;
  m.values_.resize(m.rows_ * m.cols_);
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) m.values_[i * m.cols_ + j] = c(i, j);
  return m;
}

RepMatrix RepMatrix::scalar(const Phase& p) { return exact(1, 1, {p}); }

RepMatrix RepMatrix::column(std::vector<Entry> entries) {
  std::size_t n = entries.size();
  return exact(n, 1, std::move(entries));
}

void RepMatrix::set(std::size_t i, std::size_t j, Entry e) {
  if (exact_) {
    phases_[i * cols_ + j] = e;
  } else {
    values_[i * cols_ + j] = e ? e->value() : Complex{};
  }
}

Complex RepMatrix::value(std::size_t i, std::size_t j) const {
  if (!exact_) return values_[i * cols_ + j];
  const Entry& e = phases_[i * cols_ + j];
  return e ? e->value() : Complex{};
}

ComplexMatrix RepMatrix::to_complex() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = value(i, j);
  return m;
}

void RepMatrix::make_numeric() {
  if (!exact_) return;
  values_.resize(rows_ * cols_);
  for (std::size_t k = 0; k < phases_.size(); ++k)
    values_[k] = phases_[k] ? phases_[k]->value() : Complex{};
  phases_.clear();
  exact_ = false;
}

bool RepMatrix::is_zero(double tol) const {
  if (exact_) {
    for (const auto& e : phases_)
      if (e) return false;
    return true;
  }
  for (const auto& v : values_)
    if (std::abs(v) > tol) return false;
  return true;
}

bool RepMatrix::is_monomial() const {
  if (!exact_) return false;
  std::vector<int> row_count(rows_, 0), col_count(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j)) {
        if (++row_count[i] > 1 || ++col_count[j] > 1) return false;
      }
  return true;
}

Complex RepMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += value(i, i);
  return t;
}

RepMatrix RepMatrix::operator*(const RepMatrix& o) const {
  if (cols_ != o.rows_) throw LengthMismatch("matrix shapes do not compose");
  if (exact_ && o.exact_) {
    RepMatrix r = zero(rows_, o.cols_);
    bool ok = true;
    for (std::size_t i = 0; i < rows_ && ok; ++i) {
      for (std::size_t k = 0; k < cols_ && ok; ++k) {
        const Entry& x = at(i, k);
        if (!x) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Entry& y = o.at(k, j);
          if (!y) continue;
          Entry& slot = r.phases_[i * o.cols_ + j];
          if (slot) {
            ok = false;
            break;
          }
          slot = *x * *y;
        }
      }
    }
    if (ok) return r;
  }
  return numeric(to_complex() * o.to_complex());
}

RepMatrix RepMatrix::scaled(const Phase& p) const {
  RepMatrix r = *this;
  if (exact_) {
    for (auto& e : r.phases_)
      if (e) e = *e * p;
  } else {
    for (auto& v : r.values_) v *= p.value();
  }
  return r;
}

RepMatrix RepMatrix::inverse() const {
  if (rows_ != cols_) throw LengthMismatch("inverse of a non-square matrix");
  if (is_monomial()) {
    RepMatrix r = zero(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j)) r.phases_[j * cols_ + i] = at(i, j)->inverse();
    // A monomial matrix with an empty row is singular.
    for (std::size_t i = 0; i < rows_; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < cols_; ++j) any = any || r.at(i, j).has_value();
      if (!any) throw ArithmeticOverflow("singular matrix");
    }
    return r;
  }
  Eigen::FullPivLU<ComplexMatrix> lu(to_complex());
  if (!lu.isInvertible()) throw ArithmeticOverflow("singular matrix");
  return numeric(lu.inverse());
}

RepMatrix RepMatrix::block(std::size_t bi, std::size_t bj, std::size_t d) const {
  RepMatrix r = exact_ ? zero(d, d) : numeric(ComplexMatrix::Zero(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (exact_)
        r.phases_[i * d + j] = at(bi * d + i, bj * d + j);
      else
        r.values_[i * d + j] = values_[(bi * d + i) * cols_ + bj * d + j];
    }
  return r;
}

void RepMatrix::set_block(std::size_t bi, std::size_t bj, const RepMatrix& b) {
  if (!b.exact_) make_numeric();
  const std::size_t d = b.rows_;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      const std::size_t k = (bi * d + i) * cols_ + bj * b.cols_ + j;
      if (exact_)
        phases_[k] = b.at(i, j);
      else
        values_[k] = b.value(i, j);
    }
}

bool RepMatrix::equals(const RepMatrix& o, double tol) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (exact_ && o.exact_) return phases_ == o.phases_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (std::abs(value(i, j) - o.value(i, j)) > tol) return false;
  return true;
}

bool RepMatrix::operator==(const RepMatrix& o) const {
  return exact_ && o.exact_ && equals(o);
}

RepMatrix direct_sum(const std::vector<RepMatrix>& blocks) {
  std::size_t n = 0;
  bool exact = true;
  for (const auto& b : blocks) {
    n += b.rows();
    exact = exact && b.is_exact();
  }
  if (exact) {
    RepMatrix r = RepMatrix::zero(n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.set(off + i, off + j, b.at(i, j));
      off += b.rows();
    }
    return r;
  }
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    m.block(off, off, b.rows(), b.cols()) = b.to_complex();
    off += b.rows();
  }
  return RepMatrix::numeric(m);
}

nlohmann::json to_json(const RepMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.is_exact()) {
        const auto& e = m.at(i, j);
        if (e)
          row.push_back({{"phase", e->to_string()}});
        else
          row.push_back(0);
      } else {
        const Complex v = m.value(i, j);
        row.push_back({{"re", v.real()}, {"im", v.imag()}});
      }
    }
    rows.push_back(row);
  }
  return rows;
}

RepMatrix rep_matrix_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
    const std::size_t rows = j.size(), cols = j.front().size();
    std::vector<RepMatrix::Entry> exact;
    ComplexMatrix values(rows, cols);
    bool is_exact = true;
    for (std::size_t r = 0; r < rows; ++r) {
      if (j[r].size() != cols) throw ParseError("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) {
        const auto& e = j[r][c];
        if (e.is_number()) {
          if (e.get<double>() != 0.0) throw ParseError("bare numbers other than 0 are not entries");
          exact.emplace_back(std::nullopt);
          values(r, c) = 0.0;
        } else if (e.contains("phase")) {
          const Phase p(Fraction::parse(e.at("phase").get<std::string>()));
          exact.emplace_back(p);
          values(r, c) = p.value();
        } else {
          is_exact = false;
          exact.emplace_back(std::nullopt);
          values(r, c) = Complex(e.at("re").get<double>(), e.at("im").get<double>());
        }
      }
    }
    return is_exact ? RepMatrix::exact(rows, cols, std::move(exact)) : RepMatrix::numeric(values);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("matrix JSON: ") + ex.what());
  }
}

}  // namespace vvmf
