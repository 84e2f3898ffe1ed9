#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "vvmf/phase.hpp"

namespace vvmf {

using ComplexMatrix = Eigen::MatrixXcd;

// Matrix whose entries are either exact (0 or a unit phase) or general complex
// numbers. Exact matrices stay exact under products as long as every output
// entry receives at most one nonzero term (true for phase-monomial factors);
// otherwise the product falls back to the complex backend.
class RepMatrix {
 public:
  using Entry = std::optional<Phase>;  // nullopt is an exact zero

  RepMatrix() = default;
  static RepMatrix identity(std::size_t n);
  static RepMatrix zero(std::size_t rows, std::size_t cols);
  static RepMatrix zero(std::size_t n) { return zero(n, n); }
  static RepMatrix exact(std::size_t rows, std::size_t cols, std::vector<Entry> entries);
  static RepMatrix numeric(const ComplexMatrix& m);
  static RepMatrix scalar(const Phase& p);
  // Column vector.
  static RepMatrix column(std::vector<Entry> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_exact() const { return exact_; }

  // Exact entry; only valid on exact matrices.
  const Entry& at(std::size_t i, std::size_t j) const { return phases_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Entry e);
  Complex value(std::size_t i, std::size_t j) const;
  ComplexMatrix to_complex() const;

  bool is_zero(double tol = 0.0) const;
  // At most one nonzero entry in each row and each column.
  bool is_monomial() const;
  Complex trace() const;

  RepMatrix operator*(const RepMatrix& o) const;
  RepMatrix scaled(const Phase& p) const;
  // Exact for exact monomial matrices, numeric LU otherwise.
  RepMatrix inverse() const;

  RepMatrix block(std::size_t i, std::size_t j, std::size_t d) const;
  void set_block(std::size_t i, std::size_t j, const RepMatrix& b);

  // Exact equality when both are exact, entrywise |x - y| <= tol otherwise.
  bool equals(const RepMatrix& o, double tol = 1e-12) const;
  bool operator==(const RepMatrix& o) const;

 private:
  void make_numeric();

  std::size_t rows_ = 0, cols_ = 0;
  bool exact_ = true;
  std::vector<Entry> phases_;
  std::vector<Complex> values_;
};

// Block-diagonal direct sum.
RepMatrix direct_sum(const std::vector<RepMatrix>& blocks);

// Dense array of rows; entries are 0, {"phase": "p/q"} or {"re": x, "im": y}.
nlohmann::json to_json(const RepMatrix& m);
RepMatrix rep_matrix_from_json(const nlohmann::json& j);

}  // namespace vvmf
