#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weilden/ffpoly.hpp"

namespace weilden {

/// Dense square matrix over F_ell, row-major.
class MatrixFF {
 public:
  MatrixFF() = default;
  MatrixFF(std::size_t n, std::uint64_t ell);
  MatrixFF(std::size_t n, std::uint64_t ell, std::vector<std::uint64_t> entries);

  static MatrixFF identity(std::size_t n, std::uint64_t ell);
  /// Rows given as signed integers, reduced mod ell.
  static MatrixFF from_rows(const std::vector<std::vector<long long>>& rows, std::uint64_t ell);
  static MatrixFF companion(const FFPoly& f);

  std::size_t size() const { return n_; }
  std::uint64_t modulus() const { return ell_; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::vector<std::uint64_t>& entries() const { return a_; }

  MatrixFF transpose() const;
  MatrixFF scaled(std::uint64_t s) const;
  friend MatrixFF operator*(const MatrixFF& a, const MatrixFF& b);
  friend MatrixFF operator+(const MatrixFF& a, const MatrixFF& b);
  friend MatrixFF operator-(const MatrixFF& a, const MatrixFF& b);
  friend bool operator==(const MatrixFF& a, const MatrixFF& b) = default;

  bool is_zero() const;
  std::size_t rank() const;
  std::uint64_t det() const;
  /// Throws InvalidArgument if singular.
  MatrixFF inverse() const;
  /// Monic characteristic polynomial det(T I - M).
  FFPoly charpoly() const;
  /// Minimal polynomial equals characteristic polynomial.
  bool is_cyclic() const;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::uint64_t ell_ = 2;
  std::vector<std::uint64_t> a_;
};

/// Basis of the right kernel {x : rows * x = 0} of an r x c matrix over F_ell,
/// in reduced echelon order.
std::vector<std::vector<std::uint64_t>> nullspace(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols,
                                                  std::uint64_t ell);

/// Rank of a list of vectors over F_ell.
std::size_t vector_rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t ell);

}  // namespace weilden
