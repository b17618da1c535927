#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "uc/bipoly.hpp"
#include "uc/field.hpp"

namespace uc {

// Dense row-major matrix of Scalars sharing one FieldSpec.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const FieldSpec& spec);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& spec() const { return spec_; }
  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return e_; }
  void set(std::size_t i, std::size_t j, const Scalar& v);
  Mat transpose() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  FieldSpec spec_;
  std::vector<Scalar> e_;
};

std::size_t rank(const Mat& m);
// Right kernel in reduced echelon form: each vector's first nonzero entry is 1.
std::vector<std::vector<Scalar>> kernel_basis(const Mat& m);

namespace la {

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;
  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> a;
  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c, std::uint64_t prime) : rows(r), cols(c), p(prime), a(r * c) {}
  std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Scale each row of a rational matrix to a primitive integer row (rank preserving).
IntMatrix clear_denominators(const std::vector<mpq_class>& entries, std::size_t rows, std::size_t cols);
ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t p);

// Fraction-free elimination over Z.
std::size_t rank_bareiss(IntMatrix m);
// Exact rank over Q: Bareiss for small shapes, otherwise a multimodular
// computation whose prime set is certified by a Hadamard bound.
std::size_t rank_integer(const IntMatrix& m);
std::size_t rank_multimodular(const IntMatrix& m);

// Rank by Gaussian elimination modulo a prime below 2^63.
std::size_t rank_mod(ModMatrix m);
// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_mod(ModMatrix& m);
std::vector<std::vector<std::uint64_t>> kernel_mod(ModMatrix m);

// Exact right kernel over Q in reduced echelon form.
std::vector<std::vector<mpq_class>> kernel_rational(const IntMatrix& m);

// Fraction-free elimination over K[s,t].
std::size_t rank_bipoly(std::vector<BiPoly> entries, std::size_t rows, std::size_t cols);

// Primes used by the modular engines: descending from 2^50, deterministic.
std::uint64_t large_prime(std::size_t index);

bool rational_reconstruct(const mpz_class& a, const mpz_class& m, mpq_class& out);

}  // namespace la
}  // namespace uc
