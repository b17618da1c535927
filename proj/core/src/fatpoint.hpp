#pragma once

#include <array>
#include <vector>

#include "uc/linalg.hpp"
#include "uc/poly.hpp"
#include "uc/schemes.hpp"

namespace uc::detail {

// Monomials x^a y^b z^c of degree t with a + b >= j, in graded-lex order.
std::vector<Monomial> fat_columns(int j, int t);

// Points of Z over Q scaled to primitive integer vectors.
std::vector<std::array<mpz_class, 3>> integer_coords(const PointConfig& z);
std::vector<std::array<std::uint64_t, 3>> residue_coords(const PointConfig& z);

// Coordinates of each point of Z after the change of variables moving P to [0:0:1].
std::vector<std::array<Scalar, 3>> moved_coords(const PointConfig& z, const ProjPoint& p);

la::IntMatrix eval_matrix_int(const std::vector<std::array<mpz_class, 3>>& pts, const std::vector<Monomial>& cols);
la::ModMatrix eval_matrix_mod(const std::vector<std::array<std::uint64_t, 3>>& pts,
                              const std::vector<Monomial>& cols, std::uint64_t p);
// Rank of the evaluation matrix of Z at the given monomials (any field).
std::size_t eval_rank(const std::vector<std::array<Scalar, 3>>& pts, const std::vector<Monomial>& cols,
                      const FieldSpec& spec);

}  // namespace uc::detail
