#pragma once

#include "metlie/integer.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace metlie {

/// Dense row-major matrix over ℤ_m with entries in [0, m).
struct ModMatrix
{
	std::uint64_t m = 2;
	std::size_t rows = 0;
	std::size_t cols = 0;
	std::vector<std::uint64_t> data;

	ModMatrix() = default;
	ModMatrix(std::uint64_t modulus, std::size_t r, std::size_t c)
	    : m(modulus), rows(r), cols(c), data(r * c, 0)
	{}

	std::uint64_t &at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
	std::uint64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// The additive subgroup of ℤ_m^N spanned by the rows of a matrix.
///
/// The generator matrix is diagonalized by unimodular row and column
/// operations (Bézout steps on representatives), P·G·Q = diag(d_1, ...).
/// The column transform Q is kept so membership reduces to divisibility
/// checks on v·Q.
class ModSubgroup
{
  public:
	explicit ModSubgroup(ModMatrix generators);

	std::uint64_t modulus() const { return m_; }
	std::size_t ambient_dimension() const { return n_; }

	/// Number of elements of the subgroup.
	Integer order() const;
	/// log_m of the index of the subgroup when m is prime; exposed mainly for tests.
	std::span<std::uint64_t const> invariant_divisors() const { return diag_; }

	bool contains(std::span<std::uint64_t const> v) const;
	bool is_everything() const;

  private:
	std::uint64_t m_;
	std::size_t n_;
	std::vector<std::uint64_t> diag_; // gcd(d_i, m) for the first rank() columns
	std::vector<std::uint64_t> q_;    // n_ x n_ column transform, row-major
};

/// Size of the image and kernel of the ℤ_m-linear map x -> x·A
/// (A has `rows` inputs and `cols` outputs).
struct ModMapOrders
{
	Integer image;
	Integer kernel;
};

ModMapOrders map_orders(ModMatrix const &a);

} // namespace metlie
