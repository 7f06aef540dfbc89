#pragma once

// Data-parallel inner loops of the oracle layer.
//
// Every kernel exists twice: `serial::` is the plain reference used by the
// tests, `omp::` is the OpenMP version the library calls. Both operate on
// monomials and assignments packed into 64-bit masks (bit i = x_{i+1}), so
// they only apply to domains of at most 64 variables; tables additionally
// need n ≤ oracle cap.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ptpa::kernels {

/// A clause as two variable masks.
struct packed_clause
{
  std::uint64_t positives = 0;
  std::uint64_t negatives = 0;
};

namespace serial {

/// In-place GF(2) Moebius butterfly over a table of 2^n entries.
void mobius_inplace( std::span<std::uint8_t> table, std::size_t n );

/// out[a] = parity of the monomials contained in assignment a.
void evaluate_anf( std::span<std::uint64_t const> monomials, std::size_t n, std::span<std::uint8_t> out );

/// out[a] = 1 iff every clause is satisfied by assignment a.
void evaluate_cnf( std::span<packed_clause const> clauses, std::size_t n, std::span<std::uint8_t> out );

/// GF(2) product of two monomial lists. The result is unsorted and free of
/// duplicates; returns false if the accumulator would exceed `cap`.
bool multiply( std::span<std::uint64_t const> a, std::span<std::uint64_t const> b, std::size_t cap,
               std::vector<std::uint64_t>& out );

} // namespace serial

namespace omp {

void mobius_inplace( std::span<std::uint8_t> table, std::size_t n );
void evaluate_anf( std::span<std::uint64_t const> monomials, std::size_t n, std::span<std::uint8_t> out );
void evaluate_cnf( std::span<packed_clause const> clauses, std::size_t n, std::span<std::uint8_t> out );
bool multiply( std::span<std::uint64_t const> a, std::span<std::uint64_t const> b, std::size_t cap,
               std::vector<std::uint64_t>& out );

} // namespace omp

} // namespace ptpa::kernels
