#pragma once

#include <cstddef>
#include <random>

#include <ptpa/cnf.hpp>

namespace ptpa {

/// m clauses over x_1..x_n, each with a width drawn uniformly from
/// [min_width, max_width] (clamped to n), distinct variables and random
/// signs. Same generator state, same formula.
cnf_formula random_cnf( std::size_t n, std::size_t m, std::size_t min_width, std::size_t max_width,
                        std::mt19937_64& rng );

} // namespace ptpa
