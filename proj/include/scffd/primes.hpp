#pragma once

#include <cstddef>
#include <optional>

#include "scffd/numeric.hpp"

namespace scffd {

/** Deterministic rational-prime test by trial division (desk scale). */
bool is_prime_int(const Integer& n);

/** p_0 = 2, p_1 = 3, p_2 = 5, ... */
Integer nth_prime(std::size_t index);

/** Inverse of nth_prime on |n|; nullopt when |n| is not prime. */
std::optional<std::size_t> prime_index(const Integer& n);

}  // namespace scffd
