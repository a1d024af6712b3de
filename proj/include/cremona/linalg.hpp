#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

// Arithmetic modulo a prime below 2^63.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);
  std::uint64_t modulus() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  // Image of r in F_p; nullopt when p divides the denominator.
  std::optional<std::uint64_t> reduce(const Rational& r) const;
  std::optional<std::uint64_t> reduce(const Integer& z) const;

 private:
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

// Deterministic pseudo-random prime in [2^61, 2^62) drawn from seed.
std::uint64_t random_prime_62(std::uint64_t seed);

using ModRow = std::vector<std::uint64_t>;

struct ModRankProfile {
  std::size_t rank = 0;
  std::vector<std::size_t> independent_rows;  // indices into the input, increasing
};

// Rank of a dense matrix over F_p and a maximal set of independent rows,
// found greedily in input order.
ModRankProfile mod_rank_profile(const std::vector<ModRow>& rows, std::size_t ncols, const PrimeField& f);

using QRow = std::vector<Rational>;

// Basis of the right kernel of an exact rational matrix, one vector per
// free column of its reduced row echelon form.
std::vector<QRow> exact_kernel(std::vector<QRow> rows, std::size_t ncols);

// Rank over Q by exact elimination.
std::size_t exact_rank(std::vector<QRow> rows, std::size_t ncols);

}  // namespace cremona
