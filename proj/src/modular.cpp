#include "cremona/linalg.hpp"

#include <random>

namespace cremona {

using u128 = unsigned __int128;

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (std::uint64_t{1} << 63)) throw DomainError("modulus out of range");
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t s = a + b;
  return s >= p_ ? s - p_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p_);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero mod p");
  return pow(a, p_ - 2);
}

std::optional<std::uint64_t> PrimeField::reduce(const Integer& z) const {
  return static_cast<std::uint64_t>(mpz_fdiv_ui(z.get_mpz_t(), p_));
}

std::optional<std::uint64_t> PrimeField::reduce(const Rational& r) const {
  std::uint64_t d = mpz_fdiv_ui(r.get_den_mpz_t(), p_);
  if (d == 0) return std::nullopt;
  std::uint64_t n = mpz_fdiv_ui(r.get_num_mpz_t(), p_);
  return mul(n, inv(d));
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n); };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime_62(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  const std::uint64_t lo = std::uint64_t{1} << 61;
  for (;;) {
    std::uint64_t c = lo | (rng() & (lo - 1)) | 1;
    if (is_prime_u64(c)) return c;
  }
}

ModRankProfile mod_rank_profile(const std::vector<ModRow>& rows, std::size_t ncols, const PrimeField& f) {
  ModRankProfile out;
  // Echelon basis with monic pivots, indexed by pivot column.
  std::vector<ModRow> basis;
  std::vector<std::size_t> pivot_col;
  std::vector<long> col_owner(ncols, -1);
  ModRow work;
  for (std::size_t r = 0; r < rows.size() && basis.size() < ncols; ++r) {
    work = rows[r];
    std::size_t pc = ncols;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (work[c] == 0) continue;
      long owner = col_owner[c];
      if (owner >= 0) {
        std::uint64_t factor = work[c];
        const ModRow& b = basis[static_cast<std::size_t>(owner)];
        for (std::size_t k = c; k < ncols; ++k) {
          if (b[k]) work[k] = f.sub(work[k], f.mul(factor, b[k]));
        }
      } else {
        pc = c;
        break;
      }
    }
    if (pc == ncols) continue;
    std::uint64_t iv = f.inv(work[pc]);
    for (std::size_t k = pc; k < ncols; ++k) work[k] = f.mul(work[k], iv);
    // The remaining entries right of pc may still hit owned columns; that is
    // fine for rank purposes because the pivot column is new.
    col_owner[pc] = static_cast<long>(basis.size());
    basis.push_back(work);
    pivot_col.push_back(pc);
    out.independent_rows.push_back(r);
  }
  out.rank = basis.size();
  return out;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns in row order.
std::vector<std::size_t> rref(std::vector<QRow>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < m.size(); ++c) {
    std::size_t best = m.size();
    std::size_t best_size = 0;
    for (std::size_t r = row; r < m.size(); ++r) {
      if (is_zero(m[r][c])) continue;
      std::size_t sz = mpz_sizeinbase(m[r][c].get_num_mpz_t(), 2) + mpz_sizeinbase(m[r][c].get_den_mpz_t(), 2);
      if (best == m.size() || sz < best_size) {
        best = r;
        best_size = sz;
      }
    }
    if (best == m.size()) continue;
    std::swap(m[row], m[best]);
    Rational iv = 1 / m[row][c];
    for (std::size_t k = c; k < ncols; ++k) m[row][k] *= iv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][c])) continue;
      Rational factor = m[r][c];
      for (std::size_t k = c; k < ncols; ++k) {
        if (!is_zero(m[row][k])) m[r][k] -= factor * m[row][k];
      }
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

std::vector<QRow> exact_kernel(std::vector<QRow> rows, std::size_t ncols) {
  auto pivots = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QRow> out;
  for (std::size_t fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    QRow v(ncols, Rational(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][fc];
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t exact_rank(std::vector<QRow> rows, std::size_t ncols) { return rref(rows, ncols).size(); }

}  // namespace cremona
