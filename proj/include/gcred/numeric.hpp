#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcred {

using Rat = mpq_class;

struct pole_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct name_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat rat_of(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q" into an exact rational.
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Deterministic 64-bit generator (splitmix64); std distributions are not
// portable across standard libraries, so sampling goes through this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long int_in(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Small random rational with numerator in [-num_max, num_max] and
  // denominator in [1, den_max].
  Rat rational(long num_max = 9, long den_max = 4) {
    return rat_of(int_in(-num_max, num_max), int_in(1, den_max));
  }

  Rat nonzero_rational(long num_max = 9, long den_max = 4) {
    for (;;) {
      Rat r = rational(num_max, den_max);
      if (r != 0) return r;
    }
  }

  Rat positive_rational(long num_max = 9, long den_max = 4) {
    return rat_of(int_in(1, num_max), int_in(1, den_max));
  }

 private:
  std::uint64_t state_;
};

}  // namespace gcred
