#ifndef TLWEYL_ERRORS_HPP
#define TLWEYL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tlweyl {

// Largest supported rank n (Coxeter system A_n on n+1 letters).  Exhaustive
// line-set sweeps need 2^n - 1 bits per set, so 12 keeps everything cheap.
inline constexpr int kMaxRank = 12;

// Malformed input: out-of-range letters, non-reduced words where a reduced
// word is required, empty input where nonempty is required, ...
struct InputError : std::invalid_argument {
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally valid input outside supported bounds (rank above kMaxRank or a
// command-specific cap).
struct CapacityError : std::length_error {
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// Valid input outside a mathematical domain, e.g. asking for the diagram
// basis element of a non-fully-commutative permutation.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

void check_rank(int n);  // throws InputError (n < 1) or CapacityError (n > cap)

}  // namespace tlweyl

#endif
