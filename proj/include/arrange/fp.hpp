#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrange/errors.hpp"

namespace arrange {

// Thrown by operations that need a field but were handed Z/d with d not prime.
class CompositeModulusError : public std::domain_error {
 public:
  explicit CompositeModulusError(long long modulus)
      : std::domain_error("modulus " + std::to_string(modulus) + " is not prime"),
        modulus(modulus) {}
  long long modulus;
};

bool is_prime(long long m);

// A coefficient vector over Z/d.  Entries are canonical residues in [0, d).
using FpVector = std::vector<int>;

// Dense matrix over Z/d, row-major, entries stored as canonical residues.
// The type itself tolerates composite d; the elimination-based operations
// below require d prime and throw CompositeModulusError otherwise.
struct FpMatrix {
  int modulus = 2;
  int rows = 0;
  int cols = 0;
  std::vector<int> a;

  int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  int at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static FpMatrix zero(int modulus, int rows, int cols);
  static FpMatrix identity(int modulus, int n);
  static FpMatrix from_rows(int modulus, const std::vector<FpVector>& rows);

  std::vector<FpVector> row_vectors() const;
  bool operator==(const FpMatrix&) const = default;
};

// Rank over Z/p (p prime), computed by Gaussian elimination with
// first-nonzero pivoting in column order.
int rank(const FpMatrix& m);

// Basis of the left kernel { x : x * m = 0 } as rows of a matrix over the
// same modulus.  The basis is the canonical reduced-echelon one: each basis
// vector has a 1 in "its" free coordinate and zeros in the other free
// coordinates, listed in increasing free-coordinate order.
// rank(m) + result.rows == m.rows always holds.
FpMatrix kernel_basis(const FpMatrix& m);

// x * m for a row vector x of length m.rows.
FpVector mul_left(const FpVector& x, const FpMatrix& m);

// Membership of v in the row span of basis (basis need not be echelonized).
bool in_span(const FpMatrix& basis, const FpVector& v);

struct CodeSummary {
  int modulus = 2;
  int length = 0;             // codeword length (number of columns)
  int dimension = 0;          // rank of the generating set
  int min_weight = 0;         // minimum Hamming weight over nonzero codewords
  FpVector min_weight_witness;  // lexicographically smallest codeword of that weight
  long long enumerated = 0;   // number of nonzero codewords inspected
};

// Exhaustive minimum-weight search over the span of basis.rows vectors:
// d^k - 1 nonzero combinations.  Throws SearchSpaceTooLarge(d^k, cap) when
// d^k exceeds cap.  Throws std::invalid_argument when the code is trivial
// (no nonzero codeword).
CodeSummary min_weight(const FpMatrix& basis, long long cap = 1LL << 22);

}  // namespace arrange
