#pragma once

#include <string>

#include "maser/types.hpp"

namespace maser {

// Hilbert-space truncation for the three-subsystem layout
// transmon (x) auxiliary cavity (x) reservoir cavity, in that fixed order.
struct TruncationConfig {
  int n_t = 3;
  int n_a = 3;
  int n_r = 30;

  int dim() const { return n_t * n_a * n_r; }
  void validate() const;  // throws std::invalid_argument if any level count < 2
  std::string str() const;
  bool operator==(const TruncationConfig&) const = default;
};

enum class Slot { Transmon = 0, Aux = 1, Reservoir = 2 };

int slot_dim(Slot slot, const TruncationConfig& cfg);

// n x n bosonic annihilation operator, <k-1|a|k> = sqrt(k). Requires n >= 2.
SparseMatrix annihilation(int n);

SparseMatrix identity(int n);

// a^dag a on a single subsystem
SparseMatrix number_operator(int n);

// Kronecker-embeds `op` into the full space with identities on the other two
// slots. `op` must match the slot dimension from `cfg`.
SparseMatrix embed(const SparseMatrix& op, Slot slot, const TruncationConfig& cfg);

// Convenience: embedded annihilation / number operators.
SparseMatrix annihilation(Slot slot, const TruncationConfig& cfg);
SparseMatrix number_operator(Slot slot, const TruncationConfig& cfg);

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

Complex trace(const SparseMatrix& op);

}  // namespace maser
