#include "maser/fock.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace maser {

void TruncationConfig::validate() const {
  if (n_t < 2 || n_a < 2 || n_r < 2) {
    std::ostringstream msg;
    msg << "truncation levels must all be >= 2, got " << str();
    throw std::invalid_argument(msg.str());
  }
}

std::string TruncationConfig::str() const {
  std::ostringstream os;
  os << "(n_t=" << n_t << ", n_a=" << n_a << ", n_r=" << n_r << ")";
  return os.str();
}

int slot_dim(Slot slot, const TruncationConfig& cfg) {
  switch (slot) {
    case Slot::Transmon: return cfg.n_t;
    case Slot::Aux: return cfg.n_a;
    case Slot::Reservoir: return cfg.n_r;
  }
  throw std::logic_error("bad slot");
}

SparseMatrix annihilation(int n) {
  if (n < 2) throw std::invalid_argument("annihilation: dimension must be >= 2");
  SparseMatrix a(n, n);
  a.reserve(Eigen::VectorXi::Constant(n, 1));
  for (int k = 1; k < n; ++k) a.insert(k - 1, k) = std::sqrt(static_cast<double>(k));
  a.makeCompressed();
  return a;
}

SparseMatrix identity(int n) {
  SparseMatrix id(n, n);
  id.setIdentity();
  return id;
}

SparseMatrix number_operator(int n) {
  if (n < 2) throw std::invalid_argument("number_operator: dimension must be >= 2");
  SparseMatrix m(n, n);
  m.reserve(Eigen::VectorXi::Constant(n, 1));
  for (int k = 1; k < n; ++k) m.insert(k, k) = static_cast<double>(k);
  m.makeCompressed();
  return m;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(static_cast<size_t>(a.nonZeros()) * static_cast<size_t>(b.nonZeros()));
  for (int ka = 0; ka < a.outerSize(); ++ka) {
    for (SparseMatrix::InnerIterator ia(a, ka); ia; ++ia) {
      for (int kb = 0; kb < b.outerSize(); ++kb) {
        for (SparseMatrix::InnerIterator ib(b, kb); ib; ++ib) {
          trips.emplace_back(ia.row() * b.rows() + ib.row(),
                             ia.col() * b.cols() + ib.col(),
                             ia.value() * ib.value());
        }
      }
    }
  }
  out.setFromTriplets(trips.begin(), trips.end());
  out.makeCompressed();
  return out;
}

SparseMatrix embed(const SparseMatrix& op, Slot slot, const TruncationConfig& cfg) {
  cfg.validate();
  const int d = slot_dim(slot, cfg);
  if (op.rows() != d || op.cols() != d) {
    std::ostringstream msg;
    msg << "embed: operator is " << op.rows() << "x" << op.cols()
        << " but slot dimension is " << d << " for " << cfg.str();
    throw std::invalid_argument(msg.str());
  }
  switch (slot) {
    case Slot::Transmon:
      return kron(kron(op, identity(cfg.n_a)), identity(cfg.n_r));
    case Slot::Aux:
      return kron(kron(identity(cfg.n_t), op), identity(cfg.n_r));
    case Slot::Reservoir:
      return kron(kron(identity(cfg.n_t), identity(cfg.n_a)), op);
  }
  throw std::logic_error("bad slot");
}

SparseMatrix annihilation(Slot slot, const TruncationConfig& cfg) {
  return embed(annihilation(slot_dim(slot, cfg)), slot, cfg);
}

SparseMatrix number_operator(Slot slot, const TruncationConfig& cfg) {
  return embed(number_operator(slot_dim(slot, cfg)), slot, cfg);
}

Complex trace(const SparseMatrix& op) {
  Complex t = 0.0;
  for (int k = 0; k < op.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(op, k); it; ++it) {
      if (it.row() == it.col()) t += it.value();
    }
  }
  return t;
}

}  // namespace maser
