#include "pqc/channel.hpp"

#include <string>

#include "pqc/error.hpp"
#include "pqc/su2.hpp"

namespace pqc {

namespace {

void requireState(const ComplexMatrix& rho, const SectorStructure& structure) {
  if (rho.rows() != structure.totalDim() || rho.cols() != structure.totalDim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "operator is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                    ", K(N) has dimension " + std::to_string(structure.totalDim()));
  }
  if (!isDensityOperator(rho, kDefaultTol)) {
    throw Error(ErrorCode::kNotDensityOperator, "input is not a density operator within 1e-10");
  }
}

void requireSectorIndex(int n) {
  if (n < 0) throw Error(ErrorCode::kSectorOutOfRange, "negative sector index");
}

// Sector blocks are diagonal in the sector decomposition, so dephasing is a
// mask on (row sector, column sector).
template <typename Keep>
ComplexMatrix maskBySector(const ComplexMatrix& rho, const SectorStructure& structure,
                           Keep keep) {
  requireState(rho, structure);
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t r = 0; r < rho.rows(); ++r) {
    const int row_sector = structure.sectorOf(r);
    for (std::size_t c = 0; c < rho.cols(); ++c)
      if (keep(row_sector, structure.sectorOf(c))) out(r, c) = rho(r, c);
  }
  return out;
}

}  // namespace

std::string encryptionName(const Encryption& enc) {
  if (const auto* e = std::get_if<WeightedEnsemble>(&enc)) return e->name();
  return "haar";
}

ComplexMatrix applyChannel(const WeightedEnsemble& e, const SectorStructure& structure,
                           const ComplexMatrix& rho) {
  requireState(rho, structure);
  ComplexMatrix out(rho.rows(), rho.cols());
  for (const auto& el : e.elements()) {
    const ComplexMatrix lift = blockLift(el.unitary, structure);
    out.addScaled(el.weight, lift * rho * dagger(lift));
  }
  return out;
}

ComplexMatrix applyChannel(const Encryption& enc, const SectorStructure& structure,
                           const ComplexMatrix& rho) {
  if (const auto* e = std::get_if<WeightedEnsemble>(&enc)) {
    return applyChannel(*e, structure, rho);
  }
  return haarChannelApply(rho, structure);
}

ComplexVector sectorMaxEntangled(int n) {
  requireSectorIndex(n);
  const auto dim = static_cast<std::size_t>(n) + 1;
  ComplexVector omega(dim * dim);
  for (std::size_t k = 0; k < dim; ++k) omega[k * dim + k] = 1.0;
  return omega;
}

ComplexMatrix choiBlock(const WeightedEnsemble& e, int m, int n) {
  requireSectorIndex(m);
  requireSectorIndex(n);
  const auto dim_m = static_cast<std::size_t>(m) + 1;
  const auto dim_n = static_cast<std::size_t>(n) + 1;
  const ComplexVector omega_m = sectorMaxEntangled(m);
  const ComplexVector omega_n = sectorMaxEntangled(n);
  const ComplexMatrix id_m = ComplexMatrix::identity(dim_m);
  const ComplexMatrix id_n = ComplexMatrix::identity(dim_n);

  ComplexMatrix block(dim_m * dim_m, dim_n * dim_n);
  for (const auto& el : e.elements()) {
    const ComplexVector left = kron(liftSymmetric(el.unitary, m).matrix, id_m) * omega_m;
    const ComplexVector right = kron(liftSymmetric(el.unitary, n).matrix, id_n) * omega_n;
    block.addScaled(el.weight, ComplexMatrix::outer(left, right));
  }
  return block;
}

ComplexMatrix choiBlock(const Encryption& enc, int m, int n) {
  if (const auto* e = std::get_if<WeightedEnsemble>(&enc)) return choiBlock(*e, m, n);
  requireSectorIndex(m);
  requireSectorIndex(n);
  const auto dim_m = static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(m + 1);
  const auto dim_n = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1);
  if (m != n) return ComplexMatrix(dim_m, dim_n);
  ComplexMatrix block = ComplexMatrix::identity(dim_n);
  block *= 1.0 / (n + 1);
  return block;
}

ChoiOperator::ChoiOperator(SectorStructure structure, std::map<BlockKey, ComplexMatrix> blocks)
    : structure_(std::move(structure)), blocks_(std::move(blocks)) {
  for (const auto& [key, block] : blocks_) {
    const auto [m, n] = key;
    if (m < 0 || n < 0 || m > structure_.maxPhotons() || n > structure_.maxPhotons()) {
      throw Error(ErrorCode::kSectorOutOfRange, "Choi block outside K(N)");
    }
    const auto rows = structure_.sectorDim(m) * structure_.sectorDim(m);
    const auto cols = structure_.sectorDim(n) * structure_.sectorDim(n);
    if (block.rows() != rows || block.cols() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "Choi block has the wrong shape");
    }
  }
}

ComplexMatrix ChoiOperator::block(int m, int n) const {
  if (auto it = blocks_.find({m, n}); it != blocks_.end()) return it->second;
  const auto rows = structure_.sectorDim(m) * structure_.sectorDim(m);
  const auto cols = structure_.sectorDim(n) * structure_.sectorDim(n);
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ChoiOperator::full() const {
  const auto dim = structure_.totalDim();
  ComplexMatrix out(dim * dim, dim * dim);
  for (const auto& [key, block] : blocks_) {
    const auto [m, n] = key;
    const auto off_m = structure_.offset(m);
    const auto off_n = structure_.offset(n);
    const auto dm = structure_.sectorDim(m);
    const auto dn = structure_.sectorDim(n);
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t b = 0; b < dm; ++b)
        for (std::size_t c = 0; c < dn; ++c)
          for (std::size_t d = 0; d < dn; ++d)
            out((off_m + a) * dim + off_m + b, (off_n + c) * dim + off_n + d) =
                block(a * dm + b, c * dn + d);
  }
  return out;
}

Complex ChoiOperator::trace() const {
  Complex t{};
  for (const auto& [key, block] : blocks_)
    if (key.first == key.second) t += pqc::trace(block);
  return t;
}

ComplexMatrix ChoiOperator::apply(const ComplexMatrix& rho) const {
  const auto dim = structure_.totalDim();
  if (rho.rows() != dim || rho.cols() != dim) {
    throw Error(ErrorCode::kDimensionMismatch, "operator does not live on K(N)");
  }
  ComplexMatrix out(dim, dim);
  for (const auto& [key, block] : blocks_) {
    const auto [m, n] = key;
    const auto off_m = structure_.offset(m);
    const auto off_n = structure_.offset(n);
    const auto dm = structure_.sectorDim(m);
    const auto dn = structure_.sectorDim(n);
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t c = 0; c < dn; ++c) {
        Complex acc{};
        for (std::size_t b = 0; b < dm; ++b)
          for (std::size_t d = 0; d < dn; ++d)
            acc += rho(off_m + b, off_n + d) * block(a * dm + b, c * dn + d);
        out(off_m + a, off_n + c) += acc;
      }
  }
  return out;
}

ChoiOperator fullChoi(const WeightedEnsemble& e, const SectorStructure& structure) {
  std::map<ChoiOperator::BlockKey, ComplexMatrix> blocks;
  for (int m = 0; m <= structure.maxPhotons(); ++m)
    for (int n = 0; n <= structure.maxPhotons(); ++n) blocks.emplace(std::pair{m, n}, choiBlock(e, m, n));
  return ChoiOperator(structure, std::move(blocks));
}

ChoiOperator fullChoi(const Encryption& enc, const SectorStructure& structure) {
  if (const auto* e = std::get_if<WeightedEnsemble>(&enc)) return fullChoi(*e, structure);
  return haarChoiOperator(structure);
}

ChoiOperator haarChoiOperator(const SectorStructure& structure) {
  std::map<ChoiOperator::BlockKey, ComplexMatrix> blocks;
  for (int n = 0; n <= structure.maxPhotons(); ++n)
    blocks.emplace(std::pair{n, n}, choiBlock(Encryption{HaarTwirl{}}, n, n));
  return ChoiOperator(structure, std::move(blocks));
}

ComplexMatrix parityDephase(const ComplexMatrix& rho, const SectorStructure& structure) {
  return maskBySector(rho, structure, [](int m, int n) { return (m - n) % 2 == 0; });
}

ComplexMatrix photonNumberDephase(const ComplexMatrix& rho, const SectorStructure& structure) {
  return maskBySector(rho, structure, [](int m, int n) { return m == n; });
}

ComplexMatrix dephase(Dephasing kind, const ComplexMatrix& rho,
                      const SectorStructure& structure) {
  switch (kind) {
    case Dephasing::kParity: return parityDephase(rho, structure);
    case Dephasing::kPhotonNumber: return photonNumberDephase(rho, structure);
    case Dephasing::kNone: break;
  }
  requireState(rho, structure);
  return rho;
}

}  // namespace pqc
