#include "seedpdc/fock_oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <span>
#include <cmath>
#include <deque>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "seedpdc/errors.hpp"
#include "seedpdc/simd/kernels.hpp"

namespace seedpdc::oracle {
namespace {

using Triplet = Eigen::Triplet<cplx>;

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Groups indices 0..n-1 into the connected components of the sparsity graph
// of `m`, each component sorted ascending and components ordered by their
// smallest index.
std::vector<std::vector<int>> connected_components(const SpMatrix& m) {
  const int n = static_cast<int>(m.rows());
  DisjointSets sets(n);
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMatrix::InnerIterator it(m, k); it; ++it)
      if (it.value() != cplx(0.0)) sets.unite(static_cast<int>(it.row()), static_cast<int>(it.col()));
  std::vector<int> slot(n, -1);
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < n; ++i) {
    const int root = sets.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[root]].push_back(i);
  }
  return comps;
}

Eigen::MatrixXcd dense_block(const SpMatrix& m, const std::vector<int>& index) {
  const int s = static_cast<int>(index.size());
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(s, s);
  std::vector<int> local(m.rows(), -1);
  for (int i = 0; i < s; ++i) local[index[i]] = i;
  for (int c : index)
    for (SpMatrix::InnerIterator it(m, c); it; ++it) {
      const int r = local[it.row()];
      if (r >= 0) b(r, local[c]) = it.value();
    }
  return b;
}

SpMatrix kron(const SpMatrix& x, const SpMatrix& y) {
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(x.nonZeros() * y.nonZeros()));
  for (int kx = 0; kx < x.outerSize(); ++kx)
    for (SpMatrix::InnerIterator ix(x, kx); ix; ++ix)
      for (int ky = 0; ky < y.outerSize(); ++ky)
        for (SpMatrix::InnerIterator iy(y, ky); iy; ++iy)
          t.emplace_back(ix.row() * y.rows() + iy.row(), ix.col() * y.cols() + iy.col(),
                         ix.value() * iy.value());
  SpMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

SpMatrix identity(int dim) {
  SpMatrix id(dim, dim);
  id.setIdentity();
  return id;
}

// Builds a sparse vector from (index, value) pairs with distinct indices.
SpVector from_pairs(int size, std::vector<std::pair<int, cplx>>& entries) {
  auto by_index = [](const auto& l, const auto& r) { return l.first < r.first; };
  if (!std::is_sorted(entries.begin(), entries.end(), by_index))
    std::sort(entries.begin(), entries.end(), by_index);
  SpVector v(size);
  v.reserve(static_cast<Eigen::Index>(entries.size()));
  for (const auto& [i, x] : entries)
    if (x != cplx(0.0)) v.insertBack(i) = x;
  return v;
}

SpVector to_sparse(const Eigen::VectorXcd& d) {
  std::vector<std::pair<int, cplx>> e;
  for (int i = 0; i < d.size(); ++i)
    if (d(i) != cplx(0.0)) e.emplace_back(i, d(i));
  return from_pairs(static_cast<int>(d.size()), e);
}

// m * v for column-major m, touching only the columns v selects.
SpVector multiply(const SpMatrix& m, const SpVector& v) {
  std::vector<std::pair<int, cplx>> terms;
  for (SpVector::InnerIterator iv(v); iv; ++iv)
    for (SpMatrix::InnerIterator im(m, iv.index()); im; ++im)
      terms.emplace_back(static_cast<int>(im.row()), im.value() * iv.value());
  std::sort(terms.begin(), terms.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<std::pair<int, cplx>> merged;
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(t);
  }
  return from_pairs(static_cast<int>(m.rows()), merged);
}

// <x|y>, conjugate-linear in x.
cplx braket(const SpVector& x, const SpVector& y) {
  cplx acc{};
  SpVector::InnerIterator ix(x), iy(y);
  while (ix && iy) {
    if (ix.index() < iy.index()) {
      ++ix;
    } else if (iy.index() < ix.index()) {
      ++iy;
    } else {
      acc += std::conj(ix.value()) * iy.value();
      ++ix;
      ++iy;
    }
  }
  return acc;
}

struct WeightedVector {
  double weight;
  SpVector psi;
};

// Spectral decomposition of a single-mode density matrix. Diagonal input
// stays in the Fock basis exactly.
std::vector<WeightedVector> decompose(const Eigen::MatrixXcd& rho) {
  const int d = static_cast<int>(rho.rows());
  std::vector<WeightedVector> out;
  const Eigen::MatrixXcd off = rho - Eigen::MatrixXcd(rho.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() == 0.0) {
    for (int n = 0; n < d; ++n) {
      const double p = rho(n, n).real();
      if (p <= 0.0) continue;
      SpVector v(d);
      v.insert(n) = 1.0;
      out.push_back({p, std::move(v)});
    }
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  if (es.info() != Eigen::Success) throw NumericalError("density matrix decomposition failed");
  for (int k = d - 1; k >= 0; --k) {
    const double p = es.eigenvalues()(k);
    if (p <= 1e-14) continue;
    out.push_back({p, to_sparse(es.eigenvectors().col(k))});
  }
  return out;
}

Eigen::VectorXcd vacuum(int dim) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(0) = 1.0;
  return v;
}

cplx kappa_for(const PdcParams& pdc) {
  return std::polar(std::asinh(std::sqrt(pdc.n_gain)), std::numbers::pi / 2.0 - pdc.phi);
}

cplx alpha_for(double m, double gamma) {
  return std::polar(std::sqrt(m), std::numbers::pi / 2.0 - gamma);
}

cplx xi_for(double ns, double zeta) {
  return std::polar(0.5 * std::asinh(std::sqrt(ns)), -zeta - std::numbers::pi / 2.0);
}

void check_tail(double tail, const OracleConfig& oc, const char* what) {
  if (tail > oc.tail_bound)
    throw TruncationInadequate(std::string(what) + ": top-two-level population " +
                                   std::to_string(tail) + " exceeds bound " +
                                   std::to_string(oc.tail_bound) + " at dim " +
                                   std::to_string(oc.dim),
                               tail);
}

}  // namespace

void OracleConfig::validate() const {
  if (dim < 4) throw ConfigError("oracle dim must be >= 4");
  if (!(tail_bound > 0.0) || !(exp_tol > 0.0)) throw ConfigError("oracle bounds must be > 0");
  if (!std::isfinite(coherent_phase_offset)) throw ConfigError("phase offset must be finite");
}

ModeOperators build_mode_operators(int dim) {
  if (dim < 2) throw ConfigError("mode dimension must be >= 2");
  std::vector<Triplet> t;
  for (int n = 1; n < dim; ++n) t.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
  ModeOperators ops;
  ops.a.resize(dim, dim);
  ops.a.setFromTriplets(t.begin(), t.end());
  ops.adag = ops.a.adjoint();
  ops.n = ops.adag * ops.a;
  return ops;
}

TwoModeOperators build_two_mode_operators(int dim) {
  const ModeOperators m = build_mode_operators(dim);
  const SpMatrix id = identity(dim);
  TwoModeOperators ops;
  ops.dim = dim;
  ops.a_a = kron(m.a, id);
  ops.a_b = kron(id, m.a);
  ops.n_a = kron(m.n, id);
  ops.n_b = kron(id, m.n);
  return ops;
}

BlockUnitary BlockUnitary::exp_i(const SpMatrix& h) {
  if (h.rows() != h.cols()) throw NumericalError("generator must be square");
  const SpMatrix herm_residual = h - SpMatrix(h.adjoint());
  for (int k = 0; k < herm_residual.outerSize(); ++k)
    for (SpMatrix::InnerIterator it(herm_residual, k); it; ++it)
      if (std::abs(it.value()) > 1e-12) throw NumericalError("generator is not Hermitian");

  BlockUnitary u;
  u.size_ = static_cast<int>(h.rows());
  u.block_of_.assign(u.size_, -1);
  u.slot_of_.assign(u.size_, -1);
  for (std::vector<int>& index : connected_components(h)) {
    Block block;
    const Eigen::MatrixXcd hb = dense_block(h, index);
    if (index.size() == 1) {
      block.u = Eigen::MatrixXcd::Constant(1, 1, std::exp(cplx(0.0, hb(0, 0).real())));
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hb);
      if (es.info() != Eigen::Success) throw NumericalError("generator eigensolve failed");
      const Eigen::VectorXcd phases =
          es.eigenvalues().unaryExpr([](double l) { return std::exp(cplx(0.0, l)); });
      block.u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    }
    const int b = static_cast<int>(u.blocks_.size());
    for (int s = 0; s < static_cast<int>(index.size()); ++s) {
      u.block_of_[index[s]] = b;
      u.slot_of_[index[s]] = s;
    }
    const auto n = block.u.rows();
    u.residual_ = std::max(
        u.residual_,
        (block.u.adjoint() * block.u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
    block.index = std::move(index);
    u.blocks_.push_back(std::move(block));
  }
  return u;
}

SpVector BlockUnitary::apply(const SpVector& v) const {
  if (v.size() != size_) throw NumericalError("vector size does not match unitary");
  struct Hit {
    int block, slot;
    cplx value;
  };
  std::vector<Hit> hits;
  hits.reserve(static_cast<std::size_t>(v.nonZeros()));
  for (SpVector::InnerIterator it(v); it; ++it)
    hits.push_back({block_of_[it.index()], slot_of_[it.index()], it.value()});
  std::stable_sort(hits.begin(), hits.end(),
                   [](const Hit& l, const Hit& r) { return l.block < r.block; });
  // Each touched block contributes a combination of the columns it is hit in.
  std::vector<std::pair<int, cplx>> entries;
  for (std::size_t k = 0; k < hits.size();) {
    const Block& b = blocks_[hits[k].block];
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(b.u.rows());
    std::size_t end = k;
    for (; end < hits.size() && hits[end].block == hits[k].block; ++end)
      y += b.u.col(hits[end].slot) * hits[end].value;
    for (int s = 0; s < y.size(); ++s) entries.emplace_back(b.index[s], y(s));
    k = end;
  }
  return from_pairs(size_, entries);
}

Eigen::VectorXcd BlockUnitary::apply(const Eigen::VectorXcd& v) const {
  if (v.size() != size_) throw NumericalError("vector size does not match unitary");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(size_);
  for (const Block& b : blocks_) {
    Eigen::VectorXcd x(b.index.size());
    for (std::size_t s = 0; s < b.index.size(); ++s) x(s) = v(b.index[s]);
    const Eigen::VectorXcd y = b.u * x;
    for (std::size_t s = 0; s < b.index.size(); ++s) out(b.index[s]) = y(s);
  }
  return out;
}

Eigen::MatrixXcd BlockUnitary::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size_, size_);
  for (const Block& b : blocks_)
    for (std::size_t r = 0; r < b.index.size(); ++r)
      for (std::size_t c = 0; c < b.index.size(); ++c) m(b.index[r], b.index[c]) = b.u(r, c);
  return m;
}

GeneratorParams generator_params(const SeededPdcConfig& cfg, const OracleConfig& oc) {
  GeneratorParams g;
  g.family = cfg.family();
  g.kappa = kappa_for(cfg.pdc());
  auto fill = [&](const SeedSpec& seed, double& mu, cplx& alpha, cplx& xi, double offset) {
    if (const auto* t = std::get_if<Thermal>(&seed)) mu = t->mu;
    if (const auto* c = std::get_if<Coherent>(&seed)) alpha = alpha_for(c->m, c->gamma + offset);
    if (const auto* s = std::get_if<SqueezedVacuum>(&seed)) xi = xi_for(s->ns, s->zeta);
  };
  fill(cfg.seed_a(), g.mu_a, g.alpha_a, g.xi_a, oc.coherent_phase_offset);
  fill(cfg.seed_b(), g.mu_b, g.alpha_b, g.xi_b, 0.0);
  return g;
}

Eigen::VectorXcd displaced_vacuum(cplx alpha, int dim) {
  const ModeOperators m = build_mode_operators(dim);
  const SpMatrix h = alpha * m.a + std::conj(alpha) * m.adag;
  return BlockUnitary::exp_i(h).apply(vacuum(dim));
}

Eigen::VectorXcd squeezed_vacuum(cplx xi, int dim) {
  const ModeOperators m = build_mode_operators(dim);
  const SpMatrix h = xi * (m.a * m.a) + std::conj(xi) * (m.adag * m.adag);
  return BlockUnitary::exp_i(h).apply(vacuum(dim));
}

std::shared_ptr<const BlockUnitary> pdc_unitary(cplx kappa, int dim) {
  struct Entry {
    cplx kappa;
    int dim;
    std::shared_ptr<const BlockUnitary> u;
  };
  static std::mutex mutex;
  static std::deque<Entry> recent;
  constexpr std::size_t kKeep = 4;
  {
    std::lock_guard lock(mutex);
    for (const Entry& e : recent)
      if (e.kappa == kappa && e.dim == dim) return e.u;
  }
  const TwoModeOperators ops = build_two_mode_operators(dim);
  const SpMatrix h = kappa * (ops.a_a * ops.a_b) +
                     std::conj(kappa) * SpMatrix(ops.a_a.adjoint() * ops.a_b.adjoint());
  auto u = std::make_shared<const BlockUnitary>(BlockUnitary::exp_i(h));
  std::lock_guard lock(mutex);
  recent.push_front({kappa, dim, u});
  if (recent.size() > kKeep) recent.pop_back();
  return u;
}

double single_mode_tail(const Eigen::MatrixXcd& rho) {
  const auto d = rho.rows();
  return rho(d - 1, d - 1).real() + rho(d - 2, d - 2).real();
}

Eigen::MatrixXcd build_seed_state(const SeedSpec& seed, const OracleConfig& oc) {
  oc.validate();
  const int d = oc.dim;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  if (const auto* t = std::get_if<Thermal>(&seed)) {
    double total = 0.0;
    for (int n = 0; n < d; ++n) {
      const double p = std::pow(t->mu, n) / std::pow(1.0 + t->mu, n + 1);
      rho(n, n) = p;
      total += p;
    }
    rho /= total;
  } else {
    Eigen::VectorXcd psi = vacuum(d);
    if (const auto* c = std::get_if<Coherent>(&seed)) psi = displaced_vacuum(alpha_for(c->m, c->gamma), d);
    if (const auto* s = std::get_if<SqueezedVacuum>(&seed)) psi = squeezed_vacuum(xi_for(s->ns, s->zeta), d);
    rho = psi * psi.adjoint();
  }
  check_tail(single_mode_tail(rho), oc, "seed state");
  return rho;
}

FockStateTwoMode::FockStateTwoMode(int dim, std::vector<Component> components)
    : dim_(dim), components_(std::move(components)) {
  for (const Component& c : components_)
    if (c.psi.size() != static_cast<Eigen::Index>(dim_) * dim_)
      throw NumericalError("component size does not match dim^2");
}

FockStateTwoMode FockStateTwoMode::product(const Eigen::MatrixXcd& rho_a,
                                           const Eigen::MatrixXcd& rho_b) {
  const int d = static_cast<int>(rho_a.rows());
  if (rho_b.rows() != d) throw NumericalError("mode dimensions differ");
  const auto parts_a = decompose(rho_a);
  const auto parts_b = decompose(rho_b);
  std::vector<Component> comps;
  comps.reserve(parts_a.size() * parts_b.size());
  for (const auto& pa : parts_a) {
    for (const auto& pb : parts_b) {
      const double w = pa.weight * pb.weight;
      if (w == 0.0) continue;
      SpVector v(static_cast<Eigen::Index>(d) * d);
      v.reserve(pa.psi.nonZeros() * pb.psi.nonZeros());
      for (SpVector::InnerIterator ia(pa.psi); ia; ++ia)
        for (SpVector::InnerIterator ib(pb.psi); ib; ++ib)
          v.insertBack(ia.index() * d + ib.index()) = ia.value() * ib.value();
      comps.push_back({w, std::move(v)});
    }
  }
  return FockStateTwoMode(d, std::move(comps));
}

double FockStateTwoMode::trace() const {
  double t = 0.0;
  for (const Component& c : components_) t += c.weight * c.psi.squaredNorm();
  return t;
}

double FockStateTwoMode::tail_mass() const {
  double tail = 0.0;
  for (const Component& c : components_)
    for (SpVector::InnerIterator it(c.psi); it; ++it) {
      const int na = static_cast<int>(it.index()) / dim_;
      const int nb = static_cast<int>(it.index()) % dim_;
      if (na >= dim_ - 2 || nb >= dim_ - 2) tail += c.weight * std::norm(it.value());
    }
  return tail;
}

Eigen::VectorXd FockStateTwoMode::populations() const {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim_) * dim_);
  for (const Component& c : components_)
    for (SpVector::InnerIterator it(c.psi); it; ++it) p(it.index()) += c.weight * std::norm(it.value());
  return p;
}

SpMatrix FockStateTwoMode::density_matrix() const {
  std::vector<Triplet> t;
  for (const Component& c : components_)
    for (SpVector::InnerIterator ir(c.psi); ir; ++ir)
      for (SpVector::InnerIterator ic(c.psi); ic; ++ic)
        t.emplace_back(ir.index(), ic.index(), c.weight * ir.value() * std::conj(ic.value()));
  const auto n = static_cast<Eigen::Index>(dim_) * dim_;
  SpMatrix rho(n, n);
  rho.setFromTriplets(t.begin(), t.end());
  return rho;
}

FockStateTwoMode FockStateTwoMode::evolved(const BlockUnitary& u) const {
  std::vector<Component> out;
  out.reserve(components_.size());
  for (const Component& c : components_) out.push_back({c.weight, u.apply(c.psi)});
  FockStateTwoMode s(dim_, std::move(out));
  s.unitarity_residual_ = std::max(unitarity_residual_, u.unitarity_residual());
  return s;
}

FockStateTwoMode build_input_state(const SeededPdcConfig& cfg, const OracleConfig& oc) {
  oc.validate();
  SeedSpec seed_a = cfg.seed_a();
  if (auto* c = std::get_if<Coherent>(&seed_a)) c->gamma += oc.coherent_phase_offset;
  return FockStateTwoMode::product(build_seed_state(seed_a, oc), build_seed_state(cfg.seed_b(), oc));
}

FockStateTwoMode evolve_pdc(const FockStateTwoMode& rho_in, const PdcParams& pdc,
                            const OracleConfig& oc) {
  oc.validate();
  const auto u = pdc_unitary(kappa_for(pdc), rho_in.dim());
  const double residual = u->unitarity_residual();
  if (residual > oc.exp_tol)
    throw NumericalError("PDC unitary residual " + std::to_string(residual) + " exceeds exp_tol");
  FockStateTwoMode out = rho_in.evolved(*u);
  check_tail(out.tail_mass(), oc, "PDC output state");
  return out;
}

FockStateTwoMode simulate(const SeededPdcConfig& cfg, const OracleConfig& oc) {
  return evolve_pdc(build_input_state(cfg, oc), cfg.pdc(), oc);
}

MomentSet measure_moments(const FockStateTwoMode& state) {
  const TwoModeOperators ops = build_two_mode_operators(state.dim());
  const Eigen::VectorXd na = ops.n_a.diagonal().real();
  const Eigen::VectorXd nb = ops.n_b.diagonal().real();
  const Eigen::VectorXd p = state.populations();
  const simd::MomentSums s = simd::active().moment_sums(
      std::span<const double>(p.data(), p.size()), std::span<const double>(na.data(), na.size()),
      std::span<const double>(nb.data(), nb.size()));
  MomentSet m;
  m.mean_a = s.na;
  m.mean_b = s.nb;
  m.cross = s.nanb;
  m.fac2_a = s.na2 - s.na;
  m.fac2_b = s.nb2 - s.nb;
  const double d = s.na - s.nb;
  m.var_diff = (s.na2 + s.nb2 - 2.0 * s.nanb) - d * d;
  return m;
}

CovarianceMatrix4 measure_covariance(const FockStateTwoMode& state) {
  const TwoModeOperators ops = build_two_mode_operators(state.dim());
  const double r = 1.0 / std::sqrt(2.0);
  const cplx i(0.0, 1.0);
  const SpMatrix ad_a = ops.a_a.adjoint();
  const SpMatrix ad_b = ops.a_b.adjoint();
  const std::array<SpMatrix, 4> w = {
      SpMatrix(r * (ops.a_a + ad_a)),
      SpMatrix(-i * r * (ops.a_a - ad_a)),
      SpMatrix(r * (ops.a_b + ad_b)),
      SpMatrix(-i * r * (ops.a_b - ad_b)),
  };
  Eigen::Vector4d first = Eigen::Vector4d::Zero();
  Eigen::Matrix4d second = Eigen::Matrix4d::Zero();
  for (const auto& c : state.components()) {
    std::array<SpVector, 4> phi;
    for (int k = 0; k < 4; ++k) phi[k] = multiply(w[k], c.psi);
    for (int k = 0; k < 4; ++k) {
      first(k) += c.weight * braket(c.psi, phi[k]).real();
      for (int l = k; l < 4; ++l) second(k, l) += c.weight * braket(phi[k], phi[l]).real();
    }
  }
  Eigen::Matrix4d v = second.selfadjointView<Eigen::Upper>();
  v -= first * first.transpose();
  return CovarianceMatrix4(0.5 * (v + v.transpose()));
}

double pt_negativity(const FockStateTwoMode& state) {
  const int d = state.dim();
  const SpMatrix rho = state.density_matrix();
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(rho.nonZeros()));
  for (int k = 0; k < rho.outerSize(); ++k)
    for (SpMatrix::InnerIterator it(rho, k); it; ++it) {
      const int ma = static_cast<int>(it.row()) / d, mb = static_cast<int>(it.row()) % d;
      const int na = static_cast<int>(it.col()) / d, nb = static_cast<int>(it.col()) % d;
      t.emplace_back(ma * d + nb, na * d + mb, it.value());
    }
  SpMatrix pt(rho.rows(), rho.cols());
  pt.setFromTriplets(t.begin(), t.end());
  double lowest = std::numeric_limits<double>::infinity();
  for (const std::vector<int>& index : connected_components(pt)) {
    const Eigen::MatrixXcd block = dense_block(pt, index);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("partial transpose eigensolve failed");
    lowest = std::min(lowest, es.eigenvalues().minCoeff());
  }
  return lowest;
}

}  // namespace seedpdc::oracle
