// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#include "opalg/gns.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "opalg/spectra.hpp"

namespace opalg {

namespace {

// Gram matrix G_ij = rho(B_i* B_j) of the basis under the state pairing.
Matrix state_gram(const std::vector<AlgebraElement>& basis, const DensityFunctional& rho) {
  const Eigen::Index m = static_cast<Eigen::Index>(basis.size());
  Matrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) g(i, j) = rho(basis[i].adjoint() * basis[j]);
  return ((g + g.adjoint()) / 2.0).eval();
}

}  // namespace

std::vector<AlgebraElement> left_kernel(const std::vector<AlgebraElement>& algebra_basis,
                                        const DensityFunctional& rho,
                                        const ToleranceContext& ctx) {
  if (!is_state(rho, ctx)) throw NotAState("left kernel is defined for states");
  const Matrix g = state_gram(algebra_basis, rho);
  Eigen::SelfAdjointEigenSolver<Matrix> es(g);
  const double top = es.eigenvalues().cwiseAbs().maxCoeff();
  const double cutoff = ctx.rank_tol * std::max(top, 1.0);
  std::vector<AlgebraElement> kernel;
  const Eigen::Index m = g.rows();
  for (Eigen::Index k = 0; k < m; ++k) {
    if (es.eigenvalues()(k) > cutoff) continue;
    Matrix combo = Matrix::Zero(algebra_basis.front().dim(), algebra_basis.front().dim());
    for (Eigen::Index i = 0; i < m; ++i) combo += es.eigenvectors()(i, k) * algebra_basis[i].mat();
    kernel.emplace_back(combo);
  }
  return kernel;
}

GnsResult gns_construct(const SubalgebraBasis& algebra, const DensityFunctional& rho,
                        const ToleranceContext& ctx) {
  if (!is_state(rho, ctx)) throw NotAState("the GNS construction requires a state");
  const Eigen::Index m = static_cast<Eigen::Index>(algebra.size());
  const Eigen::Index n = algebra.ambient_dim;

  // Identity must lie in the span.
  const AlgebraElement id = AlgebraElement::unit(n);
  if (projection_residual(algebra, id) > std::sqrt(ctx.rank_tol))
    throw PreconditionViolation("identity is not in the span of the algebra basis");

  const Matrix g = state_gram(algebra.basis, rho);
  Eigen::SelfAdjointEigenSolver<Matrix> es(g);
  const double bottom = es.eigenvalues().minCoeff();
  if (bottom < -ctx.spec_tol)
    throw NotAState("Gram matrix has negative eigenvalue " + std::to_string(bottom) +
                    "; functional not positive");
  const double top = es.eigenvalues().cwiseAbs().maxCoeff();
  const double cutoff = ctx.rank_tol * std::max(top, 1.0);

  // Whitening transform of the positive eigenspace: columns w_j with
  // w_j* G w_k = delta_jk, so the cosets C_j = sum_i w_ij B_i are an
  // orthonormal basis of the quotient.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < m; ++k)
    if (es.eigenvalues()(k) > cutoff) keep.push_back(k);
  const Eigen::Index h = static_cast<Eigen::Index>(keep.size());

  Matrix white(m, h);
  for (Eigen::Index c = 0; c < h; ++c)
    white.col(c) = es.eigenvectors().col(keep[c]) / std::sqrt(es.eigenvalues()(keep[c]));

  GnsResult out;
  out.hilbert_dim = h;
  out.quotient_basis.reserve(static_cast<std::size_t>(h));
  for (Eigen::Index c = 0; c < h; ++c) {
    Matrix combo = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < m; ++i) combo += white(i, c) * algebra.basis[i].mat();
    out.quotient_basis.emplace_back(combo);
  }

  // rep(A)_{jk} = <C_j, A C_k>_rho = trace((C_j D)* (A C_k)); D Hermitian.
  std::vector<Matrix> pairing(static_cast<std::size_t>(h));
  for (Eigen::Index j = 0; j < h; ++j)
    pairing[static_cast<std::size_t>(j)] = out.quotient_basis[j].mat() * rho.density();
  out.rep_basis.reserve(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    Matrix rep(h, h);
    for (Eigen::Index k = 0; k < h; ++k) {
      const Matrix image = algebra.basis[i].mat() * out.quotient_basis[k].mat();
      for (Eigen::Index j = 0; j < h; ++j)
        rep(j, k) = (pairing[static_cast<std::size_t>(j)].adjoint() * image).trace();
    }
    out.rep_basis.emplace_back(rep);
  }

  // Cyclic vector: quotient coordinates of the coset of I. Its norm is
  // rho(I) = 1 by construction; normalize to remove roundoff.
  const Vector id_coords = algebra.coords(id);
  out.cyclic = white.adjoint() * g * id_coords;
  out.cyclic /= out.cyclic.norm();
  return out;
}

AlgebraElement gns_rep(const GnsResult& result, const SubalgebraBasis& algebra,
                       const AlgebraElement& a) {
  const Vector c = algebra.coords(a);
  Matrix acc = Matrix::Zero(result.hilbert_dim, result.hilbert_dim);
  for (std::size_t i = 0; i < result.rep_basis.size(); ++i)
    acc += c(static_cast<Eigen::Index>(i)) * result.rep_basis[i].mat();
  return AlgebraElement(acc);
}

GnsResult defining_representation(const SubalgebraBasis& algebra, const Vector& cyclic_vec) {
  GnsResult out;
  out.hilbert_dim = algebra.ambient_dim;
  out.rep_basis = algebra.basis;
  out.cyclic = cyclic_vec / cyclic_vec.norm();
  out.quotient_basis = algebra.basis;
  return out;
}

CheckReport verify_gns(const GnsResult& result, const SubalgebraBasis& algebra,
                       const DensityFunctional& rho, const ToleranceContext& ctx) {
  CheckReport report;
  report.suite = "gns";
  const Eigen::Index m = static_cast<Eigen::Index>(algebra.size());
  const Eigen::Index h = result.hilbert_dim;

  // (i) state recovery rho(A) = <x, rep(A) x> on every basis element.
  double recovery = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Complex expect = rho(algebra.basis[i]);
    const Complex got = result.cyclic.dot(result.rep_basis[static_cast<std::size_t>(i)].mat() *
                                          result.cyclic);
    recovery = std::max(recovery, std::abs(expect - got));
  }
  report.add("state_recovery", "rho(A) = <x, pi(A) x>", recovery, 1e-10);

  // (ii) homomorphism and star preservation on basis pairs.
  double hom = 0.0;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      const AlgebraElement lhs = gns_rep(result, algebra, algebra.basis[i] * algebra.basis[j]);
      const AlgebraElement rhs =
          result.rep_basis[static_cast<std::size_t>(i)] * result.rep_basis[static_cast<std::size_t>(j)];
      hom = std::max(hom, (lhs.mat() - rhs.mat()).cwiseAbs().maxCoeff());
    }
  report.add("homomorphism", "pi(AB) = pi(A) pi(B)", hom, 1e-9);

  double star = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const AlgebraElement lhs = gns_rep(result, algebra, algebra.basis[i].adjoint());
    star = std::max(star, (lhs.mat() -
                           result.rep_basis[static_cast<std::size_t>(i)].mat().adjoint())
                              .cwiseAbs()
                              .maxCoeff());
  }
  report.add("star", "pi(A*) = pi(A)*", star, 1e-9);

  // (iii) cyclicity: the orbit of x spans the space.
  Matrix orbit(h, m);
  for (Eigen::Index i = 0; i < m; ++i)
    orbit.col(i) = result.rep_basis[static_cast<std::size_t>(i)].mat() * result.cyclic;
  Eigen::JacobiSVD<Matrix> svd(orbit);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > ctx.rank_tol * std::max(1.0, svd.singularValues()(0))) ++rank;
  report.add_flag("cyclic", "pi(A)x spans H (x is cyclic)", rank == h,
                  "orbit rank " + std::to_string(rank) + " of " + std::to_string(h));

  // (iv) contractivity ||pi(A)|| <= ||A||; equality when rho is faithful.
  double contraction_excess = 0.0;
  double isometry_defect = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double rep_norm = op_norm(result.rep_basis[static_cast<std::size_t>(i)]);
    const double alg_norm = op_norm(algebra.basis[i]);
    contraction_excess = std::max(contraction_excess, rep_norm - alg_norm);
    isometry_defect = std::max(isometry_defect, std::abs(rep_norm - alg_norm));
  }
  report.add("contractive", "||pi(A)|| <= ||A||", contraction_excess, 1e-9);

  // Trivial left kernel makes pi injective, hence isometric.
  if (h == m)
    report.add("faithful_isometry", "faithful rho => ||pi(A)|| = ||A||", isometry_defect, 1e-9);

  report.add_flag("unital", "pi(I) = I",
                  gns_rep(result, algebra, AlgebraElement::unit(algebra.ambient_dim))
                      .approx_equal(AlgebraElement::unit(h), 1e-9));
  return report;
}

Intertwiner equivalence_intertwiner(const GnsResult& rep1, const GnsResult& rep2,
                                    const SubalgebraBasis& algebra, const ToleranceContext& ctx) {
  const Eigen::Index m = static_cast<Eigen::Index>(algebra.size());
  if (rep1.hilbert_dim != rep2.hilbert_dim)
    throw DimensionMismatch(rep1.hilbert_dim, rep2.hilbert_dim);
  const Eigen::Index h = rep1.hilbert_dim;

  // Both representations must induce the same state on the algebra.
  double state_gap = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Complex e1 =
        rep1.cyclic.dot(rep1.rep_basis[static_cast<std::size_t>(i)].mat() * rep1.cyclic);
    const Complex e2 =
        rep2.cyclic.dot(rep2.rep_basis[static_cast<std::size_t>(i)].mat() * rep2.cyclic);
    state_gap = std::max(state_gap, std::abs(e1 - e2));
  }
  if (state_gap > 1e3 * ctx.eq_tol)
    throw PreconditionViolation("states differ: max expectation gap " + std::to_string(state_gap));

  // U maps the dense orbit of x1 onto the orbit of x2.
  Matrix orbit1(h, m), orbit2(h, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    orbit1.col(i) = rep1.rep_basis[static_cast<std::size_t>(i)].mat() * rep1.cyclic;
    orbit2.col(i) = rep2.rep_basis[static_cast<std::size_t>(i)].mat() * rep2.cyclic;
  }
  // Least squares U orbit1 = orbit2, then polar correction to a unitary.
  const Matrix u0 =
      orbit1.adjoint().bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(orbit2.adjoint());
  Eigen::BDCSVD<Matrix> polar(u0.adjoint(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix u = polar.matrixU() * polar.matrixV().adjoint();

  // The GNS uniqueness clause fixes U x1 = x2 exactly; anchor the residual
  // global phase accordingly.
  const Complex align = (u * rep1.cyclic).dot(rep2.cyclic);
  if (std::abs(align) > 0.1) {
    u *= align / std::abs(align);
  } else {
    // Degenerate anchor; fall back to making the largest entry of U x1 real
    // positive.
    const Vector ux = u * rep1.cyclic;
    Eigen::Index imax = 0;
    ux.cwiseAbs().maxCoeff(&imax);
    if (std::abs(ux(imax)) > 0) u *= std::conj(ux(imax)) / std::abs(ux(imax));
  }

  Intertwiner out;
  out.matrix = u;
  out.defect = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Matrix lhs = u * rep1.rep_basis[static_cast<std::size_t>(i)].mat();
    const Matrix rhs = rep2.rep_basis[static_cast<std::size_t>(i)].mat() * u;
    out.defect = std::max(out.defect, op_norm(AlgebraElement(lhs - rhs)));
  }
  return out;
}

bool is_irreducible(const GnsResult& result, const ToleranceContext& ctx) {
  const SubalgebraBasis comm = commutant_of(result.rep_basis, result.hilbert_dim, ctx);
  return comm.size() == 1;
}

DensityFunctional vector_state(const GnsResult& result, const Vector& y,
                               const SubalgebraBasis& algebra, const ToleranceContext& ctx) {
  if (std::abs(y.norm() - 1.0) > ctx.eq_tol)
    throw PreconditionViolation("vector state requires a unit vector, norm " +
                                std::to_string(y.norm()));
  // The functional l(B_i) = <y, rep(B_i) y> is represented inside the span
  // by D = sum_i conj(l_i) B_i*; for a star-closed basis D is Hermitian.
  const Eigen::Index n = algebra.ambient_dim;
  Matrix d = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < algebra.size(); ++i) {
    const Complex li = y.dot(result.rep_basis[i].mat() * y);
    d += std::conj(li) * algebra.basis[i].mat().adjoint();
  }
  return DensityFunctional(((d + d.adjoint()) / 2.0).eval(), ctx);
}

}  // namespace opalg
