// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#include "opalg/suites.hpp"

#include <cmath>
#include <string>

#include "opalg/calculus.hpp"
#include "opalg/element.hpp"
#include "opalg/function_algebra.hpp"
#include "opalg/gns.hpp"
#include "opalg/grid.hpp"
#include "opalg/poly_ccr.hpp"
#include "opalg/spectra.hpp"
#include "opalg/states.hpp"
#include "opalg/subalgebra.hpp"
#include "opalg/weyl.hpp"

namespace opalg {

namespace {

// Random invertible self-adjoint element with spectrum bounded away from 0.
AlgebraElement random_invertible_hermitian(Rng& rng, Eigen::Index n) {
  const AlgebraElement v = random_unitary(rng, n);
  Vector d(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mag = rng.uniform(0.5, 2.0);
    d(i) = (rng.uniform() < 0.5 ? -mag : mag);
  }
  return AlgebraElement(v.mat() * d.asDiagonal() * v.mat().adjoint());
}

// Random normal element: unitary conjugation of a complex diagonal.
AlgebraElement random_normal(Rng& rng, Eigen::Index n) {
  const AlgebraElement v = random_unitary(rng, n);
  Vector d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = rng.cgaussian();
  return AlgebraElement(v.mat() * d.asDiagonal() * v.mat().adjoint());
}

std::vector<Complex> conjugated(std::vector<Complex> v) {
  for (Complex& z : v) z = std::conj(z);
  return v;
}

std::vector<Complex> inverted(std::vector<Complex> v) {
  for (Complex& z : v) z = 1.0 / z;
  return v;
}

}  // namespace

CheckReport suite_spectra(const SuiteConfig& cfg) {
  CheckReport r;
  r.suite = "spectra";
  const ToleranceContext& ctx = cfg.ctx;
  Rng rng(cfg.seed);

  double cstar = 0.0, invol = 0.0, submult = 0.0, radius_excess = 0.0;
  bool nonempty = true;
  double conj_dist = 0.0, inv_dist = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(7));
    const AlgebraElement a = random_element(rng, n);
    const AlgebraElement b = random_element(rng, n);
    const double na = op_norm(a);
    cstar = std::max(cstar, std::abs(op_norm(a.adjoint() * a) - na * na) / (na * na));
    invol = std::max(invol, std::abs(op_norm(a.adjoint()) - na) / na);
    submult = std::max(submult, op_norm(a * b) - na * op_norm(b));
    const SpectrumResult s = spectrum(a, ctx);
    nonempty = nonempty && !s.eigenvalues.empty();
    radius_excess = std::max(radius_excess, s.radius - na);
    conj_dist = std::max(conj_dist, multiset_distance(spectrum(a.adjoint(), ctx).eigenvalues,
                                                      conjugated(s.eigenvalues)));
    if (condition_estimate(a) < 1e6)
      inv_dist = std::max(inv_dist, multiset_distance(spectrum(inverse(a, ctx), ctx).eigenvalues,
                                                      inverted(s.eigenvalues)));
  }
  r.add("cstar_identity", "||A* A|| = ||A||^2", cstar, 1e-10);
  r.add("involution_isometry", "||A*|| = ||A||", invol, 1e-12);
  r.add("submultiplicative", "||AB|| <= ||A|| ||B||", submult, 1e-10);
  r.add_flag("spectrum_nonempty", "spectr(A) is a non-empty closed subset of the closed disc",
             nonempty);
  r.add("radius_le_norm", "r(A) <= ||A||", radius_excess, 1e-9);
  r.add("conjugate_spectrum", "spectr(A*) = conj(spectr(A))", conj_dist, ctx.spec_tol);
  r.add("inverse_spectrum", "spectr(A^-1) = { 1/lambda }", inv_dist, ctx.spec_tol);

  double normal_gap = 0.0, sa_imag = 0.0, sa_member = 0.0, unit_norm = 0.0, unit_circle = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng.below(5));
    const AlgebraElement nrm = random_normal(rng, n);
    normal_gap = std::max(normal_gap, std::abs(spectrum(nrm, ctx).radius - op_norm(nrm)));

    const AlgebraElement h = random_hermitian(rng, n);
    const SpectrumResult hs = spectrum(h, ctx);
    double imag_max = 0.0, best = 1e300;
    const double hn = op_norm(h);
    for (const Complex& z : hs.eigenvalues) {
      imag_max = std::max(imag_max, std::abs(z.imag()));
      best = std::min({best, std::abs(z - Complex(hn, 0)), std::abs(z + Complex(hn, 0))});
    }
    sa_imag = std::max(sa_imag, imag_max);
    sa_member = std::max(sa_member, best);

    const AlgebraElement u = random_unitary(rng, n);
    unit_norm = std::max(unit_norm, std::abs(op_norm(u) - 1.0));
    for (const Complex& z : spectrum(u, ctx).eigenvalues)
      unit_circle = std::max(unit_circle, std::abs(std::abs(z) - 1.0));
  }
  r.add("normal_radius", "if A is normal then r(A) = ||A||", normal_gap, 1e-9);
  r.add("self_adjoint_real", "self-adjoint spectrum is real", sa_imag, ctx.spec_tol);
  r.add("self_adjoint_norm_attained", "spectr(A) contains at least one of +-||A||", sa_member,
        ctx.spec_tol);
  r.add("unitary_norm", "A unitary => ||A|| = 1", unit_norm, ctx.spec_tol);
  r.add("unitary_spectrum", "A unitary => |lambda| = 1", unit_circle, ctx.spec_tol);

  // Neumann series against the direct inverse at ||A|| = 1/2.
  double neumann_gap = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraElement a = random_element(rng, 5);
    a = a * Complex(0.5 / op_norm(a), 0.0);
    const AlgebraElement series = neumann_inverse(a, 2000, ctx);
    const AlgebraElement direct = inverse(AlgebraElement::unit(5) - a, ctx);
    neumann_gap = std::max(neumann_gap, (series - direct).max_abs_diff(AlgebraElement::zero(5)));
  }
  r.add("neumann_series", "B = sum A^k is the two-sided inverse of I - A", neumann_gap, 1e-8);

  // Continuity of the inverse along halving perturbations.
  bool continuity_ok = true;
  for (int trial = 0; trial < 5; ++trial) {
    const AlgebraElement a = random_invertible_hermitian(rng, 5);
    const AlgebraElement inv_a = inverse(a, ctx);
    const AlgebraElement e0 = random_element(rng, 5, 0.05);
    double prev = 1e300;
    bool monotone_tail = true;
    double last = 0.0;
    for (int k = 0; k < 12; ++k) {
      const AlgebraElement pert = e0 * Complex(std::pow(0.5, k), 0.0);
      last = op_norm(inverse(a + pert, ctx) - inv_a);
      if (k >= 3 && last > prev) monotone_tail = false;
      prev = last;
    }
    continuity_ok = continuity_ok && monotone_tail && last < 1e-3;
  }
  r.add_flag("inverse_continuity", "the operation inv is continuous", continuity_ok);

  // The repeated-squaring limit lands on the eigenvalue radius.
  double srl_gap = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraElement a = random_element(rng, 8);
    const double target = spectrum(a, ctx).radius;
    srl_gap = std::max(srl_gap, std::abs(spectral_radius_limit(a, 30) - target) / target);
  }
  r.add("spectral_radius_formula", "the sequence ||A^n||^{1/n} converges to r(A)", srl_gap, 1e-4);

  // Spectrum independence: the inverse of a self-adjoint invertible element
  // lies in the subalgebra it generates.
  double member_residual = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng.below(4));
    const AlgebraElement a = random_invertible_hermitian(rng, n);
    const SubalgebraBasis s = generated_subalgebra({a}, ctx);
    member_residual = std::max(member_residual, projection_residual(s, inverse(a, ctx)));
  }
  r.add("spectrum_independence", "spectr_A(B) = spectr_B(B): inverse stays in the subalgebra",
        member_residual, 1e-8);

  // Commutant structure: Schur's lemma and the two extreme cases.
  const SubalgebraBasis full = SubalgebraBasis::full_matrix_algebra(4);
  r.add_flag("commutant_full_algebra", "commutant of M_n is the scalars",
             commutant(full, ctx).size() == 1);
  const SubalgebraBasis scalars = generated_subalgebra({AlgebraElement::unit(4)}, ctx);
  r.add_flag("commutant_scalars", "everything commutes with I",
             commutant(scalars, ctx).size() == 16);
  const SubalgebraBasis diag = SubalgebraBasis::diagonal_algebra(3);
  r.add_flag("commutant_diagonal", "the diagonal algebra is its own commutant",
             commutant(diag, ctx).size() == 3);
  return r;
}

CheckReport suite_calculus(const SuiteConfig& cfg) {
  CheckReport r;
  r.suite = "calculus";
  const ToleranceContext& ctx = cfg.ctx;
  Rng rng(cfg.seed + 1);

  const ScalarFunction fexp = named_function("exp");
  const ScalarFunction fid = named_function("id");

  double identity_gap = 0.0, isometry = 0.0, star = 0.0, hom = 0.0, specmap = 0.0, comm = 0.0;
  double reconstruction = 0.0;
  for (int trial = 0; trial < 15; ++trial) {
    const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng.below(5));
    const AlgebraElement a = random_hermitian(rng, n);
    const SpectralDecomposition sd = eig_self_adjoint(a, ctx);
    reconstruction =
        std::max(reconstruction, (sd.reconstruct() - a).max_abs_diff(AlgebraElement::zero(n)) /
                                     std::max(1.0, op_norm(a)));

    identity_gap = std::max(identity_gap,
                            apply_function(a, fid, ctx).max_abs_diff(a) / std::max(1.0, op_norm(a)));

    const AlgebraElement fa = apply_function(a, fexp, ctx);
    double sup = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      sup = std::max(sup, std::abs(std::exp(Complex(sd.eigenvalues(i), 0.0))));
    isometry = std::max(isometry, std::abs(op_norm(fa) - sup) / sup);

    const ScalarFunction fconj{[](Complex z) { return std::conj(std::exp(z)); }, std::nullopt,
                               "conj_exp"};
    star = std::max(star, apply_function(a, fconj, ctx).max_abs_diff(fa.adjoint()));

    const ScalarFunction fsin{[](Complex z) { return std::sin(z); }, std::nullopt, "sin"};
    const ScalarFunction fprod{[](Complex z) { return std::exp(z) * std::sin(z); }, std::nullopt,
                               "exp_sin"};
    const AlgebraElement ga = apply_function(a, fsin, ctx);
    hom = std::max(hom, apply_function(a, fprod, ctx).max_abs_diff(fa * ga) /
                            std::max(1.0, op_norm(fa) * op_norm(ga)));

    std::vector<Complex> mapped;
    for (Eigen::Index i = 0; i < n; ++i)
      mapped.push_back(std::exp(Complex(sd.eigenvalues(i), 0.0)));
    specmap = std::max(specmap, multiset_distance(spectrum(fa, ctx).eigenvalues, mapped));

    // Anything commuting with A commutes with f(A).
    PolynomialCoeffs poly;
    poly.coeffs = {Complex(rng.gaussian(), 0), Complex(rng.gaussian(), 0),
                   Complex(rng.gaussian(), 0)};
    const AlgebraElement b = apply_polynomial(a, poly);
    comm = std::max(comm, commutator(b, fa).norm_fro() /
                              std::max(1.0, b.norm_fro() * fa.norm_fro()));
  }
  r.add("eig_reconstruction", "A = V diag(lambda) V*", reconstruction, 1e-10);
  r.add("calculus_identity", "phi(id) = A", identity_gap, 1e-12);
  r.add("calculus_isometry", "||f(A)|| = sup |f| on spectr(A)", isometry, 1e-10);
  r.add("calculus_star", "phi(conj f) = phi(f)*", star, 1e-9);
  r.add("calculus_homomorphism", "phi(fg) = phi(f) phi(g)", hom, 1e-9);
  r.add("spectral_mapping", "spectr(f(A)) = { f(t) : t in spectr(A) }", specmap, ctx.spec_tol);
  r.add("calculus_commutation", "BA = AB => B f(A) = f(A) B", comm, 1e-9);

  // Polynomial route: multiplicativity and the spectral mapping for p(A).
  double poly_mult = 0.0, poly_spec = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraElement a = random_element(rng, 6);
    PolynomialCoeffs p, q;
    for (int i = 0; i < 4; ++i) p.coeffs.push_back(rng.cgaussian());
    for (int i = 0; i < 3; ++i) q.coeffs.push_back(rng.cgaussian());
    PolynomialCoeffs pq;
    pq.coeffs.assign(6, Complex(0, 0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs.size(); ++j)
        pq.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
    const AlgebraElement lhs = apply_polynomial(a, p) * apply_polynomial(a, q);
    const AlgebraElement rhs = apply_polynomial(a, pq);
    poly_mult =
        std::max(poly_mult, (lhs - rhs).norm_fro() / std::max(1.0, rhs.norm_fro()));

    std::vector<Complex> mapped;
    for (const Complex& z : spectrum(a, ctx).eigenvalues) mapped.push_back(p.eval(z));
    poly_spec = std::max(
        poly_spec, multiset_distance(spectrum(apply_polynomial(a, p), ctx).eigenvalues, mapped));
  }
  r.add("polynomial_product", "p(A) q(A) = (pq)(A)", poly_mult, 1e-9);
  r.add("polynomial_spectral_mapping", "spectral calculus for polynomials", poly_spec, 1e-6);

  // Chebyshev route agrees with the eigendecomposition route.
  double cheb_poly = 0.0, cheb_exp = 0.0;
  bool cheb_decreasing = true;
  for (int trial = 0; trial < 5; ++trial) {
    AlgebraElement a = random_hermitian(rng, 6);
    a = a * Complex(1.0 / std::max(1.0, op_norm(a)), 0.0);

    const ScalarFunction fsq{[](Complex z) { return z * z; }, std::nullopt, "square"};
    PolynomialCoeffs sq;
    sq.coeffs = {0.0, 0.0, 1.0};
    cheb_poly = std::max(cheb_poly,
                         chebyshev_calculus(a, fsq, 2, ctx).max_abs_diff(apply_polynomial(a, sq)));

    cheb_exp = std::max(
        cheb_exp, chebyshev_calculus(a, fexp, 16, ctx).max_abs_diff(apply_function(a, fexp, ctx)));

    const ScalarFunction fabs = named_function("abs");
    const AlgebraElement exact = apply_function(a, fabs, ctx);
    double prev = 1e300;
    for (int deg : {4, 8, 16, 32}) {
      const double defect = op_norm(chebyshev_calculus(a, fabs, deg, ctx) - exact);
      if (defect > prev) cheb_decreasing = false;
      prev = defect;
    }
  }
  r.add("chebyshev_reproduces_polynomials", "polynomials are reproduced exactly", cheb_poly,
        1e-12);
  r.add("chebyshev_exp_degree16", "Weierstrass route matches the spectral route", cheb_exp,
        1e-10);
  r.add_flag("chebyshev_convergence", "interpolants converge as the degree doubles",
             cheb_decreasing);

  // Square roots: correctness, positivity, commutation, uniqueness scale.
  double sqrt_sq = 0.0, sqrt_comm = 0.0;
  bool sqrt_psd_ok = true;
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng.below(4));
    const AlgebraElement g = random_element(rng, n);
    const AlgebraElement a = g.adjoint() * g;
    const AlgebraElement h = sqrt_psd(a, ctx);
    sqrt_sq = std::max(sqrt_sq, (h * h - a).norm_fro() / std::max(1.0, a.norm_fro()));
    sqrt_psd_ok = sqrt_psd_ok && is_positive_element(h, ctx).positive();
    // H commutes with everything commuting with A; in particular with A.
    sqrt_comm = std::max(sqrt_comm, commutator(h, a).norm_fro() / std::max(1.0, a.norm_fro()));
  }
  r.add("sqrt_squares_back", "A = HH", sqrt_sq, 1e-9);
  r.add_flag("sqrt_positive", "H is the positive root", sqrt_psd_ok);
  r.add("sqrt_commutes", "H commutes with A", sqrt_comm, 1e-9);
  return r;
}

CheckReport suite_states(const SuiteConfig& cfg) {
  CheckReport r;
  r.suite = "states";
  const ToleranceContext& ctx = cfg.ctx;
  Rng rng(cfg.seed + 2);

  bool paths_agree = true;
  double order_unit_viol = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(5));
    const AlgebraElement a = random_hermitian(rng, n);
    const PositivityCheck pc = is_positive_element(a, ctx);
    paths_agree = paths_agree && pc.agree();
    // -||A|| I <= A <= ||A|| I.
    const AlgebraElement bound = AlgebraElement::unit(n) * Complex(op_norm(a), 0.0);
    if (!is_positive_element(bound + a, ctx).positive() ||
        !is_positive_element(bound - a, ctx).positive())
      order_unit_viol = 1.0;
  }
  r.add_flag("positivity_paths_agree",
             "positive spectrum iff ||A - aI|| <= a with a = ||A||", paths_agree);
  r.add("order_unit", "-||A|| I <= A <= ||A|| I", order_unit_viol, 0.5);

  double hermitian_gap = 0.0, norm_crit = 0.0, convex_viol = 0.0;
  bool norm_flags_ok = true;
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(4));
    const DensityFunctional rho = random_density(rng, n, ctx);
    const AlgebraElement a = random_element(rng, n);
    hermitian_gap =
        std::max(hermitian_gap, std::abs(rho(a.adjoint()) - std::conj(rho(a))));
    norm_crit = std::max(norm_crit, std::abs(functional_norm(rho) - rho(AlgebraElement::unit(n)).real()));

    // A signed (non-positive) functional breaks the norm criterion.
    Matrix signed_d = Matrix::Zero(n, n);
    signed_d(0, 0) = 1.5;
    signed_d(1, 1) = -0.5;
    const DensityFunctional signed_rho(signed_d, ctx);
    const double fn = functional_norm(signed_rho);
    const double at_unit = signed_rho(AlgebraElement::unit(n)).real();
    if (fn <= std::abs(at_unit) + ctx.eq_tol) norm_flags_ok = false;

    const DensityFunctional rho2 = random_density(rng, n, ctx);
    const double t = rng.uniform();
    const DensityFunctional mix(rho.density() * t + rho2.density() * (1.0 - t), ctx);
    if (!is_state(mix, ctx)) convex_viol = 1.0;
  }
  r.add("hermitian_functional", "rho(A*) = conj(rho(A))", hermitian_gap, 1e-12);
  r.add("norm_criterion", "rho positive iff bounded with ||rho|| = rho(I)", norm_crit, 1e-10);
  r.add_flag("norm_criterion_negative", "signed functionals exceed rho(I)", norm_flags_ok);
  r.add("state_convexity", "convex combinations of states are states", convex_viol, 0.5);

  double jordan_embed = 0.0, jordan_powers = 0.0, jordan_norm = 0.0, reality = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(4));
    const AlgebraElement a = random_hermitian(rng, n);
    const AlgebraElement b = random_hermitian(rng, n);
    const AlgebraElement viaformula = jordan_product(a, b);
    const AlgebraElement anticomm = (a * b + b * a) * Complex(0.5, 0.0);
    jordan_embed = std::max(jordan_embed, (viaformula - anticomm).norm_fro() /
                                              std::max(1.0, anticomm.norm_fro()));

    // A^n o A^m = A^{n+m} for n + m <= 6.
    std::vector<AlgebraElement> powers{AlgebraElement::unit(n), a};
    for (int k = 2; k <= 6; ++k) powers.push_back(powers.back() * a);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; i + j <= 6; ++j)
        jordan_powers = std::max(
            jordan_powers,
            (jordan_product(powers[static_cast<std::size_t>(i)],
                            powers[static_cast<std::size_t>(j)]) -
             powers[static_cast<std::size_t>(i + j)])
                    .norm_fro() /
                std::max(1.0, powers[static_cast<std::size_t>(i + j)].norm_fro()));

    // State-supremum norm: value is the spectral radius and ||A^2|| = ||A||^2.
    const StateSupNorm sn = state_sup_norm(a, 50, rng, ctx);
    const StateSupNorm sn2 = state_sup_norm(a * a, 50, rng, ctx);
    jordan_norm = std::max(jordan_norm, std::abs(sn2.value - sn.value * sn.value) /
                                            std::max(1.0, sn.value * sn.value));
    if (sn.mc_lower > sn.value + ctx.eq_tol) jordan_norm = 1.0;

    // Quantitative reality: ||A||^2, ||B||^2 <= ||A^2 + B^2||.
    const double sum_norm = op_norm(a * a + b * b);
    reality = std::max(reality, std::max(op_norm(a) * op_norm(a), op_norm(b) * op_norm(b)) -
                                    sum_norm);
  }
  r.add("jordan_embedding", "A o B = (AB + BA)/2", jordan_embed, 1e-12);
  r.add("jordan_powers", "A^n o A^m = A^{n+m}", jordan_powers, 1e-10);
  r.add("jordan_norm_lemma", "||A^2|| = ||A||^2 (state-sup norm)", jordan_norm, 1e-10);
  r.add("reality", "A^2 + B^2 = 0 implies A = B = 0", reality, 1e-9);

  // Dispersion: eigenprojector states are dispersion-free; purity = rank 1.
  double disp_free = 0.0;
  bool purity_ok = true;
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 3;
    const AlgebraElement a = random_hermitian(rng, n);
    const SpectralDecomposition sd = eig_self_adjoint(a, ctx);
    const Vector v = sd.eigenvectors.col(0);
    const DensityFunctional pure = DensityFunctional::vector_state(v, ctx);
    const PurityVariance pv = purity_and_variance(pure, a, ctx);
    disp_free = std::max(disp_free, std::abs(pv.variance));
    purity_ok = purity_ok && pv.is_pure;
    const PurityVariance mixed = purity_and_variance(DensityFunctional::tracial(n), a, ctx);
    purity_ok = purity_ok && !mixed.is_pure && mixed.variance >= -ctx.eq_tol;
  }
  r.add("dispersion_free_eigenstates", "(Delta f)^2 = omega(f^2) - omega(f)^2 vanishes",
        disp_free, 1e-9);
  r.add_flag("purity_rank_one", "pure states are the extreme points", purity_ok);

  // Cone checks on a commuting positive pair.
  {
    const AlgebraElement g = random_element(rng, 3);
    const AlgebraElement pos = g.adjoint() * g;
    const CheckReport cone = cone_checks(pos, pos * pos, ctx);
    r.add_flag("cone_laws", "the positive cone is closed under scaling, sums, commuting products",
               cone.all_pass());
  }

  // Finite Gelfand model: C(X) on five points with random elements.
  {
    FiniteFunctionAlgebra alg;
    alg.points = {"p0", "p1", "p2", "p3", "p4"};
    std::vector<FunctionElement> elements;
    for (int i = 0; i < 6; ++i) {
      Vector v(5);
      for (Eigen::Index j = 0; j < 5; ++j) v(j) = rng.cgaussian();
      elements.emplace_back(std::move(v));
    }
    const CheckReport gel = finite_gelfand(alg, elements, ctx);
    for (const Check& c : gel.checks) r.checks.push_back(c);
  }

  // Characters of commutative matrix algebras: diagonal and circulant.
  {
    const SubalgebraBasis diag = SubalgebraBasis::diagonal_algebra(3);
    const std::vector<Character> chars = characters_of_commutative(diag, ctx);
    bool diag_ok = chars.size() == 3;
    double mult_gap = 0.0;
    for (const Character& chi : chars)
      for (const AlgebraElement& b1 : diag.basis)
        for (const AlgebraElement& b2 : diag.basis)
          mult_gap = std::max(mult_gap,
                              std::abs(character_value(diag, chi, b1 * b2) -
                                       character_value(diag, chi, b1) *
                                           character_value(diag, chi, b2)));
    r.add_flag("characters_diagonal", "characters of the diagonal algebra are the coordinate "
                                      "evaluations",
               diag_ok);

    Matrix shift = Matrix::Zero(4, 4);
    for (int j = 0; j < 4; ++j) shift(j, (j + 1) % 4) = 1.0;
    const SubalgebraBasis circ = generated_subalgebra({AlgebraElement(shift)}, ctx);
    const std::vector<Character> cchars = characters_of_commutative(circ, ctx);
    bool circ_ok = circ.size() == 4 && cchars.size() == 4;
    for (const Character& chi : cchars)
      for (const AlgebraElement& b1 : circ.basis)
        for (const AlgebraElement& b2 : circ.basis)
          mult_gap = std::max(mult_gap,
                              std::abs(character_value(circ, chi, b1 * b2) -
                                       character_value(circ, chi, b1) *
                                           character_value(circ, chi, b2)));
    r.add_flag("characters_circulant", "the cyclic shift algebra is diagonalized by Fourier "
                                       "modes",
               circ_ok);
    r.add("characters_multiplicative", "chi(AB) = chi(A) chi(B)", mult_gap, 1e-10);
  }

  // Riesz-Markov weights: round trip and dispersion-free point evaluations.
  {
    FiniteFunctionAlgebra alg;
    alg.points = {"a", "b", "c", "d"};
    RealVector w(4);
    double total = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i) {
      w(i) = rng.uniform() + 0.05;
      total += w(i);
    }
    w /= total;
    const auto rho = [&](const FunctionElement& f) {
      Complex acc = 0.0;
      for (Eigen::Index i = 0; i < 4; ++i) acc += w(i) * f.values(i);
      return acc;
    };
    const RealVector recovered = riesz_markov_weights(rho, alg, ctx);
    double roundtrip = (recovered - w).cwiseAbs().maxCoeff();
    for (int t = 0; t < 5; ++t) {
      Vector v(4);
      for (Eigen::Index j = 0; j < 4; ++j) v(j) = rng.cgaussian();
      const FunctionElement f(v);
      Complex viaw = 0.0;
      for (Eigen::Index j = 0; j < 4; ++j) viaw += recovered(j) * f.values(j);
      roundtrip = std::max(roundtrip, std::abs(viaw - rho(f)));
    }
    r.add("riesz_markov_roundtrip", "omega(f) = int f d mu", roundtrip, 1e-12);

    const auto dirac = [](const FunctionElement& f) { return f.values(2); };
    const RealVector dw = riesz_markov_weights(dirac, alg, ctx);
    double disp = 0.0;
    for (int t = 0; t < 5; ++t) {
      Vector v(4);
      for (Eigen::Index j = 0; j < 4; ++j) v(j) = Complex(rng.gaussian(), 0.0);
      const FunctionElement f(v);
      const double mean = (dw.cast<Complex>().cwiseProduct(f.values)).sum().real();
      const double second =
          (dw.cast<Complex>().cwiseProduct(f.values.cwiseProduct(f.values))).sum().real();
      disp = std::max(disp, std::abs(second - mean * mean));
    }
    r.add("point_evaluation_dispersion_free", "Delta_{delta_P} f = 0", disp, 1e-12);
  }
  return r;
}

CheckReport suite_gns(const SuiteConfig& cfg) {
  CheckReport r;
  r.suite = "gns";
  const ToleranceContext& ctx = cfg.ctx;
  Rng rng(cfg.seed + 3);

  // Cauchy-Schwarz for the state inner product.
  double cs_excess = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(4));
    const DensityFunctional rho = random_density(rng, n, ctx);
    const AlgebraElement a = random_element(rng, n);
    const AlgebraElement b = random_element(rng, n);
    const double lhs = std::norm(rho(a.adjoint() * b));
    const double rhs = rho(a.adjoint() * a).real() * rho(b.adjoint() * b).real();
    cs_excess = std::max(cs_excess, lhs - rhs);
  }
  r.add("cauchy_schwarz", "|rho(A* B)|^2 <= rho(A* A) rho(B* B)", cs_excess, 1e-12);

  const SubalgebraBasis m2 = SubalgebraBasis::full_matrix_algebra(2);
  const SubalgebraBasis m3 = SubalgebraBasis::full_matrix_algebra(3);

  // Faithful state: trivial kernel, full dimension, isometric representation.
  {
    const DensityFunctional rho = random_density(rng, 3, ctx);
    const auto kernel = left_kernel(m3.basis, rho, ctx);
    const GnsResult gns = gns_construct(m3, rho, ctx);
    r.add_flag("faithful_kernel_trivial", "faithful rho has left kernel 0",
               kernel.empty() && gns.hilbert_dim == 9);
    const CheckReport v = verify_gns(gns, m3, rho, ctx);
    for (const Check& c : v.checks) {
      Check copy = c;
      copy.name = "faithful_" + copy.name;
      r.checks.push_back(copy);
    }

    // Left-ideal property on a rank-deficient state.
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 0.5;
    d(1, 1) = 0.5;
    const DensityFunctional defective(d, ctx);
    const auto dk = left_kernel(m3.basis, defective, ctx);
    double ideal_gap = 0.0;
    for (const AlgebraElement& a : dk)
      for (int t = 0; t < 5; ++t) {
        const AlgebraElement b = random_element(rng, 3);
        const AlgebraElement ba = b * a;
        ideal_gap = std::max(ideal_gap, std::abs(defective(ba.adjoint() * ba)));
      }
    r.add("left_ideal", "L_rho is a left ideal", ideal_gap, 1e-12);
    r.add_flag("dimension_law", "dim H = dim algebra - dim kernel",
               static_cast<std::size_t>(gns_construct(m3, defective, ctx).hilbert_dim) ==
                   m3.size() - dk.size());
  }

  // Pure state: GNS is the defining representation, irreducible.
  {
    Vector e1 = Vector::Zero(3);
    e1(0) = 1.0;
    const DensityFunctional pure = DensityFunctional::vector_state(e1, ctx);
    const GnsResult gns = gns_construct(m3, pure, ctx);
    r.add_flag("pure_dimension", "pure state on M_n yields H of dimension n",
               gns.hilbert_dim == 3);
    r.add_flag("pure_irreducible", "pure state => irreducible GNS representation",
               is_irreducible(gns, ctx));
    const GnsResult defining = defining_representation(m3, e1);
    const Intertwiner u = equivalence_intertwiner(gns, defining, m3, ctx);
    r.add("pure_defining_equivalence", "phi(A) = U pi_rho(A) U*", u.defect, 1e-9);
    r.add("intertwiner_unitary", "U* U = I",
          (u.matrix.adjoint() * u.matrix - Matrix::Identity(3, 3)).norm(), 1e-10);
    r.add("intertwiner_cyclic_match", "x = U x_rho",
          (u.matrix * gns.cyclic - defining.cyclic).norm(), 1e-9);

    // Every vector state of an irreducible representation generates an
    // equivalent representation.
    Vector y(3);
    for (Eigen::Index i = 0; i < 3; ++i) y(i) = rng.cgaussian();
    y.normalize();
    const DensityFunctional omega_y = vector_state(gns, y, m3, ctx);
    r.add_flag("vector_state_is_state", "omega_y(A) = <y, pi(A) y> is a state",
               is_state(omega_y, ctx));
    const GnsResult gns_y = gns_construct(m3, omega_y, ctx);
    const Intertwiner uy = equivalence_intertwiner(
        gns_y, GnsResult{gns.hilbert_dim, gns.rep_basis, y, gns.quotient_basis}, m3, ctx);
    r.add("vector_state_equivalence",
          "vectors of a pure GNS space define equivalent representations", uy.defect, 1e-9);
  }

  // Tracial state on M_2: dimension 4, reducible.
  {
    const DensityFunctional tr = DensityFunctional::tracial(2);
    const GnsResult gns = gns_construct(m2, tr, ctx);
    r.add_flag("tracial_dimension", "tracial GNS on M_2 has dimension 4", gns.hilbert_dim == 4);
    r.add_flag("tracial_reducible", "tracial GNS commutant is non-trivial",
               !is_irreducible(gns, ctx));
    const CheckReport v = verify_gns(gns, m2, tr, ctx);
    for (const Check& c : v.checks) {
      Check copy = c;
      copy.name = "tracial_" + copy.name;
      r.checks.push_back(copy);
    }
  }

  // Point evaluation on the diagonal algebra: one-dimensional representation.
  {
    const SubalgebraBasis diag = SubalgebraBasis::diagonal_algebra(3);
    Matrix d = Matrix::Zero(3, 3);
    d(1, 1) = 1.0;
    const DensityFunctional point(d, ctx);
    const GnsResult gns = gns_construct(diag, point, ctx);
    r.add_flag("point_evaluation_dimension", "point evaluation yields a one-dimensional "
                                             "representation",
               gns.hilbert_dim == 1 && is_irreducible(gns, ctx));
  }

  // Well-definedness: perturbing a coset representative by a kernel element
  // does not move the represented operator.
  {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    const DensityFunctional pure(d, ctx);
    const GnsResult gns = gns_construct(m2, pure, ctx);
    const auto kernel = left_kernel(m2.basis, pure, ctx);
    double shift = 0.0;
    const AlgebraElement a = random_element(rng, 2);
    for (const AlgebraElement& k : kernel) {
      // rep(A)_{jk} entries recomputed with C_1 replaced by C_1 + K.
      for (std::size_t j = 0; j < gns.quotient_basis.size(); ++j) {
        const AlgebraElement cj = gns.quotient_basis[j];
        const AlgebraElement perturbed = cj + k;
        for (std::size_t kk = 0; kk < gns.quotient_basis.size(); ++kk) {
          const AlgebraElement ck = gns.quotient_basis[kk];
          const Complex before = pure(cj.adjoint() * (a * ck));
          const Complex after = pure(perturbed.adjoint() * (a * ck));
          shift = std::max(shift, std::abs(before - after));
        }
      }
    }
    r.add("coset_well_defined", "pi(A)(B + L) = AB + L independent of representative", shift,
          1e-10);
  }

  // Uniqueness: recover a planted unitary conjugation.
  {
    const DensityFunctional rho = random_density(rng, 2, ctx);
    const GnsResult gns = gns_construct(m2, rho, ctx);
    const AlgebraElement planted = random_unitary(rng, gns.hilbert_dim);
    GnsResult conj;
    conj.hilbert_dim = gns.hilbert_dim;
    conj.cyclic = planted.mat() * gns.cyclic;
    conj.quotient_basis = gns.quotient_basis;
    for (const AlgebraElement& rep : gns.rep_basis)
      conj.rep_basis.emplace_back(planted.mat() * rep.mat() * planted.mat().adjoint());
    const Intertwiner u = equivalence_intertwiner(gns, conj, m2, ctx);
    r.add("uniqueness_defect", "any two GNS representations of rho intertwine", u.defect, 1e-9);
    // Compare with the planted unitary up to a global phase.
    Complex phase = 0.0;
    double best = 0.0;
    for (Eigen::Index i = 0; i < planted.dim(); ++i)
      for (Eigen::Index j = 0; j < planted.dim(); ++j)
        if (std::abs(planted.mat()(i, j)) > best) {
          best = std::abs(planted.mat()(i, j));
          phase = planted.mat()(i, j) / u.matrix(i, j);
        }
    r.add("uniqueness_planted_match", "U recovers the planted conjugation up to phase",
          (u.matrix * phase - planted.mat()).cwiseAbs().maxCoeff(), 1e-8);
  }
  return r;
}

CheckReport suite_weyl(const SuiteConfig& cfg) {
  CheckReport r;
  r.suite = "weyl";
  const ToleranceContext& ctx = cfg.ctx;

  // Symplectic form sanity on random labels.
  Rng rng(cfg.seed + 4);
  double symp = 0.0;
  for (int t = 0; t < 20; ++t) {
    const PhasePoint v{rng.gaussian(), rng.gaussian()};
    const PhasePoint w{rng.gaussian(), rng.gaussian()};
    symp = std::max(symp, std::abs(symplectic_form(v, v)));
    symp = std::max(symp, std::abs(symplectic_form(v, w) + symplectic_form(w, v)));
  }
  r.add("symplectic_antisymmetry", "sigma(v,v) = 0 and sigma(v,w) = -sigma(w,v)", symp, 0.0);
  r.add("symplectic_canonical_pair", "sigma((1,0),(0,1)) = 1",
        std::abs(symplectic_form({1, 0}, {0, 1}) - 1.0), 0.0);

  for (int n : cfg.moduli) {
    const DiscreteWeylSystem sys(n);
    const CheckReport rel = check_weyl_relations(sys, ctx);
    for (const Check& c : rel.checks) {
      Check copy = c;
      copy.name = "n" + std::to_string(n) + "_" + copy.name;
      r.checks.push_back(copy);
    }
    // Irreducibility: the Weyl elements have trivial commutant.
    std::vector<AlgebraElement> all;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) all.push_back(sys.weyl(a, b));
    r.add_flag("n" + std::to_string(n) + "_commutant_trivial",
               "the finite Weyl system is irreducible", commutant_of(all, n, ctx).size() == 1);
  }

  // Exact polynomial commutation relations.
  const CheckReport pc = poly_commutator_check(16, 24);
  r.add_flag("poly_ccr_exact", "[x^n, p] = i n x^{n-1} exactly for n <= 16", pc.all_pass());
  return r;
}

CheckReport suite_svn(const SuiteConfig& cfg) {
  CheckReport r;
  r.suite = "svn";
  const ToleranceContext& ctx = cfg.ctx;
  Rng rng(cfg.seed + 5);

  for (int n : cfg.moduli) {
    const DiscreteWeylSystem sys(n);

    // Self-equivalence: U is a phase.
    const Intertwiner self = svn_intertwiner_discrete(sys, sys, cfg.seed, ctx);
    const Complex scale = self.matrix(0, 0);
    double self_gap = (self.matrix - scale * Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    self_gap = std::max(self_gap, std::abs(std::abs(scale) - 1.0));
    r.add("n" + std::to_string(n) + "_self_intertwiner", "the self-intertwiner is a phase",
          self_gap + self.defect, 1e-10);

    // Planted conjugations are recovered up to phase.
    double worst_defect = 0.0, worst_match = 0.0;
    for (int t = 0; t < 3; ++t) {
      const AlgebraElement planted = random_unitary(rng, n);
      const DiscreteWeylSystem conj = sys.conjugated(planted);
      const Intertwiner u = svn_intertwiner_discrete(sys, conj, cfg.seed + t, ctx);
      worst_defect = std::max(worst_defect, u.defect);
      Eigen::Index bi = 0, bj = 0;
      planted.mat().cwiseAbs().maxCoeff(&bi, &bj);
      const Complex phase = planted.mat()(bi, bj) / u.matrix(bi, bj);
      worst_match = std::max(worst_match,
                             (u.matrix * phase - planted.mat()).cwiseAbs().maxCoeff());
    }
    r.add("n" + std::to_string(n) + "_planted_defect",
          "all regular irreducible representations are unitarily equivalent", worst_defect,
          1e-9);
    r.add("n" + std::to_string(n) + "_planted_match", "recovered U equals the planted unitary "
                                                      "up to phase",
          worst_match, 1e-8);

    // The Fourier-dual convention (clock and shift exchanged) intertwines.
    const DiscreteWeylSystem dual(n, DiscreteWeylSystem::Convention::fourier_dual);
    const Intertwiner fu = svn_intertwiner_discrete(sys, dual, cfg.seed, ctx);
    r.add("n" + std::to_string(n) + "_fourier_dual_defect",
          "clock/shift exchange is implemented by the Fourier matrix", fu.defect, 1e-9);
  }
  return r;
}

CheckReport suite_schrodinger(const SuiteConfig& cfg) {
  CheckReport r;
  r.suite = "schrodinger";
  const ToleranceContext& ctx = cfg.ctx;
  Rng rng(cfg.seed + 6);
  const GridRep grid(cfg.grid_points, cfg.grid_half_width);
  const int n = grid.N;

  // Unitarity of the Weyl operators on the grid.
  double unitary_gap = 0.0;
  for (double alpha : {0.3, 1.1}) {
    const AlgebraElement u = phase_op(grid, alpha);
    unitary_gap =
        std::max(unitary_gap, (u.mat().adjoint() * u.mat() - Matrix::Identity(n, n)).norm());
  }
  for (double beta : {0.25, 1.7}) {
    const AlgebraElement v = translate_op(grid, beta);
    unitary_gap =
        std::max(unitary_gap, (v.mat().adjoint() * v.mat() - Matrix::Identity(n, n)).norm());
  }
  r.add("weyl_operators_unitary", "U(alpha), V(beta) unitary", unitary_gap, 1e-9);

  r.add("translate_zero", "V(0) = I",
        translate_op(grid, 0.0).max_abs_diff(AlgebraElement::unit(n)), 1e-12);

  // Grid-aligned translation is an exact index shift.
  {
    Vector e = Vector::Zero(n);
    e(n / 2) = 1.0;
    const Vector shifted = translate_op(grid, grid.dx()).apply(e);
    Vector expected = Vector::Zero(n);
    expected(n / 2 - 1) = 1.0;
    r.add("translate_grid_step", "(V(dx) psi)_j = psi_{j+1}",
          (shifted - expected).cwiseAbs().maxCoeff(), 1e-12);
  }

  // The Weyl commutation relation on localized test vectors.
  {
    double gap = 0.0;
    const double pi = 3.14159265358979323846;
    const Vector psi = gaussian_ground_state(grid);
    for (double alpha : {pi / grid.L, 2 * pi / grid.L})
      for (double beta : {grid.dx(), 2 * grid.dx()}) {
        const AlgebraElement u = phase_op(grid, alpha);
        const AlgebraElement v = translate_op(grid, beta);
        const Vector lhs = u.apply(v.apply(psi));
        const Vector rhs = std::polar(1.0, -alpha * beta) * v.apply(u.apply(psi));
        gap = std::max(gap, grid.norm(lhs - rhs));
      }
    r.add("weyl_relation", "U(alpha) V(beta) = V(beta) U(alpha) e^{-i alpha beta}", gap, 1e-10);
  }

  // Generators: self-adjointness and the plane-wave eigenvector property.
  {
    const auto [q, p] = position_momentum(grid);
    const double sa = std::max((q.mat() - q.mat().adjoint()).norm(),
                               (p.mat() - p.mat().adjoint()).norm());
    r.add("generators_self_adjoint", "q and p are self-adjoint", sa, 1e-9);

    const double k0 = grid.k(5);
    Vector wave(n);
    for (int j = 0; j < n; ++j) wave(j) = std::polar(1.0, k0 * grid.x(j));
    wave = grid.normalized(std::move(wave));
    r.add("momentum_plane_wave", "p e^{ikx} = k e^{ikx}",
          grid.norm(p.apply(wave) - Complex(k0, 0.0) * wave), 1e-10);
  }

  // CCR defects on the Gaussian and the Hermite ladder.
  {
    double worst = 0.0;
    for (int m = 0; m <= 4; ++m)
      worst = std::max(worst, ccr_defect(grid, hermite_state(grid, m)));
    r.add("ccr_hermite", "(qp - pq) psi = i psi on smooth localized states", worst, 1e-6);
    r.add("ccr_gaussian", "(qp - pq) psi = i psi on the ground state",
          ccr_defect(grid, gaussian_ground_state(grid)), 1e-8);
  }

  // Fock-state expectation values against the closed form.
  {
    double sup = 0.0;
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j) {
        const PhasePoint v{i * 0.5, j * 0.5};
        if (v.norm_sq() > 4.0 + 1e-12) continue;
        const Complex got = fock_expectation(grid, v);
        sup = std::max(sup, std::abs(got - Complex(std::exp(-v.norm_sq() / 4.0), 0.0)));
      }
    r.add("fock_expectation", "omega_F(W(v)) = e^{-|v|^2/4}", sup, 1e-6);
  }

  // Uncertainty products.
  {
    const Uncertainty g = uncertainty_check(grid, gaussian_ground_state(grid), ctx);
    r.add("uncertainty_gaussian_minimizer", "Delta q Delta p = 1/2 for the ground state",
          std::abs(g.dq * g.dp - 0.5), 1e-6);
    const Uncertainty h1 = uncertainty_check(grid, hermite_state(grid, 1), ctx);
    r.add("uncertainty_first_excited", "Delta q Delta p = 3/2 for h_1",
          std::abs(h1.dq * h1.dp - 1.5), 1e-5);

    Vector squeezed(n);
    for (int j = 0; j < n; ++j) squeezed(j) = std::exp(-2.0 * grid.x(j) * grid.x(j));
    const Uncertainty sq = uncertainty_check(grid, grid.normalized(std::move(squeezed)), ctx);
    r.add("uncertainty_squeezed", "pure squeezing preserves Delta q Delta p = 1/2",
          std::abs(sq.dq * sq.dp - 0.5), 1e-5);

    double floor_violation = 0.0;
    for (int t = 0; t < 20; ++t) {
      Vector psi = Vector::Zero(n);
      for (int m = 0; m < 8; ++m) psi += rng.cgaussian() * hermite_state(grid, m);
      const Uncertainty u = uncertainty_check(grid, grid.normalized(std::move(psi)), ctx);
      floor_violation = std::max(floor_violation, 0.5 - u.dq * u.dp);
    }
    r.add("uncertainty_floor", "Delta q Delta p >= 1/2", floor_violation, 1e-6);
  }

  // Born rule on the multiplication algebra.
  {
    const Vector psi = gaussian_ground_state(grid);
    const CheckReport born = born_rule_check(grid, psi, [](double) { return 1.0; });
    r.add_flag("born_rule_normalized", "omega_psi(I) = 1", born.all_pass());
    Vector fv(n);
    for (int j = 0; j < n; ++j) fv(j) = Complex(grid.x(j) * grid.x(j), 0.0);
    const double second = grid.inner(psi, fv.cwiseProduct(psi)).real();
    r.add("born_rule_second_moment", "omega_psi(q^2) = int x^2 |psi|^2 dx = 1/2",
          std::abs(second - 0.5), 1e-6);
  }

  // Riemann operator integrals: refinement decrease and partition
  // independence, probed on the ground state.
  {
    const double cut = cfg.integral_cutoff;
    const auto gaussian_kernel = [](const PhasePoint& v) {
      return Complex(std::exp(-v.norm_sq() / 4.0) / (2.0 * 3.14159265358979323846), 0.0);
    };
    const Vector omega = gaussian_ground_state(grid);
    std::vector<Vector> images;
    for (int depth = 2; depth <= cfg.integral_depth; ++depth) {
      RiemannIntegralSpec spec{-cut, cut, -cut, cut, gaussian_kernel, depth};
      images.push_back(riemann_operator_integral(grid, spec).apply(omega));
    }
    bool decreasing = true;
    double prev = 1e300;
    for (std::size_t i = 1; i < images.size(); ++i) {
      const double inc = grid.norm(images[i] - images[i - 1]);
      if (inc > prev) decreasing = false;
      prev = inc;
    }
    r.add_flag("riemann_refinement", "Riemann sums converge under refinement", decreasing);

    // A shifted partition family of the same cell size lands on the same
    // operator (the kernel mass lost at the box edge is negligible).
    const double shift = cut / (1 << (cfg.integral_depth - 1));
    RiemannIntegralSpec shifted{-cut + shift, cut + shift, -cut + shift, cut + shift,
                                gaussian_kernel, cfg.integral_depth};
    const Vector alt = riemann_operator_integral(grid, shifted).apply(omega);
    r.add("riemann_partition_independence", "the limit is independent of the partition family",
          grid.norm(alt - images.back()), 1e-6);
  }

  // The Gaussian-averaged Weyl integral is the projection onto the ground
  // state.
  {
    const FockProjection fock =
        fock_projection(grid, std::max(8.0, cfg.integral_cutoff), cfg.integral_depth, ctx);
    const Matrix& p = fock.projection.mat();
    r.add("fock_idempotent", "P^2 = P", (p * p - p).norm() / p.norm(), 1e-3);
    r.add("fock_self_adjoint", "P* = P", (p - p.adjoint()).norm() / p.norm(), 1e-6);
    r.add("fock_trace", "trace P = 1", std::abs(p.trace().real() - 1.0), 1e-3);

    Eigen::SelfAdjointEigenSolver<Matrix> es(((p + p.adjoint()) / 2.0).eval(),
                                             Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double second_largest = std::max(std::abs(ev(0)), std::abs(ev(n - 2)));
    r.add("fock_rank_one", "P projects onto a single ray", second_largest, 1e-3);

    const Vector omega = gaussian_ground_state(grid);
    r.add("fock_range_gaussian", "x_F is the Gaussian ground state",
          grid.norm(fock.omega - omega * omega.dot(fock.omega) /
                                     std::abs(omega.dot(fock.omega))),
          1e-3);
    r.add("fock_fixes_gaussian", "P Omega = Omega", grid.norm(fock.projection.apply(omega) - omega),
          1e-3);

    double pwp = 0.0;
    for (double z1 : {-1.0, 0.5, 2.0})
      for (double z2 : {0.0, -0.5, 1.0}) {
        const PhasePoint z{z1, z2};
        if (z.norm_sq() > 4.0 + 1e-12) continue;
        const Matrix lhs = p * weyl_op(grid, z).mat() * p;
        pwp = std::max(pwp, (lhs - std::exp(-z.norm_sq() / 4.0) * p).norm() / p.norm());
      }
    r.add("fock_sandwich", "P W(z) P = e^{-|z|^2/4} P", pwp, 1e-3);
  }
  return r;
}

CheckReport suite_all(const SuiteConfig& cfg) {
  CheckReport r;
  r.suite = "verify-all";
  for (const CheckReport& part :
       {suite_spectra(cfg), suite_calculus(cfg), suite_states(cfg), suite_gns(cfg),
        suite_weyl(cfg), suite_svn(cfg), suite_schrodinger(cfg)}) {
    for (const Check& c : part.checks) {
      Check copy = c;
      copy.name = part.suite + "." + copy.name;
      r.checks.push_back(copy);
    }
  }
  r.sort_by_name();
  return r;
}

}  // namespace opalg
