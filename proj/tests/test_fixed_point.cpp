#include "ctc/fixed_point.hpp"
#include "ctc/entanglement.hpp"
#include "ctc/scenarios.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace ctc;
using namespace ctc::testing;

namespace {

Superoperator diag_super(double a, double b, double c, double d) {
    CMatrix m = CMatrix::Zero(4, 4);
    m.diagonal() << a, b, c, d;
    return {2, std::move(m), Provenance::Direct};
}

DensityMatrix basis_state(int d, int k) {
    CVector v = CVector::Zero(d);
    v(k) = 1.0;
    return pure_state(v);
}

}  // namespace

TEST_CASE("fixed_subspace of the identity superoperator is the whole space") {
    Superoperator s{2, CMatrix::Identity(4, 4), Provenance::Direct};
    CHECK(fixed_subspace(s).size() == 4);
}

TEST_CASE("fixed_subspace of M^B spans {e1, e4}") {
    const auto basis = fixed_subspace(diag_super(1, 0, 0, 1));
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        CHECK(std::abs(v(1)) < 1e-12);
        CHECK(std::abs(v(2)) < 1e-12);
    }
}

TEST_CASE("fixed_subspace errors out when empty") {
    Superoperator s{2, CMatrix::Zero(4, 4), Provenance::Direct};
    CHECK_THROWS_AS(fixed_subspace(s), NumericalError);
}

TEST_CASE("EPR superoperator has a unique fixed vector proportional to vec(I/2)") {
    const auto m = build_superoperator_pure(build_epr_interaction());
    const auto basis = fixed_subspace(m);
    REQUIRE(basis.size() == 1);
    CVector vi = vec_rowmajor(CMatrix::Identity(2, 2));
    vi /= vi.norm();
    CHECK(std::abs(std::abs(basis[0].dot(vi)) - 1.0) < 1e-10);
}

TEST_CASE("hermitian_fixed_basis splits raw vectors into Hermitian generators") {
    std::vector<CVector> raw;
    CVector e1 = CVector::Zero(4), e4 = CVector::Zero(4);
    e1(0) = 1.0;
    e4(3) = 1.0;
    raw = {e1, e4};
    const auto basis = hermitian_fixed_basis(raw, 2);
    REQUIRE(basis.size() == 2);
    for (const auto& b : basis) {
        CHECK((b - CMatrix(b.adjoint())).norm() < 1e-12);
        CHECK(std::abs(b(0, 1)) < 1e-12);  // diagonal family
    }

    CVector vi = vec_rowmajor(CMatrix::Identity(2, 2)) / std::sqrt(2.0);
    const auto single = hermitian_fixed_basis({vi}, 2);
    REQUIRE(single.size() == 1);
    CHECK((single[0] - CMatrix::Identity(2, 2) / std::sqrt(2.0)).norm() < 1e-12);

    // the traceless raw eigenvector (-1, 0, 0, 1)
    CVector v2(4);
    v2 << -1.0, 0.0, 0.0, 1.0;
    v2 /= v2.norm();
    const auto traceless = hermitian_fixed_basis({v2}, 2);
    REQUIRE(traceless.size() == 1);
    CHECK(std::abs(traceless[0].trace()) < 1e-12);
}

TEST_CASE("density_solutions on the M^B family") {
    const auto raw = fixed_subspace(diag_super(1, 0, 0, 1));
    const auto set = density_solutions(hermitian_fixed_basis(raw, 2));
    CHECK(set.d == 2);
    CHECK(set.subspace_dim() == 1);
    CHECK(set.degenerate());
    CHECK_NOTHROW(DensityMatrix::validated(set.particular.mat()));
    CHECK(std::abs(set.directions[0].trace()) < 1e-12);
    CHECK(set.directions[0].norm() == doctest::Approx(1.0));

    // feasible interval maps onto beta in [0, 1] for diag(beta, 1-beta)
    const auto [lo, hi] = feasible_interval(set, 0);
    const double b0 = set.particular.mat()(0, 0).real();
    const double d00 = set.directions[0](0, 0).real();
    const double beta_lo = b0 + lo * d00, beta_hi = b0 + hi * d00;
    CHECK(std::min(beta_lo, beta_hi) == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(std::max(beta_lo, beta_hi) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("density_solutions unique cases") {
    const auto basis = std::vector<CMatrix>{CMatrix::Identity(2, 2) / std::sqrt(2.0)};
    const auto set = density_solutions(basis);
    CHECK(set.subspace_dim() == 0);
    CHECK((set.particular.mat() - CMatrix::Identity(2, 2) / 2.0).norm() < 1e-12);

    const double eps = 0.25;
    const auto ma = dejonghe_M(DejongheVariant::A, eps);
    const auto set_a = solve_fixed_point_set(ma);
    CHECK(set_a.subspace_dim() == 0);
    CHECK((set_a.particular.mat() - CMatrix::Identity(2, 2) / 2.0).norm() < 1e-9);
}

TEST_CASE("density_solutions rejects a traceless-only span") {
    CMatrix z(2, 2);
    z << 1.0, 0.0, 0.0, -1.0;
    CHECK_THROWS_AS(density_solutions({z / z.norm()}), NumericalError);
}

TEST_CASE("feasible_interval bounds for I/2 with direction diag(1,-1)/sqrt(2)") {
    FixedPointSet set;
    set.d = 2;
    set.particular = DensityMatrix::trusted(CMatrix::Identity(2, 2) / 2.0);
    CMatrix d(2, 2);
    d << 1.0, 0.0, 0.0, -1.0;
    set.directions = {d / d.norm()};
    const auto [lo, hi] = feasible_interval(set, 0);
    // diag(1/2 + t/sqrt(2), 1/2 - t/sqrt(2)) is PSD for |t| <= 1/sqrt(2),
    // i.e. the alpha in [-1/2, 1/2] family scaled by the direction norm.
    CHECK(lo == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-8));
    CHECK(hi == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
    CHECK_THROWS_AS(feasible_interval(set, 1), ValidationError);

    set.directions = {CMatrix::Zero(2, 2)};
    CHECK_THROWS_AS(feasible_interval(set, 0), ValidationError);
}

TEST_CASE("select rules on the M^B family") {
    const auto set = solve_fixed_point_set(diag_super(1, 0, 0, 1));
    const auto max_ent = select(set, {});
    CHECK((max_ent.mat() - CMatrix::Identity(2, 2) / 2.0).norm() < 1e-9);

    // beta = 1 endpoint via given_parameter
    const double d00 = set.directions[0](0, 0).real();
    const double t1 = (1.0 - set.particular.mat()(0, 0).real()) / d00;
    SelectionRule given{SelectionRule::Kind::GivenParameter, {t1}};
    const auto endpoint = select(set, given);
    CMatrix diag10 = CMatrix::Zero(2, 2);
    diag10(0, 0) = 1.0;
    CHECK((endpoint.mat() - diag10).norm() < 1e-8);

    const auto [lo, hi] = feasible_interval(set, 0);
    SelectionRule outside{SelectionRule::Kind::GivenParameter, {hi + 0.5}};
    CHECK_THROWS_AS(select(set, outside), InfeasibleError);

    SelectionRule wrong_arity{SelectionRule::Kind::GivenParameter, {0.0, 0.0}};
    CHECK_THROWS_AS(select(set, wrong_arity), ValidationError);
}

TEST_CASE("selected solutions are fixed points with tiny residual") {
    auto gen = rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const auto u = InteractionUnitary::validated(2, 2, random_unitary(gen, 4));
        const auto m = build_superoperator_pure(u);
        const auto set = solve_fixed_point_set(m);
        const auto rho = select(set, {});
        CHECK_NOTHROW(DensityMatrix::validated(rho.mat()));
        CHECK(consistency_residual(u, basis_state(2, 0), rho) < 1e-9);
    }
}

TEST_CASE("convex combinations of feasible endpoints remain fixed points") {
    auto gen = rng(42);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto m = diag_super(1, 0, 0, 1);
    const auto set = solve_fixed_point_set(m);
    const auto [lo, hi] = feasible_interval(set, 0);
    const CMatrix end_lo = set.particular.mat() + lo * set.directions[0];
    const CMatrix end_hi = set.particular.mat() + hi * set.directions[0];
    for (int trial = 0; trial < 20; ++trial) {
        const double a = unif(gen);
        const CMatrix rho = a * end_lo + (1.0 - a) * end_hi;
        const CVector v = vec_rowmajor(rho);
        CHECK((m.m * v - v).norm() < 1e-9);
        CHECK(min_eigenvalue(rho) > -1e-10);
    }
}

TEST_CASE("max-entropy selection dominates random feasible elements") {
    auto gen = rng(43);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto set = solve_fixed_point_set(diag_super(1, 0, 0, 1));
    const auto chosen = select(set, {});
    const double s_star = von_neumann_entropy(chosen);
    const auto [lo, hi] = feasible_interval(set, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const double t = lo + unif(gen) * (hi - lo);
        CMatrix rho = set.particular.mat() + t * set.directions[0];
        rho = (rho + CMatrix(rho.adjoint())) / 2.0;
        const double s = von_neumann_entropy(DensityMatrix::trusted(rho));
        CHECK(s <= s_star + 1e-12);
    }
}

TEST_CASE("channel iteration oracle basics") {
    auto gen = rng(44);
    const auto id = InteractionUnitary::validated(2, 2, CMatrix::Identity(4, 4));
    const auto sigma0 = random_density(gen, 2);
    const auto fixed = iterate_channel_fixed_point(id, basis_state(2, 0), sigma0, 5);
    CHECK((fixed.mat() - sigma0.mat()).norm() < 1e-12);

    const auto epr = build_epr_interaction();
    const auto out = iterate_channel_fixed_point(epr, basis_state(4, 0), sigma0, 10);
    CHECK((out.mat() - CMatrix::Identity(2, 2) / 2.0).norm() < 1e-12);

    // the M^B channel fixes every diagonal state
    const auto u = dejonghe_unitary();
    CMatrix diag91 = CMatrix::Zero(2, 2);
    diag91(0, 0) = 0.9;
    diag91(1, 1) = 0.1;
    const auto d = DensityMatrix::validated(diag91);
    const auto kept = iterate_channel_fixed_point(u, basis_state(4, 0), d, 50);
    CHECK((kept.mat() - diag91).norm() < 1e-10);
}

TEST_CASE("eigenvalue route agrees with the iteration oracle on unique fixed points") {
    auto gen = rng(45);
    int checked = 0;
    for (int trial = 0; trial < 100 && checked < 40; ++trial) {
        const auto u = InteractionUnitary::validated(2, 2, random_unitary(gen, 4));
        const auto set = solve_fixed_point_set(build_superoperator_pure(u));
        if (set.degenerate()) continue;
        const auto via_eig = select(set, {});
        const auto via_iter =
            iterate_channel_fixed_point(u, basis_state(2, 0), random_density(gen, 2), 10000);
        CHECK((via_eig.mat() - via_iter.mat()).norm() < 1e-4);
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("entropy is invariant under one application of the channel at a fixed point") {
    auto gen = rng(46);
    for (int trial = 0; trial < 10; ++trial) {
        const auto u = InteractionUnitary::validated(2, 2, random_unitary(gen, 4));
        const auto rho_cr = basis_state(2, 0);
        const auto rho = select(solve_fixed_point_set(build_superoperator_pure(u)), {});
        const auto next = apply_ctc_channel(u, rho_cr, rho);
        CHECK(std::abs(von_neumann_entropy(next) - von_neumann_entropy(rho)) < 1e-9);
    }
}
