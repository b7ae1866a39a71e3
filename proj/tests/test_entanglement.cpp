#include "ctc/entanglement.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace ctc;
using namespace ctc::testing;

namespace {

DensityMatrix bell_state() {
    CVector v = CVector::Zero(4);
    v(0) = v(3) = 1.0 / std::sqrt(2.0);
    return pure_state(v);
}

}  // namespace

TEST_CASE("entropy of pure, maximally mixed and biased states") {
    auto gen = rng(51);
    CHECK(von_neumann_entropy(pure_state(random_pure(gen, 4))) < 1e-12);
    CHECK(von_neumann_entropy(DensityMatrix::trusted(CMatrix::Identity(2, 2) / 2.0)) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));

    CMatrix d(2, 2);
    d << 0.25, 0.0, 0.0, 0.75;
    // -(1/4 ln 1/4 + 3/4 ln 3/4)
    CHECK(von_neumann_entropy(DensityMatrix::validated(d)) ==
          doctest::Approx(0.5623351446188083).epsilon(1e-12));
}

TEST_CASE("purity values") {
    auto gen = rng(52);
    CHECK(purity(pure_state(random_pure(gen, 3))) == doctest::Approx(1.0));
    CHECK(purity(DensityMatrix::trusted(CMatrix::Identity(4, 4) / 4.0)) == doctest::Approx(0.25));
    CMatrix d(2, 2);
    d << 0.3, 0.0, 0.0, 0.7;
    CHECK(purity(DensityMatrix::validated(d)) == doctest::Approx(0.58));
}

TEST_CASE("concurrence of Bell, maximally mixed and product states") {
    CHECK(concurrence(bell_state()) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(concurrence(DensityMatrix::trusted(CMatrix::Identity(4, 4) / 4.0)) ==
          doctest::Approx(0.0));
    CVector e00 = CVector::Zero(4);
    e00(0) = 1.0;
    CHECK(concurrence(pure_state(e00)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(concurrence(DensityMatrix::trusted(CMatrix::Identity(2, 2) / 2.0)),
                    ValidationError);
}

TEST_CASE("is_product basics") {
    CHECK(is_product(DensityMatrix::trusted(CMatrix::Identity(4, 4) / 4.0)));
    CHECK_FALSE(is_product(bell_state()));
    auto gen = rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_density(gen, 2), b = random_density(gen, 2);
        const auto prod = DensityMatrix::trusted(kron(a.mat(), b.mat()));
        CHECK(is_product(prod));
        CHECK(concurrence(prod) <= 1e-8);
    }
}

TEST_CASE("entropy additivity on products and unitary invariance") {
    auto gen = rng(54);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_density(gen, 2), b = random_density(gen, 2);
        const auto prod = DensityMatrix::trusted(kron(a.mat(), b.mat()));
        CHECK(std::abs(von_neumann_entropy(prod) - von_neumann_entropy(a) -
                       von_neumann_entropy(b)) < 1e-10);

        const CMatrix u = random_unitary(gen, 4);
        const auto rotated = DensityMatrix::trusted(u * prod.mat() * u.adjoint());
        CHECK(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(prod)) < 1e-10);
    }
}

TEST_CASE("concurrence is invariant under local unitaries") {
    auto gen = rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        const auto rho = random_density(gen, 4);
        const CMatrix local = kron(random_unitary(gen, 2), random_unitary(gen, 2));
        const auto rotated = DensityMatrix::trusted(local * rho.mat() * local.adjoint());
        CHECK(std::abs(concurrence(rotated) - concurrence(rho)) < 1e-9);
    }
}

TEST_CASE("report fields are consistent") {
    auto gen = rng(56);
    const auto rep = entanglement_report(bell_state());
    CHECK(rep.entropy_nats < 1e-12);
    CHECK(rep.purity == doctest::Approx(1.0));
    REQUIRE(rep.concurrence.has_value());
    CHECK(*rep.concurrence == doctest::Approx(1.0));
    CHECK_FALSE(rep.is_product);

    const auto qubit = entanglement_report(random_density(gen, 2));
    CHECK_FALSE(qubit.concurrence.has_value());
    // entropy 0 iff purity 1
    CHECK((qubit.entropy_nats < 1e-9) == (std::abs(qubit.purity - 1.0) < 1e-9));
}
