#include <doctest.h>

#include <cmath>

#include "entmono/bipartite.hpp"

using namespace entmono;

namespace {

BipartitePureState bell() {
    return bipartite_from_matrix(ComplexMatrix::Identity(2, 2));
}

BipartitePureState max_entangled(int d) {
    return bipartite_from_matrix(ComplexMatrix::Identity(d, d));
}

// state with Schmidt coefficients (sqrt(0.9), sqrt(0.1))
BipartitePureState skew_state() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = std::sqrt(0.9);
    m(1, 1) = std::sqrt(0.1);
    return bipartite_from_matrix(m);
}

}  // namespace

TEST_SUITE("bipartite") {

TEST_CASE("frame_constant for every frame kind") {
    CHECK(frame_constant(BipartiteFrame::raw()) == 1.0);
    double bell_n = (2 * std::sqrt(2.0) + 1) / 7;
    CHECK(frame_constant(BipartiteFrame::bell()) == doctest::Approx(bell_n).epsilon(1e-15));
    CHECK(frame_constant(BipartiteFrame::max_d(2)) ==
          doctest::Approx(bell_n).epsilon(1e-15));
    CHECK(frame_constant(BipartiteFrame::max_d(3)) ==
          doctest::Approx((3 * std::sqrt(3.0) + 1) / 26).epsilon(1e-15));
    CHECK(frame_constant(BipartiteFrame::custom(0.7)) == 0.7);

    CHECK_THROWS_AS(BipartiteFrame::max_d(1), InvalidParameterError);
    CHECK_THROWS_AS(BipartiteFrame::custom(0.0), InvalidParameterError);
    CHECK_THROWS_AS(BipartiteFrame::custom(-1.0), InvalidParameterError);
}

TEST_CASE("schmidt_sum anchors") {
    ComplexMatrix prod = ComplexMatrix::Zero(2, 2);
    prod(0, 0) = 1;
    CHECK(schmidt_sum(bipartite_from_matrix(prod)) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(schmidt_sum(bell()) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));

    for (int d : {2, 3, 5}) {
        CHECK(schmidt_sum(max_entangled(d)) ==
              doctest::Approx(d * std::sqrt(double(d))).epsilon(1e-12));
    }
}

TEST_CASE("schmidt_sum stays in [1, D sqrt(D)]") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        int n1 = 1 + static_cast<int>(rng.uniform_below(5));
        int n2 = 1 + static_cast<int>(rng.uniform_below(5));
        double s = schmidt_sum(random_bipartite_state(n1, n2, rng));
        int d = std::min(n1, n2);
        CHECK(s >= 1.0 - 1e-12);
        CHECK(s <= d * std::sqrt(double(d)) + 1e-12);
    }
}

TEST_CASE("bipartite_e anchors") {
    CHECK(bipartite_e(bell(), BipartiteFrame::bell()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bipartite_e(max_entangled(4), BipartiteFrame::max_d(4)) ==
          doctest::Approx(1.0).epsilon(1e-12));

    ComplexMatrix prod = ComplexMatrix::Zero(2, 2);
    prod(0, 0) = 1;
    CHECK(bipartite_e(bipartite_from_matrix(prod), BipartiteFrame::raw()) == 0.0);
    CHECK(bipartite_e(bipartite_from_matrix(prod), BipartiteFrame::bell()) == 0.0);

    // closed form from Schmidt coefficients (sqrt(0.9), sqrt(0.1)), Bell frame
    double want = (2 * std::sqrt(2.0) + 1) / 7 *
                  (std::pow(std::pow(0.9, 0.25) + std::pow(0.1, 0.25), 2.0) - 1);
    CHECK(want == doctest::Approx(0.7440034993281558).epsilon(1e-14));
    CHECK(bipartite_e(skew_state(), BipartiteFrame::bell()) ==
          doctest::Approx(0.7440034993281558).epsilon(1e-12));

    // custom frame scales linearly
    CHECK(bipartite_e(bell(), BipartiteFrame::custom(0.5)) ==
          doctest::Approx(0.5 * (2 * std::sqrt(2.0) - 1)).epsilon(1e-12));
}

TEST_CASE("product states give exactly zero") {
    Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        int n1 = 2 + static_cast<int>(rng.uniform_below(4));
        int n2 = 2 + static_cast<int>(rng.uniform_below(4));
        ComplexMatrix u(n1, 1), v(n2, 1);
        for (int i = 0; i < n1; ++i) u(i, 0) = rng.complex_gauss();
        for (int i = 0; i < n2; ++i) v(i, 0) = rng.complex_gauss();
        BipartitePureState s = bipartite_from_matrix(u * v.transpose());
        CHECK(bipartite_e(s, BipartiteFrame::raw()) == 0.0);
    }
}

TEST_CASE("local unitaries leave E unchanged") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        int n1 = 2 + static_cast<int>(rng.uniform_below(3));
        int n2 = 2 + static_cast<int>(rng.uniform_below(3));
        BipartitePureState s = random_bipartite_state(n1, n2, rng);
        ComplexMatrix u = haar_unitary(n1, rng);
        ComplexMatrix v = haar_unitary(n2, rng);
        BipartitePureState rotated{u * s.psi * v.transpose()};
        double before = bipartite_e(s, BipartiteFrame::raw());
        double after = bipartite_e(rotated, BipartiteFrame::raw());
        CHECK(std::abs(after - before) < 1e-10);
    }
}

TEST_CASE("party swap leaves E unchanged") {
    Rng rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        BipartitePureState s = random_bipartite_state(3, 4, rng);
        BipartitePureState swapped{s.psi.transpose()};
        CHECK(std::abs(bipartite_e(s, BipartiteFrame::raw()) -
                       bipartite_e(swapped, BipartiteFrame::raw())) < 1e-12);
    }
}

TEST_CASE("average_e_after_povm on hand-built POVMs") {
    double inv_sqrt2 = 1 / std::sqrt(2.0);
    PovmPair split{ComplexMatrix::Identity(2, 2) * inv_sqrt2,
                   ComplexMatrix::Identity(2, 2) * inv_sqrt2};
    PovmAverage r = average_e_after_povm(bell(), split, Party::A, BipartiteFrame::bell());
    CHECK(r.before == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.avg == doctest::Approx(1.0).epsilon(1e-12));

    // projective measurement kills the Bell state's entanglement
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    r = average_e_after_povm(bell(), PovmPair{p0, p1}, Party::A, BipartiteFrame::bell());
    CHECK(r.before == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.avg == 0.0);

    // same on party B by symmetry of the Bell state
    r = average_e_after_povm(bell(), PovmPair{p0, p1}, Party::B, BipartiteFrame::bell());
    CHECK(r.avg == 0.0);
}

TEST_CASE("average_e_after_povm never exceeds the input entanglement") {
    Rng rng(25);
    for (int trial = 0; trial < 200; ++trial) {
        int n1 = 2 + static_cast<int>(rng.uniform_below(3));
        int n2 = 2 + static_cast<int>(rng.uniform_below(3));
        BipartitePureState s = random_bipartite_state(n1, n2, rng);
        Party party = (rng.uniform_below(2) == 0) ? Party::A : Party::B;
        PovmPair p = random_povm_pair(party == Party::A ? n1 : n2, rng);
        PovmAverage r = average_e_after_povm(s, p, party, BipartiteFrame::raw());
        CHECK(r.avg <= r.before + 1e-9);
    }
}

TEST_CASE("average_e_after_povm validates party and dimensions") {
    PovmPair p = random_povm_pair(2, RngSeed{1});
    CHECK_THROWS_AS(average_e_after_povm(bell(), p, Party::C, BipartiteFrame::raw()),
                    DimensionMismatchError);
    PovmPair p3 = random_povm_pair(3, RngSeed{1});
    CHECK_THROWS_AS(average_e_after_povm(bell(), p3, Party::A, BipartiteFrame::raw()),
                    DimensionMismatchError);
    CHECK_THROWS_AS(average_e_after_povm(bell(), p3, Party::B, BipartiteFrame::raw()),
                    DimensionMismatchError);
}

}  // TEST_SUITE
