#include <cmath>

#include "doctest.h"

#include "apath/development.hpp"
#include "apath/gallery.hpp"

using namespace apath;

namespace {

// Independent matrix exponential: scaling and squaring on a Taylor series.
CMat matrix_exp(const CMat& x) {
    int s = 0;
    double norm = frobenius(x);
    while (norm > 0.25) { norm /= 2; ++s; }
    CMat y = x.scaled(1.0 / std::pow(2.0, s));
    CMat sum = CMat::identity(x.n);
    CMat term = CMat::identity(x.n);
    for (int k = 1; k <= 20; ++k) {
        term = (term * y).scaled(1.0 / k);
        sum = sum + term;
    }
    for (int k = 0; k < s; ++k) sum = sum * sum;
    return sum;
}

CMat fiber(const MatrixModel& m, const Vec& a) {
    CMat r(m.d);
    for (int k = 0; k < m.n; ++k)
        for (std::size_t t = 0; t < r.a.size(); ++t) r.a[t] += a[k] * m.basis[k].a[t];
    return r;
}

}  // namespace

TEST_CASE("matrix models reproduce their structure constants to 1e-12") {
    for (const char* tag : {"su2", "heisenberg", "ut2", "sl2"}) {
        MatrixModel m = MatrixModel::preset(tag);
        CHECK(m.structure_mismatch(structure_constants_preset(tag)) < 1e-12);
    }
}

TEST_CASE("development of the zero path is the identity") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    MatrixModel m = MatrixModel::preset("su2");
    APath z = constant_path(su2, {}, 64);
    CHECK(frobenius_dist(develop(m, z), CMat::identity(2)) == 0.0);
}

TEST_CASE("constant path reparameterized by tau develops to exp(X)") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    MatrixModel m = MatrixModel::preset("su2");
    Vec coeff = {0.4, -0.9, 0.7};
    APath p = path_from_samples(su2, 2000, [&](double) { return coeff; },
                                [](double) { return Vec{}; }, false);
    CMat expected = matrix_exp(fiber(m, coeff));
    CHECK(frobenius_dist(develop(m, p), expected) < 1e-10);
    APath q = reparam_tau(p);
    CHECK(frobenius_dist(develop(m, q), expected) < 1e-8);
}

TEST_CASE("development is a concatenation homomorphism and inverts inverses") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    MatrixModel m = MatrixModel::preset("su2");
    APath p0 = random_lie_path(su2, 2000, 91, 0.8);
    APath p1 = random_lie_path(su2, 2000, 92, 0.8);
    CMat joint = develop(m, concat(p0, p1));
    CMat split = develop(m, p0) * develop(m, p1);
    CHECK(frobenius_dist(joint, split) < 1e-8);

    CMat round = develop(m, p0) * develop(m, invert(p0));
    CHECK(frobenius_dist(round, CMat::identity(2)) < 1e-8);

    CHECK(unitary_drift(develop(m, p0)) < 1e-8);
}

TEST_CASE("heisenberg developments stay unipotent exactly in the pattern") {
    SpecPtr h = make_lie_algebra_preset("heisenberg");
    MatrixModel m = MatrixModel::preset("heisenberg");
    APath p = random_lie_path(h, 500, 17, 0.9);
    CMat g = develop(m, p);
    for (int i = 0; i < 3; ++i) {
        CHECK(g(i, i) == std::complex<double>(1.0, 0.0));
        for (int j = 0; j < i; ++j) CHECK(g(i, j) == std::complex<double>(0.0, 0.0));
    }
}

TEST_CASE("equivalence oracle: reparameterization yes, added loop no") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    MatrixModel m = MatrixModel::preset("su2");
    APath p = random_lie_path(su2, 1000, 23, 0.5);
    CHECK(equivalent_oracle(m, p, reparam_tau(p), 1e-6));

    APath loop = random_lie_path(su2, 1000, 24, 0.5);
    REQUIRE(frobenius_dist(develop(m, loop), CMat::identity(2)) > 1e-2);
    CHECK_FALSE(equivalent_oracle(m, p, concat(p, loop), 1e-6));

    // p concatenated with its inverse is equivalent to the constant path
    APath z = constant_path(su2, {}, 1000);
    CHECK(equivalent_oracle(m, concat(p, invert(p)), z, 1e-6));
}

TEST_CASE("equivalence oracle refuses models that are not simply connected") {
    SpecPtr sl2 = make_lie_algebra_preset("sl2");
    MatrixModel m = MatrixModel::preset("sl2");
    APath p = random_lie_path(sl2, 100, 3, 0.2);
    CHECK_THROWS_AS(equivalent_oracle(m, p, p, 1e-6), std::invalid_argument);
    // develop itself still works
    CMat g = develop(m, p);
    CHECK(std::abs(g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) - std::complex<double>(1, 0)) < 1e-8);
}

TEST_CASE("right-translation convention transposes the composition order") {
    SpecPtr su2 = make_lie_algebra_preset("su2");
    MatrixModel m = MatrixModel::preset("su2");
    APath p0 = random_lie_path(su2, 1000, 41, 0.6);
    APath p1 = random_lie_path(su2, 1000, 42, 0.6);
    CMat joint = develop(m, concat(p0, p1), DevConvention::right_translate);
    CMat split = develop(m, p1, DevConvention::right_translate) *
                 develop(m, p0, DevConvention::right_translate);
    CHECK(frobenius_dist(joint, split) < 1e-8);
}

TEST_CASE("tangent oracle decides by endpoints on a convex chart") {
    SpecPtr tan = make_tangent(2);
    APath p = circle_path(tan, 200, true);
    APath q = reparam_tau(circle_path(tan, 200));
    CHECK(tangent_oracle(*tan, p, q));
    APath line = integrate_base(tan, [](double) { return Vec{1.0, 0.0}; }, {0.0, 0.0}, 200);
    CHECK_FALSE(tangent_oracle(*tan, p, line));
    SpecPtr su2 = make_lie_algebra_preset("su2");
    APath z = constant_path(su2, {}, 16);
    CHECK_THROWS_AS(tangent_oracle(*su2, z, z), std::invalid_argument);
}
