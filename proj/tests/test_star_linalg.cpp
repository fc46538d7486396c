#include <doctest.h>

#include <cmath>
#include <complex>

#include "ccrflow/random_forms.hpp"
#include "ccrflow/star_linalg.hpp"

using namespace ccrflow;
using std::complex;

namespace {

const complex<double> I(0.0, 1.0);

CovarianceForm single_mode(double mu) {
    MatrixXcd S(2, 2);
    S << 0.5, mu * I, -mu * I, 0.5;
    return CovarianceForm::make(StarSpace(2), S);
}

} // namespace

TEST_CASE("make_form accepts a real scalar form") {
    MatrixXcd S(1, 1);
    S << 1.0;
    CovarianceForm f = CovarianceForm::make(StarSpace(1), S);
    CHECK(f.real_part()(0, 0) == doctest::Approx(2.0));
    CHECK(f.sigma()(0, 0) == doctest::Approx(0.0));
}

TEST_CASE("make_form extracts sigma from the imaginary part") {
    CovarianceForm f = single_mode(0.3);
    CHECK(f.sigma()(0, 1) == doctest::Approx(0.6));
    CHECK(f.sigma()(1, 0) == doctest::Approx(-0.6));
    CHECK(f.sigma()(0, 0) == doctest::Approx(0.0));
    CHECK(f.real_part().isApprox(MatrixXd::Identity(2, 2), 1e-12));
}

TEST_CASE("make_form rejects indefinite matrices") {
    // eigenvalues 1/2 +- 0.6
    MatrixXcd S(2, 2);
    S << 0.5, 0.6 * I, -0.6 * I, 0.5;
    CHECK_THROWS_AS(CovarianceForm::make(StarSpace(2), S), NotPositive);
}

TEST_CASE("make_form rejects non-Hermitian input") {
    MatrixXcd S(2, 2);
    S << 1.0, 1.0, 0.0, 1.0;
    CHECK_THROWS_AS(CovarianceForm::make(StarSpace(2), S), NotHermitian);
}

TEST_CASE("make_form rejects dimension mismatch") {
    MatrixXcd S(2, 3);
    S.setZero();
    CHECK_THROWS_AS(CovarianceForm::make(StarSpace(2), S), DimensionMismatch);
}

TEST_CASE("ratio operator of the mu=0.3 mode has eigenvalues 0.8, 0.2") {
    CovarianceForm f = single_mode(0.3);
    RatioOperator ro = ratio_operator(f);
    // R = identity here, so M is S itself
    CHECK(ro.quotient_dim() == 2);
    CHECK(max_abs(ro.M - f.matrix()) < 1e-12);
    VectorXd spec = ratio_spectrum(f);
    CHECK(spec(0) == doctest::Approx(0.2));
    CHECK(spec(1) == doctest::Approx(0.8));
}

TEST_CASE("real forms have ratio operator 1/2 on their range") {
    MatrixXcd S(1, 1);
    S << 3.0;
    CovarianceForm f = CovarianceForm::make(StarSpace(1), S);
    RatioOperator ro = ratio_operator(f);
    CHECK(ro.quotient_dim() == 1);
    CHECK(std::abs(ro.M(0, 0) - 0.5) < 1e-14);
}

TEST_CASE("rank-one extremal form has ratio spectrum {0,1}") {
    MatrixXcd S(2, 2);
    S << 1.0, I, -I, 1.0;
    CovarianceForm f = CovarianceForm::make(StarSpace(2), S);
    VectorXd spec = ratio_spectrum(f);
    CHECK(spec(0) == doctest::Approx(0.0));
    CHECK(spec(1) == doctest::Approx(1.0));
}

TEST_CASE("conj(M) = 1 - M on random instances") {
    for (int k = 0; k < 20; ++k) {
        auto eng = seeded_engine(7, k);
        CovarianceForm f = random_form(1 + static_cast<int>(eng() % 3),
                                       static_cast<int>(eng() % 2), 0.05, 0.45, eng);
        RatioOperator ro = ratio_operator(f);
        MatrixXcd one = MatrixXcd::Identity(ro.quotient_dim(), ro.quotient_dim());
        CHECK(max_abs(ro.M.conjugate() - (one - ro.M)) < 1e-9);
    }
}

TEST_CASE("quotient coordinates reproduce the form") {
    for (int k = 0; k < 10; ++k) {
        auto eng = seeded_engine(11, k);
        CovarianceForm small = random_form(2, 1, 0.05, 0.45, eng);
        // embed into a larger space: S + conj(S) picks up a kernel
        const int n = small.dim() + 2;
        MatrixXd E = random_orthogonal(n, eng).leftCols(small.dim());
        MatrixXcd big = E.cast<complex<double>>() * small.matrix() *
                        E.transpose().cast<complex<double>>();
        CovarianceForm f = CovarianceForm::make(StarSpace(n), big);
        RatioOperator ro = ratio_operator(f);
        MatrixXcd rebuilt = ro.coord_map.transpose().cast<complex<double>>() * ro.M *
                            ro.coord_map.cast<complex<double>>();
        CHECK(max_abs(rebuilt - f.matrix()) < 1e-10 * std::max(1.0, f.matrix().norm()));
        CHECK(ro.quotient_dim() < n);
    }
}

TEST_CASE("normal form of the mu=0.3 mode") {
    SymplecticNormalForm nf = normal_form(single_mode(0.3));
    CHECK(nf.degenerate_dim == 0);
    REQUIRE(nf.mus.size() == 1);
    CHECK(nf.mus[0] == doctest::Approx(0.3));
}

TEST_CASE("normal form of a sigma=0 direction is purely degenerate") {
    MatrixXcd S(1, 1);
    S << 0.5;
    SymplecticNormalForm nf = normal_form(CovarianceForm::make(StarSpace(1), S));
    CHECK(nf.degenerate_dim == 1);
    CHECK(nf.mus.empty());
}

TEST_CASE("normal form reduces block sums blockwise") {
    MatrixXcd S = MatrixXcd::Zero(4, 4);
    S(0, 0) = S(1, 1) = S(2, 2) = S(3, 3) = 0.5;
    S(0, 1) = 0.3 * I;
    S(1, 0) = -0.3 * I;
    S(2, 3) = 0.5 * I;
    S(3, 2) = -0.5 * I;
    SymplecticNormalForm nf = normal_form(CovarianceForm::make(StarSpace(4), S));
    CHECK(nf.degenerate_dim == 0);
    REQUIRE(nf.mus.size() == 2);
    // descending order
    CHECK(nf.mus[0] == doctest::Approx(0.5));
    CHECK(nf.mus[1] == doctest::Approx(0.3));
}

TEST_CASE("normal form round trip: B^T R B = I and canonical sigma") {
    for (int k = 0; k < 10; ++k) {
        auto eng = seeded_engine(13, k);
        const int modes = 1 + static_cast<int>(eng() % 3);
        const int deg = static_cast<int>(eng() % 3);
        CovarianceForm f = random_form(modes, deg, 0.05, 0.5, eng, 3.0);
        SymplecticNormalForm nf = normal_form(f);
        const int n = f.dim();
        CHECK(static_cast<int>(nf.mus.size()) * 2 + nf.degenerate_dim == n);
        MatrixXd gram = nf.B.transpose() * f.real_part() * nf.B;
        CHECK(max_abs(MatrixXcd(gram.cast<complex<double>>()) -
                      MatrixXcd(MatrixXcd::Identity(n, n))) < 1e-10);
        MatrixXd sig = nf.B.transpose() * f.sigma() * nf.B;
        MatrixXd canon = MatrixXd::Zero(n, n);
        for (size_t j = 0; j < nf.mus.size(); ++j) {
            const int p = nf.degenerate_dim + 2 * static_cast<int>(j);
            canon(p + 1, p) = 2.0 * nf.mus[j];  // sigma(q_j, p_j) = 2 mu_j
            canon(p, p + 1) = -2.0 * nf.mus[j];
        }
        CHECK(max_abs(MatrixXcd((sig - canon).cast<complex<double>>())) < 1e-10);
    }
}

TEST_CASE("normal form refuses degenerate real part") {
    MatrixXcd S = MatrixXcd::Zero(2, 2);
    S(0, 0) = 1.0;
    CHECK_THROWS_AS(normal_form(CovarianceForm::make(StarSpace(2), S)), DegenerateRealPart);
}

TEST_CASE("classify: projection case") {
    MatrixXcd S(2, 2);
    S << 1.0, I, -I, 1.0;
    Classification c = classify(CovarianceForm::make(StarSpace(2), S));
    CHECK(c.is_extremal);
    CHECK(c.is_center_free);
    CHECK(!c.is_non_boundary);
}

TEST_CASE("classify: generic interior mode") {
    Classification c = classify(single_mode(0.3));
    CHECK(!c.is_extremal);
    CHECK(c.is_center_free);
    CHECK(c.is_non_boundary);
}

TEST_CASE("classify: central sigma=0 direction") {
    MatrixXcd S(1, 1);
    S << 0.5;
    Classification c = classify(CovarianceForm::make(StarSpace(1), S));
    CHECK(!c.is_extremal);
    CHECK(!c.is_center_free);
    CHECK(c.is_non_boundary);
}

TEST_CASE("classify agrees with the extremality residual") {
    for (int k = 0; k < 100; ++k) {
        auto eng = seeded_engine(17, k);
        const bool extremal = (k % 2 == 0);
        CovarianceForm f = extremal ? random_extremal_form(1 + static_cast<int>(eng() % 2), eng)
                                    : random_form(1 + static_cast<int>(eng() % 2), 0, 0.05, 0.45, eng);
        RatioOperator ro = ratio_operator(f);
        MatrixXcd res = ro.M * (MatrixXcd::Identity(ro.quotient_dim(), ro.quotient_dim()) - ro.M);
        const bool small = res.selfadjointView<Eigen::Lower>().operatorNorm() < 1e-8;
        CHECK(classify(f).is_extremal == small);
    }
}
