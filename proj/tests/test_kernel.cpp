#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ampcalc/kernel.hpp"
#include "ampcalc/random.hpp"
#include "test_support.hpp"

using namespace ampcalc;
using test_support::thrown_code;

TEST_CASE("identity kernel is the identity at every time") {
    const StepKernel k = identity_kernel(3);
    CHECK(k.num_sites() == 3);
    CHECK(k.is_time_invariant());
    CHECK((k.at(-5) - Matrix::Identity(3, 3)).norm() == 0.0);
    CHECK((k.at(17) - Matrix::Identity(3, 3)).norm() == 0.0);
}

TEST_CASE("hadamard kernel squares to the identity") {
    const StepKernel k = hadamard_kernel();
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(k.at(0)(0, 0) == Complex(h, 0.0));
    CHECK(k.at(0)(1, 1) == Complex(-h, 0.0));
    CHECK((k.at(0) * k.at(0) - Matrix::Identity(2, 2)).norm() < 1e-15);
}

TEST_CASE("dft kernel is unitary with the expected phases") {
    const StepKernel k = dft_kernel(4);
    const Matrix& m = k.at(0);
    CHECK((m.adjoint() * m - Matrix::Identity(4, 4)).norm() < 1e-14);
    CHECK(std::abs(m(0, 0) - Complex(0.5, 0.0)) < 1e-15);
    // row 1, col 1: exp(-2 pi i / 4) / 2 = -i/2
    CHECK(std::abs(m(1, 1) - Complex(0.0, -0.5)) < 1e-15);
    // row 2, col 2: exp(-2 pi i * 4 / 4) / 2 = 1/2; row 1, col 2 is -1/2
    CHECK(std::abs(m(2, 2) - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(m(1, 2) - Complex(-0.5, 0.0)) < 1e-15);

    const StepKernel trivial = dft_kernel(1);
    CHECK(trivial.at(0)(0, 0) == Complex(1.0, 0.0));
}

TEST_CASE("random kernels are deterministic per seed and disk-bounded") {
    Rng a(99), b(99), c(100);
    const Matrix ma = random_kernel(3, a).at(0);
    const Matrix mb = random_kernel(3, b).at(0);
    const Matrix mc = random_kernel(3, c).at(0);
    CHECK((ma - mb).norm() == 0.0);
    CHECK((ma - mc).norm() != 0.0);
    const double radius = 1.0 / std::sqrt(3.0);
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col) CHECK(std::abs(ma(r, col)) <= radius);
}

TEST_CASE("step kernels validate their blocks") {
    CHECK(thrown_code([] { StepKernel::invariant(Matrix(0, 0)); }) == ErrorCode::BadKernel);
    CHECK(thrown_code([] { StepKernel::invariant(Matrix(2, 3)); }) == ErrorCode::BadKernel);
    CHECK(thrown_code([] { StepKernel::time_varying({}); }) == ErrorCode::BadKernel);
    CHECK(thrown_code([] {
              StepKernel::time_varying(
                  {{0, Matrix::Identity(2, 2)}, {1, Matrix::Identity(3, 3)}});
          }) == ErrorCode::BadKernel);

    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 1) = Complex(std::nan(""), 0.0);
    CHECK(thrown_code([&] { StepKernel::invariant(bad); }) == ErrorCode::BadKernel);
}

TEST_CASE("time-varying kernels serve exactly their listed steps") {
    const StepKernel k = StepKernel::time_varying(
        {{0, Matrix::Identity(2, 2)}, {1, 2.0 * Matrix::Identity(2, 2)}});
    CHECK_FALSE(k.is_time_invariant());
    CHECK(k.at(1)(0, 0) == Complex(2.0, 0.0));
    CHECK(thrown_code([&] { k.at(2); }) == ErrorCode::BadKernel);
}

TEST_CASE("kernel text round trips") {
    SUBCASE("time invariant") {
        Rng rng(7);
        const StepKernel k = random_kernel(3, rng);
        std::istringstream in(format_kernel(k));
        const StepKernel back = read_kernel(in);
        CHECK(back.is_time_invariant());
        CHECK((back.at(0) - k.at(0)).norm() == 0.0);
    }
    SUBCASE("time varying") {
        Rng rng(8);
        const StepKernel k = StepKernel::time_varying(
            {{-1, random_kernel(2, rng).at(0)}, {0, random_kernel(2, rng).at(0)}});
        std::istringstream in(format_kernel(k));
        const StepKernel back = read_kernel(in);
        CHECK_FALSE(back.is_time_invariant());
        CHECK((back.at(-1) - k.at(-1)).norm() == 0.0);
        CHECK((back.at(0) - k.at(0)).norm() == 0.0);
        CHECK(thrown_code([&] { back.at(1); }) == ErrorCode::BadKernel);
    }
}

TEST_CASE("read_kernel reports malformed input") {
    auto read = [](const std::string& text) {
        std::istringstream in(text);
        return read_kernel(in);
    };
    CHECK(thrown_code([&] { read(""); }) == ErrorCode::BadInput);
    CHECK(thrown_code([&] { read("x\n1+0i\n"); }) == ErrorCode::BadInput);
    CHECK(thrown_code([&] { read("0\n"); }) == ErrorCode::BadInput);
    CHECK(thrown_code([&] { read("2\n1+0i 0+0i\n"); }) == ErrorCode::BadInput);
    CHECK(thrown_code([&] { read("1\n1+0i 2+0i\n"); }) == ErrorCode::BadInput);
    CHECK(thrown_code([&] { read("1\n1+0i\n5+0i\n"); }) == ErrorCode::BadInput);
    CHECK(thrown_code([&] { read("1\nt=0\n1+0i\nt=0\n2+0i\n"); }) == ErrorCode::BadInput);
    CHECK(thrown_code([&] { read("1\nt=zero\n1+0i\n"); }) == ErrorCode::BadInput);
}

TEST_CASE("read_matrix_file round trips through format_kernel text") {
    Rng rng(11);
    const StepKernel k = random_kernel(4, rng);
    const std::string path = "kernel_roundtrip_tmp.txt";
    {
        std::ofstream out(path);
        out << format_kernel(k);
    }
    const Matrix m = read_matrix_file(path);
    CHECK((m - k.at(0)).norm() == 0.0);
    std::remove(path.c_str());

    CHECK(thrown_code([] { read_matrix_file("no_such_file_anywhere.txt"); }) ==
          ErrorCode::BadInput);
}
