#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "ff.hpp"
#include "rng.hpp"

using namespace blockeq;
using ff::Matrix;

namespace {

Matrix fromRows(unsigned p, std::vector<std::vector<int>> rows) {
    size_t nc = rows.empty() ? 0 : rows[0].size();
    Matrix m(p, rows.size(), nc);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < nc; ++c)
            m.set(r, c, uint8_t(((rows[r][c] % int(p)) + int(p)) % int(p)));
    return m;
}

Matrix randomMatrix(unsigned p, size_t r, size_t c, Rng& rng) {
    Matrix m(p, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j)
            m.set(i, j, rng.fieldElement(p));
    return m;
}

} // namespace

TEST_CASE("rref on identity and zero") {
    Matrix id = Matrix::identity(5, 3);
    auto r = ff::rref(id);
    CHECK(r.rank == 3);
    CHECK(r.reduced == id);

    Matrix z(5, 2, 4);
    auto rz = ff::rref(z);
    CHECK(rz.rank == 0);
    CHECK(rz.reduced.rows() == 0);
}

TEST_CASE("rref hand example over GF(5)") {
    Matrix m = fromRows(5, {{1, 2}, {2, 4}});
    auto r = ff::rref(m);
    CHECK(r.rank == 1);
    CHECK(r.reduced == fromRows(5, {{1, 2}}));
}

TEST_CASE("nullspace examples") {
    CHECK(ff::nullspaceBasis(Matrix::identity(5, 4)).rows() == 0);
    Matrix z(5, 1, 3);
    CHECK(ff::nullspaceBasis(z).rows() == 3);

    Matrix m = fromRows(5, {{1, 2}, {2, 4}});
    Matrix ns = ff::nullspaceBasis(m);
    REQUIRE(ns.rows() == 1);
    // x + 2y = 0 over GF(5): (3, 1) up to scalar
    for (size_t i = 0; i < m.rows(); ++i) {
        int acc = 0;
        for (size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * ns.at(0, j);
        CHECK(acc % 5 == 0);
    }
}

TEST_CASE("rank(M) = rank(M^T), nullity + rank = ncols (random battery)") {
    Rng rng(12345);
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        for (int t = 0; t < 8; ++t) {
            Matrix m = randomMatrix(p, 5 + rng.below(6), 5 + rng.below(6), rng);
            size_t rk = ff::rank(m);
            CHECK(rk == ff::rank(m.transpose()));
            CHECK(ff::nullspaceBasis(m).rows() + rk == m.cols());
        }
    }
}

TEST_CASE("kronecker basics and rank multiplicativity") {
    Matrix a = fromRows(5, {{2}});
    Matrix b = fromRows(5, {{3}});
    CHECK(a.kronecker(b) == fromRows(5, {{1}})); // 6 mod 5

    Matrix c = fromRows(5, {{1, 2}, {0, 1}});
    CHECK(c.kronecker(Matrix::identity(5, 1)) == c);

    Rng rng(99);
    for (int t = 0; t < 6; ++t) {
        Matrix x = randomMatrix(5, 3, 3, rng);
        Matrix y = randomMatrix(5, 3, 3, rng);
        CHECK(ff::rank(x.kronecker(y)) == ff::rank(x) * ff::rank(y));
    }
}

TEST_CASE("kronecker modulus mismatch is an error") {
    Matrix a = Matrix::identity(5, 2);
    Matrix b = Matrix::identity(3, 2);
    CHECK_THROWS(a.kronecker(b));
}

TEST_CASE("spinSpace examples") {
    // C2 swapping coordinates of GF(5)^2
    Matrix swap = fromRows(5, {{0, 1}, {1, 0}});
    Matrix seed = fromRows(5, {{1, 0}});
    Matrix span = ff::spinSpace(seed, {swap});
    CHECK(span.rows() == 2);

    // seed = zero vector -> empty basis
    Matrix zseed(5, 1, 2);
    CHECK(ff::spinSpace(zseed, {swap}).rows() == 0);

    // full basis seed -> full space
    CHECK(ff::spinSpace(Matrix::identity(5, 2), {swap}).rows() == 2);

    // idempotence: spinning the result returns the same row space
    Matrix again = ff::spinSpace(span, {swap});
    CHECK(again == span);
}

TEST_CASE("matrix inverse round trip") {
    Rng rng(7);
    for (unsigned p : {2u, 5u, 13u}) {
        for (int t = 0; t < 10; ++t) {
            Matrix m = randomMatrix(p, 6, 6, rng);
            auto inv = ff::inverse(m);
            if (!inv) continue;
            CHECK(m.multiply(*inv).isIdentity());
        }
    }
}

TEST_CASE("meataxe text round trip is byte stable") {
    Rng rng(42);
    for (unsigned p : {2u, 5u, 11u}) {
        Matrix m = randomMatrix(p, 4, 7, rng);
        std::string s = ff::toMeatAxeString(m);
        Matrix back = ff::matrixFromString(s);
        CHECK(back == m);
        CHECK(ff::toMeatAxeString(back) == s);
    }
}

TEST_CASE("solveLeft") {
    Rng rng(5);
    Matrix a = randomMatrix(5, 4, 6, rng);
    ff::RowVec x0 = {1, 2, 3, 4};
    // b = x0 * a
    ff::RowVec b(6, 0);
    for (size_t i = 0; i < 4; ++i)
        ff::addMulRow(b.data(), a.row(i), 6, x0[i], 5);
    auto x = ff::solveLeft(a, b);
    REQUIRE(x.has_value());
    ff::RowVec b2(6, 0);
    for (size_t i = 0; i < 4; ++i)
        ff::addMulRow(b2.data(), a.row(i), 6, (*x)[i], 5);
    CHECK(b2 == b);
}
