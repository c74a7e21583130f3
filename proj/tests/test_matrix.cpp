#include "doctest.h"

#include "cdc/matrix.hpp"

#include <random>
#include <stdexcept>

using namespace cdc;

namespace {

FqMatrix random_matrix(const FieldPtr& k, std::size_t rows, std::size_t cols,
                       std::mt19937_64& rng) {
    FqMatrix m(k, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, static_cast<FieldElem>(rng() % k->size()));
    return m;
}

}  // namespace

TEST_CASE("rref of identity and zero") {
    auto f2 = Field::gf(2, 1);
    auto id = FqMatrix::identity(f2, 3);
    RrefResult r = rref(id);
    CHECK(r.rank == 3);
    CHECK(r.matrix == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

    FqMatrix z(f2, 2, 4);
    RrefResult rz = rref(z);
    CHECK(rz.rank == 0);
    CHECK(rz.pivots.empty());
    CHECK(rref_basis(z).rows() == 0);
}

TEST_CASE("rref of rank-deficient matrix") {
    auto f2 = Field::gf(2, 1);
    FqMatrix m(f2, 2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    m.set(1, 1, 1);
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});
    FqMatrix b = rref_basis(m);
    CHECK(b.rows() == 1);
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(0, 1) == 1);
}

TEST_CASE("rref is idempotent and canonical under row mixing") {
    std::mt19937_64 rng(123);
    for (auto spec : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
        auto k = Field::gf(spec.first, spec.second);
        for (int trial = 0; trial < 100; ++trial) {
            FqMatrix m = random_matrix(k, 3, 5, rng);
            FqMatrix b = rref_basis(m);
            CHECK(rref_basis(b) == b);
            // multiply by a random invertible T: row-mix repeatedly
            FqMatrix mixed = m;
            for (int step = 0; step < 6; ++step) {
                std::size_t i = rng() % 3, j = rng() % 3;
                if (i == j) continue;
                FieldElem c = static_cast<FieldElem>(1 + rng() % (k->size() - 1));
                for (std::size_t col = 0; col < 5; ++col)
                    mixed.set(i, col, k->add(mixed.at(i, col), k->mul(c, mixed.at(j, col))));
            }
            CHECK(rref_basis(mixed) == b);
        }
    }
}

TEST_CASE("stack_rank basics") {
    auto f2 = Field::gf(2, 1);
    auto i2 = FqMatrix::identity(f2, 2);
    CHECK(stack_rank(i2, i2) == 2);
    FqMatrix z(f2, 2, 2);
    CHECK(stack_rank(i2, z) == 2);
    FqMatrix e1(f2, 1, 2), e2(f2, 1, 2);
    e1.set(0, 0, 1);
    e2.set(0, 1, 1);
    CHECK(stack_rank(e1, e2) == 2);
    FqMatrix wide(f2, 1, 3);
    CHECK_THROWS_AS((void)stack_rank(i2, wide), std::invalid_argument);
}

TEST_CASE("stack_rank bounds") {
    std::mt19937_64 rng(5);
    auto f3 = Field::gf(3, 1);
    for (int trial = 0; trial < 200; ++trial) {
        FqMatrix a = random_matrix(f3, 2, 4, rng);
        FqMatrix b = random_matrix(f3, 3, 4, rng);
        std::size_t ra = rank_of(a), rb = rank_of(b), s = stack_rank(a, b);
        CHECK(s >= std::max(ra, rb));
        CHECK(s <= ra + rb);
    }
}

TEST_CASE("packed GF(2) kernels agree with generic elimination") {
    std::mt19937_64 rng(99);
    auto f2 = Field::gf(2, 1);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 12;
        FqMatrix m = random_matrix(f2, rows, cols, rng);
        CHECK(rank_of(m) == rref(m).rank);
        FqMatrix b = random_matrix(f2, 1 + rng() % 6, cols, rng);
        CHECK(stack_rank(m, b) == rref(FqMatrix::vconcat(m, b)).rank);
    }
}

TEST_CASE("zero-dimension shapes") {
    auto f2 = Field::gf(2, 1);
    FqMatrix empty_rows(f2, 0, 3);
    FqMatrix some(f2, 2, 3);
    some.set(0, 0, 1);
    CHECK(rank_of(empty_rows) == 0);
    CHECK(stack_rank(empty_rows, some) == 1);
    FqMatrix joined = FqMatrix::vconcat(empty_rows, some);
    CHECK(joined.rows() == 2);
    FqMatrix empty_cols(f2, 2, 0);
    CHECK(rank_of(empty_cols) == 0);
    FqMatrix h = FqMatrix::hconcat(empty_cols, some);
    CHECK(h.cols() == 3);
}
