#include "doctest.h"

#include "cdc/errors.hpp"
#include "cdc/rank_metric.hpp"

#include <map>
#include <random>

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

unsigned min_pairwise_rank_distance(const MrdCode& code) {
    std::uint64_t total = code.size_u64();
    unsigned best = code.m() + code.n();
    for (std::uint64_t i = 0; i < total; ++i) {
        FqMatrix wi = code.encode_index(i);
        for (std::uint64_t j = i + 1; j < total; ++j)
            best = std::min(best, rank_distance(wi, code.encode_index(j)));
    }
    return best;
}

}  // namespace

TEST_CASE("rank distance basics") {
    auto f2 = Field::gf(2, 1);
    auto i2 = FqMatrix::identity(f2, 2);
    FqMatrix z(f2, 2, 2);
    CHECK(rank_distance(i2, i2) == 0);
    CHECK(rank_distance(i2, z) == 2);
    // rank-1 difference via an outer product
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        FqMatrix c = random_matrix(f2, 3, 4, rng);
        FqMatrix d = c;
        std::uint32_t u = 1 + rng() % 7, v = 1 + rng() % 15;
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 4; ++j)
                if (((u >> i) & 1) && ((v >> j) & 1))
                    d.set(i, j, f2->add(d.at(i, j), 1));
        CHECK(rank_distance(c, d) == 1);
    }
    FqMatrix bad(f2, 2, 3);
    CHECK_THROWS_AS((void)rank_distance(i2, bad), std::invalid_argument);
}

TEST_CASE("rank weight counts N_R") {
    CHECK(nr(2, 2, 2, 1) == 9);
    CHECK(vr(2, 2, 2, 0) == 1);
    CHECK(vr(2, 2, 2, 2) == 16);
    // sum over d equals q^{mn}, and matches a brute-force histogram
    for (auto [q, m, n] : {std::tuple<unsigned, unsigned, unsigned>{2, 2, 2},
                           {2, 3, 2},
                           {3, 2, 2},
                           {2, 4, 2},
                           {2, 3, 3}}) {
        auto k = Field::gf(q, 1);
        Int total = 0;
        for (unsigned d = 0; d <= std::min(m, n); ++d) total += nr(q, m, n, d);
        CHECK(total == int_pow(q, static_cast<std::uint64_t>(m) * n));
        std::map<unsigned, std::uint64_t> hist;
        std::uint64_t count = to_u64(int_pow(q, static_cast<std::uint64_t>(m) * n));
        for (std::uint64_t i = 0; i < count; ++i)
            ++hist[static_cast<unsigned>(rank_of(matrix_from_index(k, m, n, i)))];
        for (unsigned d = 0; d <= std::min(m, n); ++d)
            CHECK(nr(q, m, n, d) == Int(static_cast<unsigned long>(hist[d])));
    }
}

TEST_CASE("MRD cardinality and minimum distance") {
    auto f2 = Field::gf(2, 1);
    for (auto [m, n, d] : {std::tuple<unsigned, unsigned, unsigned>{2, 2, 2},
                           {3, 2, 2},
                           {4, 2, 2},
                           {3, 3, 2},
                           {3, 3, 3},
                           {2, 3, 2},
                           {2, 4, 2}}) {
        MrdCode code = MrdCode::build(f2, m, n, d);
        Int expect = int_pow(2, static_cast<std::uint64_t>(m) * (n - d + 1));
        Int other = int_pow(2, static_cast<std::uint64_t>(n) * (m - d + 1));
        CHECK(code.cardinality() == (expect < other ? expect : other));
        CHECK(min_pairwise_rank_distance(code) == d);
    }
    CHECK(MrdCode::build(f2, 4, 2, 2).size_u64() == 16);
    CHECK_THROWS_AS((void)MrdCode::build(f2, 2, 2, 3), std::invalid_argument);
}

TEST_CASE("d = 1 MRD code is the whole space") {
    auto f2 = Field::gf(2, 1);
    MrdCode code = MrdCode::build(f2, 3, 2, 1);
    CHECK(code.cardinality() == 64);
    // sampled membership: random matrices decode to themselves at radius 0
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        FqMatrix r = random_matrix(f2, 3, 2, rng);
        auto dec = code.decode_bounded(r);
        REQUIRE(dec.has_value());
        CHECK(*dec == r);
    }
}

TEST_CASE("encode is a bijection onto codewords at pairwise distance >= d") {
    auto f2 = Field::gf(2, 1);
    MrdCode code = MrdCode::build(f2, 3, 2, 2);
    std::uint64_t total = code.size_u64();
    CHECK(total == 8);
    std::vector<FqMatrix> words;
    for (std::uint64_t i = 0; i < total; ++i) words.push_back(code.encode_index(i));
    CHECK(words[0].is_zero());
    for (std::uint64_t i = 0; i < total; ++i)
        for (std::uint64_t j = i + 1; j < total; ++j)
            CHECK(rank_distance(words[i], words[j]) >= 2);
}

TEST_CASE("bounded decoder: correction within radius, on both orientations") {
    std::mt19937_64 rng(2718);
    auto f2 = Field::gf(2, 1);
    auto f3 = Field::gf(3, 1);
    for (auto [base, m, n, d] : {std::tuple<FieldPtr, unsigned, unsigned, unsigned>
                                     {f2, 4, 2, 2},
                                 {f2, 3, 3, 3},
                                 {f2, 4, 3, 3},
                                 {f2, 2, 4, 2},   // transposed
                                 {f2, 3, 4, 3},   // transposed
                                 {f3, 3, 2, 2}}) {
        MrdCode code = MrdCode::build(base, m, n, d);
        unsigned t = (d - 1) / 2;
        for (int trial = 0; trial < 60; ++trial) {
            FqMatrix sent = code.encode_index(rng() % code.size_u64());
            // inject an error of rank exactly e <= t
            unsigned e = t == 0 ? 0 : rng() % (t + 1);
            FqMatrix err(base, m, n);
            for (unsigned round = 0; round < e; ++round) {
                // add a random outer product; retry until the rank climbs
                FqMatrix prev = err;
                for (;;) {
                    std::vector<FieldElem> u(m), v(n);
                    for (auto& x : u) x = static_cast<FieldElem>(rng() % base->size());
                    for (auto& x : v) x = static_cast<FieldElem>(rng() % base->size());
                    err = prev;
                    for (unsigned i = 0; i < m; ++i)
                        for (unsigned j = 0; j < n; ++j)
                            err.set(i, j, base->add(err.at(i, j), base->mul(u[i], v[j])));
                    if (rank_of(err) == round + 1) break;
                }
            }
            FqMatrix received(base, m, n);
            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 0; j < n; ++j)
                    received.set(i, j, base->add(sent.at(i, j), err.at(i, j)));
            auto dec = code.decode_bounded(received);
            REQUIRE(dec.has_value());
            CHECK(*dec == sent);
        }
    }
}

TEST_CASE("bounded decoder soundness vs exhaustive search") {
    auto f2 = Field::gf(2, 1);
    MrdCode code = MrdCode::build(f2, 4, 2, 2);
    unsigned t = (code.d() - 1) / 2;
    for (std::uint64_t idx = 0; idx < 256; ++idx) {
        FqMatrix r = matrix_from_index(f2, 4, 2, idx);
        auto dec = code.decode_bounded(r);
        auto oracle = nearest_mrd_codeword(code, r, t);
        if (oracle) {
            REQUIRE(dec.has_value());
            CHECK(*dec == *oracle);
        } else {
            CHECK(!dec.has_value());
        }
        if (dec) CHECK(rank_distance(*dec, r) <= t);
    }
}

TEST_CASE("rank covering radius") {
    auto f2 = Field::gf(2, 1);
    RankCodebook whole{f2, 2, 2, {}};
    for (std::uint64_t i = 0; i < 16; ++i) whole.words.push_back(matrix_from_index(f2, 2, 2, i));
    CHECK(rank_covering_radius(whole) == 0);

    RankCodebook zero{f2, 2, 2, {FqMatrix(f2, 2, 2)}};
    CHECK(rank_covering_radius(zero) == 2);

    MrdCode mrd = MrdCode::build(f2, 2, 2, 2);
    RankCodebook mrd_book{f2, 2, 2, {}};
    for (std::uint64_t i = 0; i < mrd.size_u64(); ++i)
        mrd_book.words.push_back(mrd.encode_index(i));
    CHECK(rank_covering_radius(mrd_book) == 1);
}

TEST_CASE("greedy rank covering") {
    auto f2 = Field::gf(2, 1);
    // rho = min(m,n): a single word suffices
    RankCodebook one = greedy_rank_covering(f2, 2, 2, 2);
    CHECK(one.words.size() == 1);
    // rho = 0: the whole space
    RankCodebook all = greedy_rank_covering(f2, 2, 2, 0);
    CHECK(all.words.size() == 16);

    RankCodebook book = greedy_rank_covering(f2, 2, 2, 1);
    CHECK(book.words.size() <= 4);
    CHECK(book.words.size() >= 2);  // sphere covering: 16/10
    CHECK(rank_covering_radius(book) <= 1);

    // determinism
    RankCodebook again = greedy_rank_covering(f2, 2, 2, 1);
    REQUIRE(again.words.size() == book.words.size());
    for (std::size_t i = 0; i < book.words.size(); ++i) CHECK(again.words[i] == book.words[i]);
}

TEST_CASE("exact covering search and K_R symmetry") {
    auto f2 = Field::gf(2, 1);
    RankCodebook a = exact_rank_covering(f2, 2, 2, 1);
    CHECK(rank_covering_radius(a) <= 1);
    RankCodebook b = exact_rank_covering(f2, 3, 2, 1);
    RankCodebook c = exact_rank_covering(f2, 2, 3, 1);
    CHECK(rank_covering_radius(b) <= 1);
    CHECK(rank_covering_radius(c) <= 1);
    CHECK(b.words.size() == c.words.size());  // K_R(q^m,n,rho) = K_R(q^n,m,rho)
    // greedy sizes are upper bounds for the exact minima
    CHECK(a.words.size() <= greedy_rank_covering(f2, 2, 2, 1).words.size());
}
