#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "ipc/mds.hpp"

using namespace ipc;
using namespace ipc::mds;
using galois::felem;

namespace {

std::vector<std::optional<felem>> with_erasures(const std::vector<felem>& word,
                                                const std::vector<std::size_t>& erased) {
    std::vector<std::optional<felem>> out(word.begin(), word.end());
    for (auto e : erased) out[e] = std::nullopt;
    return out;
}

} // namespace

TEST_CASE("Vandermonde rows match the definition") {
    const auto gf7 = galois::Field::prime(7);
    const auto fam = make_family(gf7, 3, 3, std::vector<felem>{1, 2, 3});
    const auto& v = fam.vandermonde();
    CHECK(v.at(0, 0) == 1);
    CHECK(v.at(0, 1) == 1);
    CHECK(v.at(0, 2) == 1);
    CHECK(v.at(1, 0) == 1);
    CHECK(v.at(1, 1) == 2);
    CHECK(v.at(1, 2) == 3);
    CHECK(v.at(2, 0) == 1);
    CHECK(v.at(2, 1) == 4);
    CHECK(v.at(2, 2) == 2); // squares mod 7

    const auto dflt = make_family(gf7, 4, 2);
    CHECK(dflt.eval_points() == std::vector<felem>{0, 1, 2, 3});

    CHECK_THROWS(make_family(gf7, 9, 2));                                    // q < n
    CHECK_THROWS(make_family(gf7, 3, 2, std::vector<felem>{1, 1, 2}));       // duplicates
    CHECK_THROWS(make_family(gf7, 3, 2, std::vector<felem>{1, 2, 9}));       // out of field
}

TEST_CASE("encode evaluates the message polynomial") {
    const auto gf7 = galois::Field::prime(7);
    const auto fam = make_family(gf7, 3, 3, std::vector<felem>{1, 2, 3});

    CHECK(encode(fam, 2, std::vector<felem>{0, 0}) == std::vector<felem>{0, 0, 0});
    CHECK(encode(fam, 2, std::vector<felem>{1, 1}) == std::vector<felem>{2, 3, 4});
    CHECK_THROWS(encode(fam, 2, std::vector<felem>{1}));
    CHECK_THROWS(encode(fam, 4, std::vector<felem>{1, 1, 1, 1}));
}

TEST_CASE("erasure decoding on the worked example") {
    const auto gf7 = galois::Field::prime(7);
    const auto fam = make_family(gf7, 3, 3, std::vector<felem>{1, 2, 3});

    const std::vector<felem> cw{2, 3, 4};
    auto full = erasure_decode(fam, 2, with_erasures(cw, {}));
    CHECK(full.status == DecodeStatus::ok);
    CHECK(full.codeword == cw);

    auto one = erasure_decode(fam, 2, with_erasures(cw, {1}));
    CHECK(one.status == DecodeStatus::ok);
    CHECK(one.codeword == cw);
    CHECK(one.message == std::vector<felem>{1, 1});

    auto two = erasure_decode(fam, 2, with_erasures(cw, {1, 2}));
    CHECK(two.status == DecodeStatus::insufficient_symbols);

    auto bad = erasure_decode(fam, 2, with_erasures({2, 3, 5}, {}));
    CHECK(bad.status == DecodeStatus::not_a_codeword);
}

TEST_CASE("MDS property: any pattern with at most n-k erasures decodes, exhaustively") {
    const auto gf7 = galois::Field::prime(7);
    test::Rng rng(11);
    for (std::size_t n : {4ul, 6ul}) {
        const auto fam = make_family(gf7, n, n);
        for (std::size_t k = 0; k <= n; ++k) {
            std::vector<felem> msg(k);
            for (auto& x : msg) x = static_cast<felem>(rng.below(7));
            const auto cw = encode(fam, k, msg);
            for (std::uint32_t pat = 0; pat < (1u << n); ++pat) {
                std::vector<std::optional<felem>> rec(cw.begin(), cw.end());
                std::size_t erased = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (pat >> j & 1) {
                        rec[j] = std::nullopt;
                        ++erased;
                    }
                auto dec = erasure_decode(fam, k, rec);
                if (erased <= n - k) {
                    REQUIRE(dec.status == DecodeStatus::ok);
                    REQUIRE(dec.codeword == cw);
                } else {
                    REQUIRE(dec.status == DecodeStatus::insufficient_symbols);
                }
            }
        }
    }
}

TEST_CASE("MDS property at length 10: all 1024 patterns") {
    const auto gf11 = galois::Field::prime(11);
    const auto fam = make_family(gf11, 10, 10);
    test::Rng rng(19);
    std::vector<felem> msg(4);
    for (auto& x : msg) x = static_cast<felem>(rng.below(11));
    const auto cw = encode(fam, 4, msg);
    for (std::uint32_t pat = 0; pat < (1u << 10); ++pat) {
        std::vector<std::optional<felem>> rec(cw.begin(), cw.end());
        std::size_t erased = 0;
        for (std::size_t j = 0; j < 10; ++j)
            if (pat >> j & 1) {
                rec[j] = std::nullopt;
                ++erased;
            }
        auto dec = erasure_decode(fam, 4, rec);
        if (erased <= 6) {
            REQUIRE(dec.status == DecodeStatus::ok);
            REQUIRE(dec.codeword == cw);
        } else {
            REQUIRE(dec.status == DecodeStatus::insufficient_symbols);
        }
    }
}

TEST_CASE("minimum distance is exactly n-k+1 (enumeration)") {
    const auto gf7 = galois::Field::prime(7);
    const auto fam = make_family(gf7, 5, 5);
    for (std::size_t k : {1ul, 2ul, 3ul}) {
        std::size_t min_w = 99;
        test::for_each_codeword(gf7, fam.generator(k), [&](const auto&, const auto& cw) {
            std::size_t w = 0;
            for (auto v : cw) w += v != 0;
            if (w > 0) min_w = std::min(min_w, w);
        });
        CHECK(min_w == 5 - k + 1);
    }
}

TEST_CASE("nesting: dimension-k codewords live in the dimension-(k+1) code") {
    const auto gf8 = galois::Field::gf2e(3);
    const auto fam = make_family(gf8, 6, 6);
    test::Rng rng(5);
    for (std::size_t k = 0; k < 6; ++k) {
        for (int t = 0; t < 20; ++t) {
            std::vector<felem> msg(k);
            for (auto& x : msg) x = static_cast<felem>(rng.below(8));
            const auto cw = encode(fam, k, msg);
            CHECK(contains(fam, k + 1, cw));
        }
    }
}

TEST_CASE("scaled_code_containing: worked example over GF(7)") {
    const auto gf7 = galois::Field::prime(7);
    const auto fam = make_family(gf7, 3, 3, std::vector<felem>{1, 2, 3});
    const std::vector<std::uint8_t> target{0, 1, 1};
    const auto code = scaled_code_containing(fam, 2, target);

    // root at the zero coordinate, witness polynomial (x - 1) -> (0, 1, 2),
    // support scaled to one
    CHECK(code.points == std::vector<felem>{1, 2, 3});
    CHECK(code.scalars == std::vector<felem>{1, 1, 4});
    CHECK(code.min_distance() == 2);

    std::vector<felem> t(target.begin(), target.end());
    CHECK(code.contains(t));
}

TEST_CASE("scaled_code_containing: full-weight target and bounds") {
    const auto gf7 = galois::Field::prime(7);
    const auto fam = make_family(gf7, 4, 4);
    const std::vector<std::uint8_t> ones{1, 1, 1, 1};
    const auto code = scaled_code_containing(fam, 2, ones);
    std::vector<felem> t(ones.begin(), ones.end());
    CHECK(code.contains(t));

    CHECK_THROWS(scaled_code_containing(fam, 2, std::vector<std::uint8_t>{1, 0, 0, 0})); // w < n-k+1
}

TEST_CASE("scaled codes keep distance n-k+1 and contain their target (enumeration)") {
    const auto gf8 = galois::Field::gf2e(3);
    const auto fam = make_family(gf8, 5, 5);
    test::Rng rng(21);
    for (int t = 0; t < 25; ++t) {
        const std::size_t k = 1 + rng.below(3);
        const std::size_t w = (5 - k + 1) + rng.below(k); // in [n-k+1, n]
        std::vector<std::uint8_t> target(5, 0);
        while (std::count(target.begin(), target.end(), 1) < static_cast<long>(w))
            target[rng.below(5)] = 1;

        const auto code = scaled_code_containing(fam, k, target);
        std::vector<felem> tv(target.begin(), target.end());
        REQUIRE(code.contains(tv));

        std::size_t min_w = 99;
        test::for_each_codeword(gf8, code.generator(), [&](const auto&, const auto& cw) {
            std::size_t weight = 0;
            for (auto v : cw) weight += v != 0;
            if (weight > 0) min_w = std::min(min_w, weight);
        });
        REQUIRE(min_w == 5 - k + 1);
    }
}
