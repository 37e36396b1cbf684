#include <doctest.h>

#include "helpers.hpp"
#include "ipc/io.hpp"
#include "ipc/simulate.hpp"

using namespace ipc;
using namespace ipc::simulate;
using galois::felem;

namespace {

product::CodeSpec regular4x4() {
    return {galois::Field::prime(7), 4, 4, {3, 3, 3, 3}, {2, 2, 2, 2}};
}

ErasureMask mask_from(const std::vector<std::uint8_t>& cells, std::size_t m, std::size_t n) {
    ErasureMask mk(m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) mk.set(r, c, cells[r * n + c]);
    return mk;
}

} // namespace

TEST_CASE("counter variates are deterministic and roughly uniform") {
    CHECK(cell_hash(1, 2, 3) == cell_hash(1, 2, 3));
    CHECK(cell_hash(1, 2, 3) != cell_hash(1, 2, 4));
    CHECK(cell_hash(1, 2, 3) != cell_hash(2, 2, 3));
    double sum = 0.0;
    for (std::size_t i = 0; i < 100000; ++i) sum += u01(cell_hash(9, i, i));
    CHECK(sum / 100000.0 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("peel_decode on the worked examples") {
    const auto spec = regular4x4();

    auto clear = peel_decode(spec, ErasureMask(4, 4));
    CHECK(clear.rounds == 0);
    CHECK(clear.residual.empty());

    ErasureMask one(4, 4);
    one.set(2, 1, true);
    auto r1 = peel_decode(spec, one);
    CHECK(r1.rounds == 1);
    CHECK(r1.residual.empty());

    // 2x3 all-erased block: rows (tolerance 1) cannot clear it, columns
    // (tolerance 2) can
    ErasureMask block(4, 4);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 3; ++c) block.set(r, c, true);
    auto r2 = peel_decode(spec, block);
    CHECK(r2.residual.empty());
    CHECK(r2.rounds == 1);

    // 3x3 block exceeds both tolerances: a stopping configuration
    ErasureMask stop(4, 4);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) stop.set(r, c, true);
    auto r3 = peel_decode(spec, stop);
    CHECK(r3.residual.count() == 9);
}

TEST_CASE("peeling agrees with the full-rescan reference and is order-independent") {
    test::Rng rng(13);
    for (int t = 0; t < 300; ++t) {
        const std::size_t m = 1 + rng.below(8), n = 1 + rng.below(8);
        product::CodeSpec spec{galois::Field::gf2e(3), m, n, test::random_monotone_dims(rng, m, n),
                               test::random_monotone_dims(rng, n, m)};
        std::vector<std::uint8_t> cells(m * n);
        const double eps = rng.u01();
        for (auto& c : cells) c = rng.u01() < eps;
        const auto mask = mask_from(cells, m, n);

        const auto [ref_cells, ref_rounds] = test::reference_peel(spec, cells);
        const auto got = peel_decode(spec, mask);
        REQUIRE(got.rounds == ref_rounds);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c)
                REQUIRE(static_cast<std::uint8_t>(got.residual.get(r, c)) == ref_cells[r * n + c]);

        // confluence: sweeping columns first reaches the same fixed point
        const auto swapped = peel_decode(spec, mask, true);
        REQUIRE(swapped.residual.words == got.residual.words);

        // the residual is a stopping configuration
        for (std::size_t r = 0; r < m; ++r) {
            std::size_t cnt = 0;
            for (std::size_t c = 0; c < n; ++c) cnt += got.residual.get(r, c);
            REQUIRE((cnt == 0 || cnt > n - spec.a[r]));
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t cnt = 0;
            for (std::size_t r = 0; r < m; ++r) cnt += got.residual.get(r, c);
            REQUIRE((cnt == 0 || cnt > m - spec.b[c]));
        }
    }
}

TEST_CASE("run_sweep: saturation, floor, and monotone WER under coupling") {
    const auto spec = regular4x4();
    SimConfig cfg;
    cfg.epsilons = {0.0001, 0.2, 0.5, 0.99};
    cfg.trials = 300;
    cfg.seed = 77;
    cfg.threads = 1;
    const auto res = run_sweep(spec, cfg);
    CHECK(res.per_epsilon[0].word_errors == 0);
    CHECK(res.per_epsilon[3].wer >= 0.95);
    for (std::size_t i = 1; i < res.per_epsilon.size(); ++i)
        CHECK(res.per_epsilon[i].wer >= res.per_epsilon[i - 1].wer);
}

TEST_CASE("identical configs give bit-identical results") {
    const auto spec = regular4x4();
    SimConfig cfg;
    cfg.epsilons = {0.1, 0.3};
    cfg.trials = 500;
    cfg.seed = 2024;
    const auto a = io::sim_result_csv(run_sweep(spec, cfg));
    const auto b = io::sim_result_csv(run_sweep(spec, cfg));
    CHECK(a == b);
}

TEST_CASE("field-level mode matches mask-only statistics exactly") {
    const auto spec = regular4x4();
    SimConfig cfg;
    cfg.epsilons = {0.15, 0.35};
    cfg.trials = 60;
    cfg.seed = 5;
    auto mask_res = run_sweep(spec, cfg);
    cfg.mode = SimMode::field_level;
    auto field_res = run_sweep(spec, cfg);
    for (std::size_t i = 0; i < cfg.epsilons.size(); ++i) {
        CHECK(mask_res.per_epsilon[i].word_errors == field_res.per_epsilon[i].word_errors);
        CHECK(mask_res.per_epsilon[i].mean_residual_fraction ==
              field_res.per_epsilon[i].mean_residual_fraction);
        CHECK(mask_res.per_epsilon[i].mean_rounds == field_res.per_epsilon[i].mean_rounds);
    }
}

TEST_CASE("field_level_validate finds no mismatches") {
    auto rep = field_level_validate(regular4x4(), 200, 3);
    CHECK(rep.trials == 200);
    CHECK(rep.position_mismatches == 0);
    CHECK(rep.symbol_mismatches == 0);

    product::CodeSpec irregular{galois::Field::gf2e(3), 5, 5, {1, 2, 3, 4, 5}, {0, 2, 2, 3, 4}};
    auto rep2 = field_level_validate(irregular, 200, 4);
    CHECK(rep2.position_mismatches == 0);
    CHECK(rep2.symbol_mismatches == 0);
}

TEST_CASE("iterative field decode recovers exactly the peelable pattern") {
    const auto spec = regular4x4();
    product::ProductCode code(spec);
    const auto cw = code.encode(std::vector<felem>{6, 5, 4, 3, 2, 1});

    ErasureMask mask(4, 4);
    mask.set(0, 0, true);
    mask.set(3, 3, true);
    auto fd = iterative_field_decode(code, cw, mask);
    CHECK(fd.residual.empty());
    CHECK(fd.matrix.data == cw.data);

    // A corrupted known symbol surfaces as not-a-codeword once a component
    // decode verifies it: corrupt (0,0) and erase two cells of row 3 so the
    // row pass stays quiet and column 0 must decode past the corruption.
    auto bad = cw;
    bad.at(0, 0) = spec.field.add(bad.at(0, 0), 1);
    ErasureMask two(4, 4);
    two.set(3, 0, true);
    two.set(3, 1, true);
    CHECK_THROWS_AS(iterative_field_decode(code, bad, two), std::runtime_error);
}

TEST_CASE("run_compare shares variates and validates shapes") {
    const auto spec = regular4x4();
    std::vector<product::CodeSpec> same{spec, spec};
    SimConfig cfg;
    cfg.epsilons = {0.2, 0.4};
    cfg.trials = 200;
    cfg.seed = 10;
    const auto res = run_compare(same, cfg);
    CHECK(io::sim_result_csv(res[0]) == io::sim_result_csv(res[1]));

    std::vector<product::CodeSpec> mixed{spec,
                                         {galois::Field::prime(7), 5, 4, {3, 3, 3, 3, 3}, {2, 2, 2, 2}}};
    CHECK_THROWS(run_compare(mixed, cfg));
    SimConfig bad = cfg;
    bad.epsilons = {0.4, 0.2};
    CHECK_THROWS(run_sweep(spec, bad));
    bad.epsilons = {0.5, 1.5};
    CHECK_THROWS(run_sweep(spec, bad));
    bad.epsilons = {0.5};
    bad.trials = 0;
    CHECK_THROWS(run_sweep(spec, bad));
}

TEST_CASE("uncoupled mode draws independent masks per epsilon") {
    const auto spec = regular4x4();
    SimConfig cfg;
    cfg.epsilons = {0.3, 0.31};
    cfg.trials = 400;
    cfg.seed = 123;
    cfg.couple = false;
    const auto res = run_sweep(spec, cfg); // no coupling assertion must fire
    CHECK(res.per_epsilon.size() == 2);
}

TEST_CASE("asymptotic_validate: residuals shrink with size under the design condition") {
    const auto beta = asymptotic::Profile::linear(0.3);
    const std::vector<std::pair<std::size_t, std::size_t>> sizes{{20, 20}, {40, 40}};
    const auto rep = asymptotic_validate(beta, 0.3, 0.08, sizes, 300, 6);
    REQUIRE(rep.points.size() == 2);
    CHECK(rep.points[1].mean_residual_fraction <= rep.points[0].mean_residual_fraction);
    CHECK(rep.de_fixed_point <= 1e-6);
    const auto zero = asymptotic_validate(beta, 0.3, 0.3, sizes, 10, 6);
    CHECK(zero.points[0].mean_residual_fraction == 0.0);
}
