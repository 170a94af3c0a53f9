#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <tuple>

#include "fixtures.hpp"
#include "pp/oracle.hpp"
#include "pp/periodic_graph.hpp"

using namespace pp;

namespace {

// Second, deliberately naive referee: depth-limited game-tree search, one
// cop. Used once here to validate the fixpoint table on tiny instances.
struct MiniOracle {
    const Arena& d;
    std::map<std::tuple<int, int, int, int>, bool> memo;

    bool copwin(int t, int c, int r, int depth) {
        if (r == c) return true;
        if (depth == 0) return false;
        auto key = std::make_tuple(t % d.period(), c, r, depth);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        int tm = t % d.period();
        bool win = false;
        for (int c2 : d.out_list(tm, c)) {
            if (c2 == r) {
                win = true;
                break;
            }
            bool all = true;
            for (int r2 : d.out_list(tm, r))
                if (!copwin(t + 1, c2, r2, depth - 1)) {
                    all = false;
                    break;
                }
            if (all) {
                win = true;
                break;
            }
        }
        memo[key] = win;
        return win;
    }
};

void check_against_mini(const PeriodicGraph& g) {
    Arena d(g);
    const int n = d.vertex_count();
    const int p = d.period();
    ConfigTable tab = copwin_configs(d, 1);
    MiniOracle mini{d, {}};
    int depth = p * n * n;
    for (int t = 0; t < p; ++t)
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) {
                CAPTURE(t);
                CAPTURE(c);
                CAPTURE(r);
                CHECK(tab.copwin(t, CopMultiset{{c}}, r) == mini.copwin(t, c, r, depth));
            }
}

}  // namespace

TEST_CASE("co-located configurations are captures with rank zero") {
    Arena d(fixtures::rp3());
    ConfigTable tab = copwin_configs(d, 1);
    for (int v = 0; v < 3; ++v) CHECK(tab.rank(0, CopMultiset{{v}}, v) == 0);
}

TEST_CASE("directed 3-cycle: distance one wins, distance two never does") {
    Arena d(fixtures::dicyc3());
    ConfigTable tab = copwin_configs(d, 1);
    for (int c = 0; c < 3; ++c) {
        CHECK(tab.copwin(0, CopMultiset{{c}}, (c + 1) % 3));
        CHECK_FALSE(tab.copwin(0, CopMultiset{{c}}, (c + 2) % 3));
    }
    CHECK_FALSE(oracle_decide(d, 1));
}

TEST_CASE("reflexive 4-cycle needs two cops") {
    Arena d(fixtures::rc4());
    CHECK_FALSE(oracle_decide(d, 1));
    CHECK(oracle_decide(d, 2));

    ConfigTable tab1 = copwin_configs(d, 1);
    for (int x = 0; x < 4; ++x) {
        bool all = true;
        for (int r = 0; r < 4; ++r)
            if (!tab1.copwin(0, CopMultiset{{x}}, r)) all = false;
        CHECK_FALSE(all);
    }
    ConfigTable tab2 = copwin_configs(d, 2);
    for (int r = 0; r < 4; ++r) CHECK(tab2.copwin(0, CopMultiset{{0, 2}}, r));
}

TEST_CASE("single vertex is a forced win") {
    Arena d(fixtures::single());
    CHECK(oracle_decide(d, 1));
}

TEST_CASE("fixpoint table matches exhaustive game-tree search on tiny instances") {
    check_against_mini(fixtures::swap2());
    check_against_mini(fixtures::rp3());
    check_against_mini(fixtures::dicyc3());
    check_against_mini(fixtures::per2());
    check_against_mini(fixtures::per_disc());
    check_against_mini(fixtures::single());
    check_against_mini(fixtures::rk2());
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        int n = 2 + static_cast<int>(seed % 2);
        int p = 1 + static_cast<int>(seed % 2);
        check_against_mini(gen_random(n, p, static_cast<int>(seed % 3), seed));
    }
}

TEST_CASE("identical inputs produce identical tables and ranks") {
    Arena d(gen_random(5, 3, 1, 99));
    ConfigTable a = copwin_configs(d, 1);
    ConfigTable b = copwin_configs(d, 1);
    for (int t = 0; t < a.p(); ++t)
        for (std::uint64_t c = 0; c < a.mset_count(); ++c)
            for (int r = 0; r < a.n(); ++r) CHECK(a.rank(t, c, r) == b.rank(t, c, r));
}

TEST_CASE("an extra cop never hurts") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        PeriodicGraph g = gen_random(4, 2, 1, 500 + seed);
        Arena d(g);
        ConfigTable t1 = copwin_configs(d, 1);
        ConfigTable t2 = copwin_configs(d, 2);
        for (int t = 0; t < d.period(); ++t)
            for (int c = 0; c < 4; ++c)
                for (int r = 0; r < 4; ++r) {
                    if (!t1.copwin(t, CopMultiset{{c}}, r)) continue;
                    for (int x = 0; x < 4; ++x) {
                        CopMultiset both{{std::min(c, x), std::max(c, x)}};
                        CAPTURE(t);
                        CAPTURE(c);
                        CAPTURE(x);
                        CAPTURE(r);
                        CHECK(t2.copwin(t, both, r));
                    }
                }
    }
}

TEST_CASE("adversarial robber keeps its distance on the directed 3-cycle") {
    Arena d(fixtures::dicyc3());
    ConfigTable tab = copwin_configs(d, 1);
    for (int c = 0; c < 3; ++c) {
        // After the cop moved to c+1, a robber on c+2 slips to c, staying two
        // apart forever.
        int moved_cop = (c + 1) % 3;
        int robber = (c + 2) % 3;
        int reply = adversarial_move(tab, d, 0, CopMultiset{{moved_cop}}, robber);
        CHECK(reply == c % 3);
        CHECK_FALSE(tab.copwin(0, CopMultiset{{moved_cop}}, reply));
    }
}

TEST_CASE("adversarial robber maximizes the successor rank when trapped") {
    // On the reflexive 2-clique every reply loses; surviving one more round
    // (rank 1) beats walking onto the cop (rank 0).
    Arena d(fixtures::rk2());
    ConfigTable tab = copwin_configs(d, 1);
    CHECK(tab.rank(0, CopMultiset{{0}}, 0) == 0);
    CHECK(tab.rank(0, CopMultiset{{0}}, 1) == 1);
    CHECK(adversarial_move(tab, d, 0, CopMultiset{{0}}, 1) == 1);
}

TEST_CASE("adversarial move agrees with a direct argmax on random instances") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        PeriodicGraph g = gen_random(5, 2, 1, 700 + seed);
        Arena d(g);
        ConfigTable tab = copwin_configs(d, 1);
        for (int t = 0; t < d.period(); ++t)
            for (int c = 0; c < 5; ++c)
                for (int r = 0; r < 5; ++r) {
                    if (r == c) continue;
                    int got = adversarial_move(tab, d, t, CopMultiset{{c}}, r);
                    int tp1 = (t + 1) % d.period();
                    // Expected: smallest escape, else smallest rank-maximizer.
                    int expect = -1;
                    std::uint32_t best = 0;
                    for (int r2 : d.out_list(t, r)) {
                        std::uint32_t rk = tab.rank(tp1, CopMultiset{{c}}, r2);
                        if (rk == ConfigTable::kInfRank) {
                            expect = r2;
                            break;
                        }
                        if (expect == -1 || rk > best) {
                            expect = r2;
                            best = rk;
                        }
                    }
                    CHECK(got == expect);
                }
    }
}

TEST_CASE("state spaces beyond the budget are rejected") {
    Arena d(fixtures::rc4());
    CHECK_THROWS_AS(copwin_configs(d, 2, 10), budget_error);
    CHECK_THROWS_AS(copwin_configs(d, 30, 1000), budget_error);
}
