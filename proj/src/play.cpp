#include "pp/play.hpp"

#include <cassert>
#include <stdexcept>

namespace pp {

int AdversarialRobber::initial(const Arena& d, int cop_start) {
    const int n = d.vertex_count();
    CopMultiset cop{{cop_start}};
    int best = -1;
    std::uint32_t best_rank = 0;
    for (int r = 0; r < n; ++r) {
        if (r == cop_start) continue;
        std::uint32_t rk = tab_.rank(0, cop, r);
        if (rk == ConfigTable::kInfRank) return r;
        if (best == -1 || rk > best_rank) {
            best = r;
            best_rank = rk;
        }
    }
    return best == -1 ? cop_start : best;  // n = 1: surrender is forced
}

int AdversarialRobber::move(const Arena& d, int t, int cop_pos, int robber_pos) {
    return adversarial_move(tab_, d, t, CopMultiset{{cop_pos}}, robber_pos);
}

std::uint64_t RandomRobber::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int RandomRobber::initial(const Arena& d, int cop_start) {
    const int n = d.vertex_count();
    if (n == 1) return cop_start;
    int r = static_cast<int>(next() % static_cast<std::uint64_t>(n));
    while (r == cop_start) r = static_cast<int>(next() % static_cast<std::uint64_t>(n));
    return r;
}

int RandomRobber::move(const Arena& d, int t, int /*cop_pos*/, int robber_pos) {
    const auto& moves = d.out_list(t, robber_pos);
    return moves[static_cast<std::size_t>(next() % moves.size())];
}

Transcript play(const Arena& d, const Strategy& s, RobberSource& robber, int max_rounds) {
    const int n = d.vertex_count();
    const int p = d.period();
    if (max_rounds < 0) max_rounds = p * n * n;

    Transcript tr;
    tr.round_limit = max_rounds;

    int cop = s.start;
    int rob = robber.initial(d, cop);
    if (rob < 0 || rob >= n) throw std::runtime_error("robber start out of range");
    if (rob == cop) {
        tr.rounds.push_back({0, 0, cop, rob});
        tr.capture_round = 0;
        return tr;
    }

    const int journey_rounds = static_cast<int>(s.journey.size()) - 1;
    for (int round = 0; round < max_rounds; ++round) {
        int t = round % p;
        tr.rounds.push_back({round, t, cop, rob});

        int next_cop;
        if (round < journey_rounds) {
            next_cop = s.journey[static_cast<std::size_t>(round) + 1];
        } else {
            auto it = s.rho.find({t, cop, rob});
            if (it == s.rho.end())
                throw std::logic_error("strategy has no move for a reached pursuit configuration");
            next_cop = it->second;
        }
        assert(d.has_out(t, cop, next_cop));
        cop = next_cop;
        if (cop == rob) {
            tr.capture_round = round;
            return tr;
        }

        int reply = robber.move(d, t, cop, rob);
        while (!d.has_out(t, rob, reply)) reply = robber.move(d, t, cop, rob);
        rob = reply;
        if (rob == cop) {
            tr.capture_round = round;
            return tr;
        }
    }
    return tr;
}

}  // namespace pp
