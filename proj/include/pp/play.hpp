#pragma once

// Game simulation for a single cop: the cop follows an extracted strategy,
// the robber is pluggable. Each round the cop moves first; capture happens
// when the cop lands on the robber's vertex or the robber steps onto the
// cop's.

#include <cstdint>
#include <optional>
#include <vector>

#include "pp/arena.hpp"
#include "pp/oracle.hpp"
#include "pp/solver.hpp"

namespace pp {

class RobberSource {
public:
    virtual ~RobberSource() = default;
    // Starting vertex; choosing the cop's vertex is surrender.
    virtual int initial(const Arena& d, int cop_start) = 0;
    // Reply after the cop's move in a slice-t round. An illegal reply is
    // rejected and the source is asked again.
    virtual int move(const Arena& d, int t, int cop_pos, int robber_pos) = 0;
};

// Table-driven adversary: escapes to a losing-for-the-cop successor when one
// exists, otherwise drags the game out by maximizing the successor rank.
class AdversarialRobber : public RobberSource {
public:
    explicit AdversarialRobber(const ConfigTable& tab) : tab_(tab) {}
    int initial(const Arena& d, int cop_start) override;
    int move(const Arena& d, int t, int cop_pos, int robber_pos) override;

private:
    const ConfigTable& tab_;
};

// Uniform random legal moves; deterministic per seed.
class RandomRobber : public RobberSource {
public:
    explicit RandomRobber(std::uint64_t seed) : state_(seed) {}
    int initial(const Arena& d, int cop_start) override;
    int move(const Arena& d, int t, int cop_pos, int robber_pos) override;

private:
    std::uint64_t next();
    std::uint64_t state_;
};

struct PlayRound {
    int round = 0;
    int slice = 0;
    int cop = 0;     // position at the start of the round
    int robber = 0;  // position at the start of the round
};

struct Transcript {
    std::vector<PlayRound> rounds;
    std::optional<int> capture_round;
    int round_limit = 0;
};

// Simulates up to `max_rounds` rounds (default p*n^2). The strategy must
// come from a copwin verdict on the same arena.
Transcript play(const Arena& d, const Strategy& s, RobberSource& robber, int max_rounds = -1);

}  // namespace pp
