#include "hexcover/planner.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <queue>
#include <sstream>

namespace hexcover {

namespace {

void log_step(const PlannerState& state, const CubeCoord& hex, char mode) {
    if (!state.step_log) return;
    (*state.step_log) << state.step << '\t' << hex << '\t' << mode << '\t'
                      << state.visited.size() << '\t' << state.explored.size() << '\n';
}

bool known_occupied(const ExploredMap& explored, const CubeCoord& cell) {
    auto it = explored.find(cell);
    return it != explored.end() && it->second == Occupancy::Occupied;
}

}  // namespace

PlannerState make_planner(Variant variant, const CubeCoord& start) {
    PlannerState state;
    state.variant = variant;
    state.current = start;
    state.path_history.emplace_back(1, start);
    state.visited.insert(start);
    return state;
}

bool update_explored(PlannerState& state, std::span<const Observation> observations) {
    bool grew = false;
    for (const auto& [cell, status] : observations) {
        auto [it, inserted] = state.explored.try_emplace(cell, status);
        if (inserted) {
            grew = true;
        } else if (it->second != status) {
            std::ostringstream msg;
            msg << "cell " << cell << " re-observed with flipped status";
            throw ConflictingObservation(msg.str());
        }
    }
    return grew;
}

int neighbor_score(const PlannerState& state, const CubeCoord& candidate) {
    int score = 0;
    for (const CubeCoord& n : neighbors(candidate)) {
        if (state.visited.contains(n) || known_occupied(state.explored, n)) ++score;
    }
    return score;
}

std::optional<CubeCoord> select_next_adjacent(const PlannerState& state) {
    std::optional<CubeCoord> best;
    int best_score = -1;
    for (const CubeCoord& n : neighbors(state.current)) {
        if (state.visited.contains(n)) continue;
        auto it = state.explored.find(n);
        if (it == state.explored.end() || it->second != Occupancy::Free) continue;
        const int score = neighbor_score(state, n);
        if (score > best_score) {
            best_score = score;
            best = n;
        }
    }
    return best;
}

std::optional<CubeCoord> select_revisit_target(const PlannerState& state) {
    auto has_open_neighbor = [&](const CubeCoord& cell) {
        for (const CubeCoord& n : neighbors(cell)) {
            if (!state.visited.contains(n) && !known_occupied(state.explored, n)) return true;
        }
        return false;
    };
    for (auto it = state.path_history.rbegin(); it != state.path_history.rend(); ++it) {
        if (has_open_neighbor(it->second)) return it->second;
    }
    return std::nullopt;
}

std::optional<std::vector<CubeCoord>> astar_hex(const CubeCoord& start, const CubeCoord& goal,
                                                const ExploredMap& explored) {
    auto traversable = [&](const CubeCoord& c) {
        auto it = explored.find(c);
        return it != explored.end() && it->second == Occupancy::Free;
    };
    if (start == goal) return std::vector<CubeCoord>{};
    if (!traversable(goal)) return std::nullopt;

    struct OpenEntry {
        int f;
        std::uint64_t seq;  // breaks f ties first-in-first-out
        CubeCoord node;
    };
    auto worse = [](const OpenEntry& a, const OpenEntry& b) {
        if (a.f != b.f) return a.f > b.f;
        return a.seq > b.seq;
    };
    std::priority_queue<OpenEntry, std::vector<OpenEntry>, decltype(worse)> open(worse);
    std::unordered_map<CubeCoord, int, CubeHash> g;
    std::unordered_map<CubeCoord, CubeCoord, CubeHash> parent;
    std::unordered_set<CubeCoord, CubeHash> closed;

    std::uint64_t seq = 0;
    g[start] = 0;
    open.push({hex_distance(start, goal), seq++, start});
    while (!open.empty()) {
        const OpenEntry top = open.top();
        open.pop();
        if (closed.contains(top.node)) continue;
        closed.insert(top.node);
        if (top.node == goal) {
            std::vector<CubeCoord> path;
            for (CubeCoord c = goal; c != start; c = parent.at(c)) path.push_back(c);
            std::reverse(path.begin(), path.end());
            return path;
        }
        const int g_node = g.at(top.node);
        for (const CubeCoord& n : neighbors(top.node)) {
            if (!traversable(n) || closed.contains(n)) continue;
            const int tentative = g_node + 1;
            auto it = g.find(n);
            if (it != g.end() && tentative >= it->second) continue;
            g[n] = tentative;
            parent[n] = top.node;
            open.push({tentative + hex_distance(n, goal), seq++, n});
        }
    }
    return std::nullopt;
}

std::optional<CubeCoord> next_hex(PlannerState& state) {
    const bool map_grew = state.explored.size() != state.explored_size_at_last_decision;
    state.explored_size_at_last_decision = state.explored.size();

    // fresh ground right next door wins over everything
    if (auto adjacent = select_next_adjacent(state)) {
        state.cached_path.clear();
        return adjacent;
    }

    // follow the cached route unless the map changed underneath it
    if (!state.cached_path.empty() && !map_grew) {
        CubeCoord hop = state.cached_path.front();
        state.cached_path.erase(state.cached_path.begin());
        assert(hex_distance(state.current, hop) == 1);
        return hop;
    }

    // route to the most recently entered cell that still has open ground around it
    state.cached_path.clear();
    auto target = select_revisit_target(state);
    if (!target) return std::nullopt;
    if (*target == state.current)
        throw std::logic_error("revisit target equals current cell; was sensing skipped?");
    auto path = astar_hex(state.current, *target, state.explored);
    if (!path) throw std::logic_error("revisit target unreachable through explored free cells");
    state.cached_path = std::move(*path);
    CubeCoord hop = state.cached_path.front();
    state.cached_path.erase(state.cached_path.begin());
    return hop;
}

PlannerCommand planner_step(PlannerState& state) {
    if (state.finished) return DoneCmd{};
    if (state.arrival_pending) {
        state.arrival_pending = false;
        const bool observe = state.variant == Variant::HDCP && state.observe_due;
        state.observe_due = false;
        if (observe) {
            log_step(state, state.current, 'O');
            return ObserveCmd{state.current};
        }
    }
    auto target = next_hex(state);
    if (!target) {
        state.finished = true;
        return DoneCmd{};
    }
    const CubeCoord from = state.current;
    state.step += 1;
    state.current = *target;
    state.observe_due = !state.visited.contains(*target);
    state.visited.insert(*target);
    state.path_history.emplace_back(state.step, *target);
    state.arrival_pending = true;
    log_step(state, state.current, 'T');
    return TransitionCmd{from, *target};
}

bool is_mission_complete(const PlannerState& state) {
    return !select_next_adjacent(state) && !select_revisit_target(state);
}

}  // namespace hexcover
