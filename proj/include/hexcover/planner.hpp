#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "hexcover/hex.hpp"

namespace hexcover {

enum class Occupancy { Free = 0, Occupied = 1 };

enum class Variant { HDCP, HDCP_E };

using ExploredMap = std::unordered_map<CubeCoord, Occupancy, CubeHash>;
using VisitedSet = std::unordered_set<CubeCoord, CubeHash>;
using Observation = std::pair<CubeCoord, Occupancy>;

/// Thrown when a sensed cell status contradicts an earlier observation.
/// Statuses never change mid-mission, so this signals a simulator bug.
struct ConflictingObservation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Mission memory of the coverage planner.
///
/// path_history records (step, cell) for every cell the robot has entered;
/// visited is the set of unique cells in it. explored holds every cell the
/// navigation sensor has classified so far. cached_path is the remainder of
/// the current shortest feasible path toward a revisit target, if any.
struct PlannerState {
    Variant variant = Variant::HDCP;
    int step = 1;
    std::vector<std::pair<int, CubeCoord>> path_history;
    VisitedSet visited;
    ExploredMap explored;
    std::vector<CubeCoord> cached_path;
    CubeCoord current{0, 0, 0};

    // bookkeeping for the arrive/observe/decide cycle
    bool arrival_pending = true;
    bool observe_due = true;  // arrival was a first visit, full observation owed
    bool finished = false;
    std::size_t explored_size_at_last_decision = 0;

    // optional per-step trace: step, cell, mode, |visited|, |explored|
    std::ostream* step_log = nullptr;
};

PlannerState make_planner(Variant variant, const CubeCoord& start = {0, 0, 0});

struct ObserveCmd {
    CubeCoord hex;
};
struct TransitionCmd {
    CubeCoord from;
    CubeCoord to;
};
struct DoneCmd {};

using PlannerCommand = std::variant<ObserveCmd, TransitionCmd, DoneCmd>;

/// Merge navigation sensor results into the explored map. Returns true when
/// the map grew. Re-observations of known cells are no-ops; a status flip
/// throws ConflictingObservation.
bool update_explored(PlannerState& state, std::span<const Observation> observations);

/// Number of neighbors of candidate that are visited or known occupied.
/// A score of 6 marks a hole that would otherwise need a costly return trip.
int neighbor_score(const PlannerState& state, const CubeCoord& candidate);

/// Best unvisited, explored-free neighbor of the current cell: the one with
/// the most visited/occupied neighbors, ties broken by canonical neighbor
/// order. Empty when no such neighbor exists.
std::optional<CubeCoord> select_next_adjacent(const PlannerState& state);

/// Most recently entered visited cell that still has a neighbor which is
/// neither visited nor known occupied. Empty when coverage is complete.
std::optional<CubeCoord> select_revisit_target(const PlannerState& state);

/// Shortest path from start to goal through explored free cells. The result
/// excludes start, begins with a neighbor of start and ends with goal.
/// Deterministic: open-set ties resolve by insertion order, neighbors expand
/// in canonical order. nullopt when the goal is unreachable.
std::optional<std::vector<CubeCoord>> astar_hex(const CubeCoord& start, const CubeCoord& goal,
                                                const ExploredMap& explored);

/// Decide the cell to enter next and maintain the cached path:
/// prefer an adjacent unvisited cell; otherwise head one hop along the
/// (re)computed path toward the revisit target; nullopt when done.
std::optional<CubeCoord> next_hex(PlannerState& state);

/// Advance the planner one command. Call repeatedly, feeding sensor results
/// through update_explored between calls; motion happens outside.
PlannerCommand planner_step(PlannerState& state);

/// True when no adjacent candidate and no revisit target remains.
bool is_mission_complete(const PlannerState& state);

}  // namespace hexcover
