#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace dystil {

enum class EnvKind {
    DynamicObstacles6x6,
    UnlockPickup,
    KeyCorridorS3R2,
    PutNextS5N2,
};

std::string to_string(EnvKind kind);
EnvKind env_kind_from_string(const std::string& name);

enum class Direction : int { North = 0, East = 1, South = 2, West = 3 };

enum class ObjColor : int { Red = 0, Green, Blue, Purple, Yellow, Grey };

std::string to_string(ObjColor c);

// One grid cell (or a carried object). Doors carry their open/locked state.
struct Cell {
    enum class Kind : int { Empty = 0, Wall, Door, Key, Ball, Box, Goal };

    Kind kind = Kind::Empty;
    ObjColor color = ObjColor::Grey;
    bool locked = false;
    bool open = false;

    bool is_empty() const { return kind == Kind::Empty; }
    bool is_wall() const { return kind == Kind::Wall; }
    bool is_door() const { return kind == Kind::Door; }
    // Can an agent stand here after moving forward?
    bool is_walkable() const {
        return kind == Kind::Empty || kind == Kind::Goal || (is_door() && open);
    }
    // Does sight pass through?
    bool is_see_through() const { return !is_wall() && !(is_door() && !open); }
    bool is_carryable() const {
        return kind == Kind::Key || kind == Kind::Ball || kind == Kind::Box;
    }

    bool operator==(const Cell&) const = default;
};

std::string to_string(Cell::Kind k);

struct Action {
    std::string name;
    int index = -1;

    bool operator==(const Action& o) const { return index == o.index; }
};

// Fixed per-env action list; DynamicObstacles exposes navigation only.
const std::vector<Action>& action_set(EnvKind kind);
const Action& action_by_name(EnvKind kind, const std::string& name);

struct EnvConfig {
    EnvKind kind = EnvKind::DynamicObstacles6x6;
    int max_steps = 0;  // 0 -> per-kind default
    std::uint64_t seed = 0;

    int effective_max_steps() const;
};

int default_max_steps(EnvKind kind);

// Egocentric 7x7 view, agent at bottom-center (3,6) facing up.
struct Observation {
    static constexpr int kViewSize = 7;
    static constexpr int kAgentX = 3;
    static constexpr int kAgentY = 6;

    std::array<Cell, kViewSize * kViewSize> view{};
    std::array<bool, kViewSize * kViewSize> visible{};
    std::optional<Cell> carried;
    std::string mission;

    const Cell& at(int vx, int vy) const { return view[vy * kViewSize + vx]; }
    bool seen(int vx, int vy) const { return visible[vy * kViewSize + vx]; }

    bool operator==(const Observation&) const = default;
};

// Full hidden state. The agent never sees this directly; the oracle does.
struct GridState {
    EnvKind kind = EnvKind::DynamicObstacles6x6;
    std::uint64_t seed = 0;
    int max_steps = 0;

    int width = 0;
    int height = 0;
    std::vector<Cell> cells;

    int agent_x = 0;
    int agent_y = 0;
    Direction agent_dir = Direction::East;
    std::optional<Cell> carried;

    int step_count = 0;
    bool finished = false;

    std::vector<std::pair<int, int>> obstacle_positions;
    std::string mission;

    // success targets
    Cell::Kind target_kind = Cell::Kind::Empty;  // UnlockPickup / KeyCorridor
    ObjColor target_color = ObjColor::Grey;
    Cell putnext_a{};  // PutNext: identity of the object to move ...
    Cell putnext_b{};  // ... and of the anchor object

    std::mt19937_64 motion_rng;  // dynamic obstacle moves

    const Cell& at(int x, int y) const { return cells[y * width + x]; }
    Cell& at(int x, int y) { return cells[y * width + x]; }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }
};

struct StepResult {
    Observation observation;
    double reward = 0.0;
    bool terminated = false;
    bool truncated = false;
};

struct ResetResult {
    GridState state;
    Observation observation;
};

// Deterministic function of (kind, seed): identical configs give identical
// layouts and obstacle motion.
ResetResult reset(const EnvConfig& config);

// Applies one action. Throws std::logic_error if the episode already ended.
StepResult step(GridState& state, const Action& action);

Observation observe(const GridState& state);

enum class EpisodeOutcome { Success, Failure, Collision };

// r = 1 - 0.9 * (total_steps / max_steps) on success; 0 on failure; -1 on
// collision.
double compute_reward(int total_steps, int max_steps, EpisodeOutcome outcome);

// direction helpers
inline int dir_dx(Direction d) {
    switch (d) {
        case Direction::North: return 0;
        case Direction::East: return 1;
        case Direction::South: return 0;
        case Direction::West: return -1;
    }
    return 0;
}
inline int dir_dy(Direction d) {
    switch (d) {
        case Direction::North: return -1;
        case Direction::East: return 0;
        case Direction::South: return 1;
        case Direction::West: return 0;
    }
    return 0;
}
inline Direction rotate_left(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 3) % 4);
}
inline Direction rotate_right(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 1) % 4);
}

}  // namespace dystil
