#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rhombic {

// Site contents of a two-species exclusion state. Encoded D (heavy), A (light), E (hole).
enum class Site : std::uint8_t { Heavy, Light, Hole };

char site_char(Site s);

class StateWord {
  public:
    StateWord() = default;
    explicit StateWord(std::vector<Site> sites);

    std::span<const Site> sites() const { return sites_; }
    Site operator[](std::size_t i) const { return sites_[i]; }
    int size() const { return static_cast<int>(sites_.size()); }
    int heavy() const { return heavy_; }
    int light() const { return light_; }
    int holes() const { return holes_; }
    std::string to_string() const;

    friend bool operator==(const StateWord& a, const StateWord& b) { return a.sites_ == b.sites_; }
    friend auto operator<=>(const StateWord& a, const StateWord& b) { return a.sites_ <=> b.sites_; }

  private:
    std::vector<Site> sites_;
    int heavy_ = 0;
    int light_ = 0;
    int holes_ = 0;
};

// Reads a non-empty string over {D, A, E}. Throws ParseError naming the offending position.
StateWord parse_word(std::string_view text);

// Lattice point; the NE corner of every diagram is the origin and y grows upward.
struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

// Unit boundary steps. The underlying order W < SW < S is the sorting order of the NW boundary.
enum class Step : std::uint8_t { W, SW, S };

Point offset(Step s);
Step step_of(Site s);

// A unit edge, identified by its NE endpoint and the step leading away from it.
struct Edge {
    Point from;
    Step step = Step::W;
    Point to() const { return from + offset(step); }
    auto operator<=>(const Edge&) const = default;
};

struct RhombicDiagram {
    StateWord word;
    std::vector<Step> nw_path; // W^holes SW^light S^heavy
    std::vector<Step> se_path; // word read left to right
    int area = 0;              // inversions of the word under Hole < Light < Heavy

    Point sw_corner() const;
};

RhombicDiagram build_diagram(const StateWord& word);

enum class TileKind : std::uint8_t { Square, Tall, Short };

const char* kind_name(TileKind k);

struct Tile {
    TileKind kind = TileKind::Square;
    Point anchor; // NE-most vertex

    // The two steps whose crossing this tile records, east step first.
    Step east_step() const;
    Step south_step() const;
    std::array<Point, 4> vertices() const; // anchor, anchor+east, anchor+east+south, anchor+south
    friend auto operator<=>(const Tile&, const Tile&) = default;
};

// Order used for JSON output: anchor.y descending, anchor.x descending, then kind.
bool json_order(const Tile& a, const Tile& b);

// Tile produced when the path steps (first, second) at position `at` are swapped into sorted order.
std::optional<TileKind> crossing_kind(Step first, Step second);

// One tile of a tiling, met while sweeping a path from the SE boundary to the NW boundary.
// The path steps at `position` and `position + 1` are the tile's east and south edges before the
// sweep crosses it, and its north and west edges afterwards.
struct Crossing {
    std::size_t tile = 0;
    std::size_t position = 0;
    std::size_t east_strip = 0;  // strip id (= index into the word) of the east/west edge pair
    std::size_t south_strip = 0; // strip id of the south/north edge pair
    Point origin;                // path point before `position`, equal to the tile anchor
};

class Tiling {
  public:
    // Validates that `tiles` exactly cover the diagram. Throws ValidityError.
    Tiling(RhombicDiagram diagram, std::vector<Tile> tiles);

    const RhombicDiagram& diagram() const { return diagram_; }
    const StateWord& word() const { return diagram_.word; }
    std::span<const Tile> tiles() const { return tiles_; }
    std::size_t size() const { return tiles_.size(); }
    std::optional<std::size_t> find(const Tile& t) const;

    // Deterministic SE-to-NW order that always crosses the leftmost available tile.
    std::span<const Crossing> sweep() const { return sweep_; }

    friend bool operator==(const Tiling& a, const Tiling& b) {
        return a.diagram_.word == b.diagram_.word && a.tiles_ == b.tiles_;
    }

  private:
    RhombicDiagram diagram_;
    std::vector<Tile> tiles_; // json_order
    std::vector<Crossing> sweep_;
};

// Chooses which of the available positions to cross next.
using SweepChooser = std::function<std::size_t(std::span<const std::size_t> candidates)>;

// Sweeps the tiling with a caller-chosen order. Every complete order visits every tile once.
std::vector<Crossing> sweep_tiling(const Tiling& tiling, const SweepChooser& choose);

// Tiling from bubble-sorting the SE path, always swapping the leftmost adjacent inversion.
Tiling canonical_tiling(const RhombicDiagram& diagram);

// All tilings of the diagram in lexicographic order of their sorted tile lists.
// Throws CapacityError when the area exceeds max_area.
std::vector<Tiling> enumerate_tilings(const RhombicDiagram& diagram, int max_area = 14);

// Rotates the hexagon whose interior vertex is `center`. Throws InvalidFlip if no hexagon is there.
Tiling apply_flip(const Tiling& tiling, Point center);

// Interior vertices of all flippable hexagons, in sorted order.
std::vector<Point> flippable_hexagons(const Tiling& tiling);

struct Strip {
    std::size_t letter = 0;         // index of the generating symbol in the word
    std::vector<std::size_t> tiles; // SE to NW
    Edge se_edge;
    Edge nw_edge;
};

struct StripDecomposition {
    std::vector<Strip> west;      // one per heavy, in word order (NW edges top to bottom)
    std::vector<Strip> north;     // one per hole, in word order (NW edges right to left)
    std::vector<Strip> northwest; // one per light, in word order (NW edges top to bottom)
};

StripDecomposition compute_strips(const Tiling& tiling);

} // namespace rhombic
