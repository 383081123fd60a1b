#pragma once

#include "rhombic/assemblee.hpp"
#include "rhombic/shapes.hpp"
#include "rhombic/tableau.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rhombic {

// A possibly empty interval {lo..hi} of consecutive integers.
class EdgeLabel {
  public:
    EdgeLabel() = default;
    static EdgeLabel single(int x) { return {x, x}; }
    static EdgeLabel range(int lo, int hi) { return lo > hi ? EdgeLabel() : EdgeLabel(lo, hi); }

    bool empty() const { return lo_ > hi_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int size() const { return empty() ? 0 : hi_ - lo_ + 1; }

    // The `count` smallest / largest members.
    EdgeLabel lowest(int count) const { return range(lo_, lo_ + count - 1); }
    EdgeLabel highest(int count) const { return range(hi_ - count + 1, hi_); }

    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;

  private:
    EdgeLabel(int lo, int hi) : lo_(lo), hi_(hi) {}
    int lo_ = 1;
    int hi_ = 0;
};

// b succeeds a when both are nonempty and b starts right after a ends.
inline bool succeeds(const EdgeLabel& b, const EdgeLabel& a) {
    return !a.empty() && !b.empty() && b.lo() == a.hi() + 1;
}

std::string to_string(const EdgeLabel& label); // "()" or "(lo..hi)"

struct LabeledTableau {
    Tableau tableau;
    std::map<Edge, EdgeLabel> labels;     // every edge of the tiling, boundary included
    std::map<Edge, std::size_t> strip_of; // strip (word index) travelling along each edge
    std::vector<EdgeLabel> termination;   // NW boundary labels in path order from the NE corner
    int final_block_end = 0;              // the omitted last block-end
};

// Sends the reading of `a` (without its last block-end) from the SE boundary to the NW boundary,
// fusing or exchanging labels in every tile. `order` must be a complete sweep of the tiling; the
// tiling's own sweep is used otherwise. Throws ShapeError if the tiling is not of shape X(a).
LabeledTableau fusion_exchange(const Assemblee& a, std::shared_ptr<const Tiling> tiling);
LabeledTableau fusion_exchange(const Assemblee& a, std::shared_ptr<const Tiling> tiling,
                               std::span<const Crossing> order);

struct TerminationReport {
    std::vector<EdgeLabel> horizontal; // right to left
    std::vector<EdgeLabel> diagonal;   // top to bottom
    std::vector<EdgeLabel> vertical;   // top to bottom
    int final_block_end = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Groups the NW boundary labels by direction and checks their unions and the complete chain
// K_v > ... > K_1 > J_1 > ... > J_t > (last block-end) > I_1 > ... > I_u.
TerminationReport termination_report(const LabeledTableau& lt);

// Largest members of the nonempty labels, in decreasing order.
std::vector<int> label_maxima(std::span<const EdgeLabel> labels);

enum class RootClass { West, Northwest, North };

const char* root_class_name(RootClass c);

struct Root {
    RootClass cls = RootClass::West;
    std::optional<Edge> edge; // nullopt for the trivial northwest root at the SW corner
    int leaves = 0;           // 1 for the trivial root
};

struct ForestVertex {
    std::size_t tile = 0;
    Fill fill = Fill::Alpha;
    bool on_northwest_strip = false;
};

// Strip lines cut north of every alpha and west of every beta.
struct Forest {
    std::vector<Root> roots;             // increasing root order
    std::vector<ForestVertex> vertices;  // sweep order
    std::map<Edge, int> branch_leaves;   // edges crossed by a branch, with the leaves below them
    std::vector<Edge> external;          // SE boundary edges from the NE corner
};

Forest build_forest(const Tableau& t);

// Inverse of fusion_exchange. Throws ValidityError if `t` is not a valid tableau.
Assemblee label_passing(const Tableau& t);

} // namespace rhombic
