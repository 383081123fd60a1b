#pragma once

#include "rhombic/algebra.hpp"
#include "rhombic/shapes.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

namespace rhombic {

// Disjoint nonempty ordered blocks covering {1..size}, with block-ends strictly decreasing from
// left to right. Instances are always canonical.
class Assemblee {
  public:
    using Blocks = std::vector<std::vector<int>>;

    const Blocks& blocks() const { return blocks_; }
    int size() const { return size_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    std::vector<int> flattened() const;
    std::vector<int> block_ends() const;

    friend bool operator==(const Assemblee&, const Assemblee&) = default;
    friend auto operator<=>(const Assemblee& a, const Assemblee& b) { return a.blocks_ <=> b.blocks_; }

  private:
    friend Assemblee canonicalize(Blocks blocks);
    explicit Assemblee(Blocks blocks);

    Blocks blocks_;
    int size_ = 0;
};

// Sorts blocks by decreasing block-end. Throws ValidityError unless the blocks are nonempty,
// disjoint and cover {1..size}.
Assemblee canonicalize(Assemblee::Blocks blocks);

struct AssembleeStatistics {
    std::vector<int> lrs;       // left to right in the reading
    std::vector<int> rls;       // right to left in the reading
    std::vector<int> increases; // reading order
    std::vector<int> decreases; // reading order
};

// lrs: elements above the first block-end with every larger element to their left.
// rls: elements below the last block-end with every larger element below that block-end to their right.
AssembleeStatistics statistics(const Assemblee& a);

// Reading with the last block-end dropped: increase -> D, decrease -> E, block-end -> A.
StateWord word_of_assemblee(const Assemblee& a);

// All assemblées of the given size and block count, sorted. Throws CapacityError above max_results.
std::vector<Assemblee> enumerate_assemblees(int size, int block_count, std::size_t max_results = 5'000'000);

// f on [1..m] with 1 <= f(i) <= i + r + 1, where m is the number of inserted elements.
struct TruncatedSubexceedant {
    int r = 0;
    std::vector<int> values;
};

// Gap index (number of inserted elements to its left) of the chosen point on each of the top r
// green lines, top line first; weakly increasing in [0, m]. The bottom line's point sits at m.
struct GreenPointChoice {
    std::vector<int> gaps;
};

struct Insertion {
    Assemblee assemblee; // before rho
    LaurentPolynomial weight;
    int alpha_marks = 0; // elements inserted above everything (weight 1/alpha)
    int beta_marks = 0;  // elements inserted below everything (weight 1/beta)
};

// Throws ValidityError when f or g is out of range.
Insertion insert(const TruncatedSubexceedant& f, const GreenPointChoice& g);

void for_each_subexceedant(int m, int r, const std::function<void(const TruncatedSubexceedant&)>& visit);
void for_each_green_choice(int m, int r, const std::function<void(const GreenPointChoice&)>& visit);

// Mirrors the elements above the first block-end and complements (c -> last block-end - c) the
// elements below the last block-end. An involution.
Assemblee rho(const Assemblee& a);

// Sum over assemblées of alpha^-|lrs| beta^-|rls|.
LaurentPolynomial assemblee_weight_sum(int size, int block_count);

} // namespace rhombic
