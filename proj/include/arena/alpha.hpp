#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "arena/board.hpp"

namespace arena {

// Dense arc membership over vertex ids [0, bound). Loops are never stored.
class ArcSet {
public:
    ArcSet() = default;
    explicit ArcSet(int bound);
    ArcSet(int bound, std::span<const Arc> arcs);
    ArcSet(std::initializer_list<Arc> arcs);  // bound = 1 + largest id

    int bound() const { return bound_; }
    std::size_t size() const { return size_; }
    bool contains(Arc a) const;
    bool insert(Arc a);
    bool erase(Arc a);
    std::vector<Arc> arcs() const;  // lexicographic

    // Both orientations absent; ids outside the bound count as untouched.
    bool is_available(Arc a) const { return !a.is_loop() && !contains(a) && !contains(a.reversed()); }

private:
    int bound_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint8_t> bits_;
};

// Arcs of `board` with both endpoints in `keep` (a mask over vertex ids).
ArcSet arcs_within(const OrientationBoard& board, const std::vector<char>& keep);

struct AlphaStructure {
    std::vector<Arc> decisive;
    int rank = 0;

    friend bool operator==(const AlphaStructure&, const AlphaStructure&) = default;
};

// {(e_i^+, e_j^-) : i <= j}, lexicographic. Throws InvalidDecisive on a loop.
std::vector<Arc> alpha_image(std::span<const Arc> decisive);

// Empty when `d` is exactly the image of `decisive` and k <= rank.
std::optional<Violation> verify_alpha(const ArcSet& d, std::span<const Arc> decisive, int rank);

// 0-based positions of the decisive arcs in In(x) / Out(x).
std::vector<int> in_set(std::span<const Arc> decisive, Vertex x);
std::vector<int> out_set(std::span<const Arc> decisive, Vertex x);

struct AlphaAddition {
    std::vector<Arc> f_arcs;
    std::vector<Arc> decisive;
    int position = 0;  // 1-based slot of the new arc
};

AlphaAddition add_available_arc(const ArcSet& d, std::span<const Arc> decisive, int rank, Arc e);

// Decisive arcs for d restricted to V \ {v}.
std::vector<Arc> restrict_decisive(const ArcSet& d, std::span<const Arc> decisive, Vertex v);

std::vector<Arc> dual_decisive(std::span<const Arc> decisive);

}  // namespace arena
