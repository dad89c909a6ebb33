#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "omf/linalg.hpp"

namespace omf {

using boost::multiprecision::cpp_int;
using Point = uint64_t;  // encoded vector, see encode()/decode()

// matrix-group handle: generators acting on row vectors of a fixed space
struct GroupHandle {
    const Field* F = nullptr;
    int dim = 0;
    std::vector<Semilinear> gens;
};

GroupHandle make_group(const Field& F, int dim, std::vector<Semilinear> gens);

// deterministic stabilizer chain (Schreier-Sims with explicit transversals);
// base points are encoded vectors, chosen from the hints first, then unit
// vectors, then scalar multiples of unit vectors, then all points in index
// order
class StabChain {
public:
    StabChain(const GroupHandle& g, std::vector<Point> base_hints = {});

    const cpp_int& order() const { return order_; }
    bool contains(const Semilinear& g) const;
    size_t depth() const { return levels_.size(); }
    Point base_point(size_t i) const { return levels_[i].base; }
    uint64_t orbit_size(size_t i) const { return levels_[i].orbit.size(); }
    // strong generators fixing base points 0..i-1 (i = 0: the whole group)
    std::vector<Semilinear> level_gens(size_t i) const;
    // all group elements in a fixed deterministic order; throws if the
    // order exceeds cap
    std::vector<Semilinear> enumerate(uint64_t cap = uint64_t(1) << 22) const;
    // human-readable summary: base points and orbit lengths
    std::string summary() const;

private:
    struct Level {
        Point base = 0;
        std::vector<Semilinear> gens;
        std::vector<Point> orbit;  // BFS order, orbit[0] == base
        std::unordered_map<Point, int> pos;
        std::vector<Semilinear> reps, rep_invs;   // reps[i]: base -> orbit[i]
        std::vector<std::pair<int, int>> edge;    // BFS tree edge (parent, gen)
        bool dirty = true;
    };

    const Field* F_;
    int dim_;
    std::vector<Level> levels_;
    std::vector<Point> hints_;
    cpp_int order_ = 1;

    Point act(const Semilinear& g, Point x) const;
    void recompute(size_t i);
    void ensure(size_t i);
    std::pair<Semilinear, size_t> strip(Semilinear g, size_t start);
    void append_level_for(const Semilinear& g);
    void build(const std::vector<Semilinear>& input);
};

// orbit of a vector; returns sorted encoded points
std::vector<Point> vector_orbit(const GroupHandle& g, const Vec& start,
                                uint64_t cap = uint64_t(1) << 26);

// sorted orbit of the ordered pair (v, w)
std::vector<std::pair<Point, Point>> ordered_pair_orbit(const GroupHandle& g, const Vec& v,
                                                        const Vec& w,
                                                        uint64_t cap = uint64_t(1) << 26);
// sorted orbit of the unordered pair {v, w}; entries stored (min, max)
std::vector<std::pair<Point, Point>> unordered_pair_orbit(const GroupHandle& g, const Vec& v,
                                                          const Vec& w,
                                                          uint64_t cap = uint64_t(1) << 26);

// stabilizer of a vector; gens are the strong generators below the first
// base point of a chain based at v; orbit_size (if non-null) receives the
// orbit length of v
GroupHandle point_stabilizer(const GroupHandle& g, const Vec& v,
                             uint64_t* orbit_size = nullptr);

// setwise stabilizer of the unordered pair {v, w} via Schreier generators
// on the pair action; swap_exists (if non-null) reports whether some element
// exchanges v and w
GroupHandle setwise_pair_stabilizer(const GroupHandle& g, const Vec& v, const Vec& w,
                                    uint64_t* orbit_size = nullptr,
                                    bool* swap_exists = nullptr);

// kernel of a parity homomorphism G -> Z/2 given by per-element evaluation;
// proper (if non-null) receives whether the map is onto
GroupHandle parity_kernel(const GroupHandle& g,
                          const std::function<int(const Semilinear&)>& parity,
                          bool* proper = nullptr);

// group order via a stabilizer chain with the given base hints
cpp_int group_order(const GroupHandle& g, std::vector<Point> base_hints = {});

// membership test via a throwaway chain (prefer a cached StabChain when
// testing many elements)
bool group_contains(const GroupHandle& g, const Semilinear& x);

// all elements of a small group, deterministic order
std::vector<Semilinear> enumerate_group(const GroupHandle& g,
                                        uint64_t cap = uint64_t(1) << 22);

}  // namespace omf
