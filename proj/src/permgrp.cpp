#include "omf/permgrp.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace omf {

GroupHandle make_group(const Field& F, int dim, std::vector<Semilinear> gens) {
    std::vector<Semilinear> kept;
    for (auto& g : gens) {
        if (g.m.F != &F || g.dim() != dim)
            throw std::invalid_argument("make_group: generator space mismatch");
        if (!g.is_identity()) kept.push_back(std::move(g));
    }
    return GroupHandle{&F, dim, std::move(kept)};
}

Point StabChain::act(const Semilinear& g, Point x) const {
    return encode(apply(g, decode(*F_, dim_, x)));
}

StabChain::StabChain(const GroupHandle& g, std::vector<Point> base_hints)
    : F_(g.F), dim_(g.dim), hints_(std::move(base_hints)) {
    build(g.gens);
}

void StabChain::recompute(size_t li) {
    Level& lv = levels_[li];
    lv.orbit.clear();
    lv.pos.clear();
    lv.reps.clear();
    lv.rep_invs.clear();
    lv.edge.clear();
    lv.orbit.push_back(lv.base);
    lv.pos[lv.base] = 0;
    lv.reps.push_back(Semilinear::identity(*F_, dim_));
    lv.rep_invs.push_back(Semilinear::identity(*F_, dim_));
    lv.edge.push_back({-1, -1});
    for (size_t head = 0; head < lv.orbit.size(); ++head) {
        for (size_t si = 0; si < lv.gens.size(); ++si) {
            Point y = act(lv.gens[si], lv.orbit[head]);
            if (lv.pos.count(y)) continue;
            lv.pos[y] = int(lv.orbit.size());
            lv.orbit.push_back(y);
            lv.reps.push_back(compose(lv.reps[head], lv.gens[si]));
            lv.rep_invs.push_back(inverse(lv.reps.back()));
            lv.edge.push_back({int(head), int(si)});
        }
    }
    lv.dirty = false;
}

void StabChain::ensure(size_t i) {
    if (levels_[i].dirty) recompute(i);
}

std::pair<Semilinear, size_t> StabChain::strip(Semilinear g, size_t start) {
    for (size_t k = start; k < levels_.size(); ++k) {
        ensure(k);
        Level& lv = levels_[k];
        Point x = act(g, lv.base);
        auto it = lv.pos.find(x);
        if (it == lv.pos.end()) return {std::move(g), k};
        g = compose(g, lv.rep_invs[it->second]);
    }
    return {std::move(g), levels_.size()};
}

void StabChain::append_level_for(const Semilinear& g) {
    auto moved = [&](Point x) { return act(g, x) != x; };
    auto already = [&](Point x) {
        for (const Level& lv : levels_)
            if (lv.base == x) return true;
        return false;
    };
    for (Point h : hints_)
        if (!already(h) && moved(h)) {
            levels_.push_back(Level{h});
            return;
        }
    for (int i = 0; i < dim_; ++i) {
        Point u = encode(unit(*F_, dim_, i));
        if (!already(u) && moved(u)) {
            levels_.push_back(Level{u});
            return;
        }
    }
    for (int s = 2; s < F_->size; ++s)
        for (int i = 0; i < dim_; ++i) {
            Point u = encode(scale(Fel(s), unit(*F_, dim_, i)));
            if (!already(u) && moved(u)) {
                levels_.push_back(Level{u});
                return;
            }
        }
    uint64_t total = 1;
    for (int i = 0; i < dim_; ++i) total *= uint64_t(F_->size);
    for (Point x = 1; x < total; ++x)
        if (!already(x) && moved(x)) {
            levels_.push_back(Level{x});
            return;
        }
    throw std::logic_error("stabilizer chain: non-identity element moves no point");
}

void StabChain::build(const std::vector<Semilinear>& input) {
    // hints become the leading base points unconditionally, so a chain hinted
    // at v always exposes the stabilizer of v as level 1
    if (!input.empty())
        for (Point h : hints_) levels_.push_back(Level{h});
    // base must cover every generator
    for (const Semilinear& g : input) {
        bool covered = false;
        for (const Level& lv : levels_)
            if (act(g, lv.base) != lv.base) {
                covered = true;
                break;
            }
        if (!covered) append_level_for(g);
    }
    // distribute generators to the levels whose base prefix they fix
    for (const Semilinear& g : input)
        for (Level& lv : levels_) {
            lv.gens.push_back(g);
            if (act(g, lv.base) != lv.base) break;
        }

    int i = int(levels_.size()) - 1;
    while (i >= 0) {
        ensure(size_t(i));
        bool changed = false;
        size_t norb = levels_[i].orbit.size();
        size_t ngen = levels_[i].gens.size();
        for (size_t oi = 0; oi < norb && !changed; ++oi) {
            for (size_t si = 0; si < ngen && !changed; ++si) {
                Point img = act(levels_[i].gens[si], levels_[i].orbit[oi]);
                int ti = levels_[i].pos.at(img);
                if (levels_[i].edge[ti] == std::make_pair(int(oi), int(si))) continue;
                Semilinear sch = compose(compose(levels_[i].reps[oi], levels_[i].gens[si]),
                                         levels_[i].rep_invs[ti]);
                if (sch.is_identity()) continue;
                auto [h, j] = strip(std::move(sch), size_t(i) + 1);
                if (h.is_identity()) continue;
                if (j == levels_.size()) append_level_for(h);
                for (size_t k = size_t(i) + 1; k <= j; ++k) {
                    levels_[k].gens.push_back(h);
                    levels_[k].dirty = true;
                }
                i = int(j);
                changed = true;
            }
        }
        if (!changed) --i;
    }

    order_ = 1;
    for (const Level& lv : levels_) order_ *= uint64_t(lv.orbit.size());
}

bool StabChain::contains(const Semilinear& g) const {
    if (g.m.F != F_ || g.dim() != dim_) return false;
    Semilinear h = g;
    for (const Level& lv : levels_) {
        Point x = encode(apply(h, decode(*F_, dim_, lv.base)));
        auto it = lv.pos.find(x);
        if (it == lv.pos.end()) return false;
        h = compose(h, lv.rep_invs[it->second]);
    }
    return h.is_identity();
}

std::vector<Semilinear> StabChain::level_gens(size_t i) const {
    if (i >= levels_.size()) return {};
    return levels_[i].gens;
}

std::vector<Semilinear> StabChain::enumerate(uint64_t cap) const {
    if (order_ > cap) throw std::runtime_error("enumerate: group too large");
    std::vector<Semilinear> out{Semilinear::identity(*F_, dim_)};
    // deepest level first: every element factors as rep_{k-1} ... rep_0
    for (size_t li = levels_.size(); li-- > 0;) {
        std::vector<Semilinear> next;
        next.reserve(out.size() * levels_[li].reps.size());
        for (const Semilinear& tail : out)
            for (const Semilinear& rep : levels_[li].reps) next.push_back(compose(tail, rep));
        out = std::move(next);
    }
    return out;
}

std::string StabChain::summary() const {
    std::ostringstream os;
    os << "order " << order_ << "; base/orbit:";
    for (const Level& lv : levels_) os << " (" << lv.base << ", " << lv.orbit.size() << ")";
    return os.str();
}

std::vector<Point> vector_orbit(const GroupHandle& g, const Vec& start, uint64_t cap) {
    std::vector<Point> orbit{encode(start)};
    std::set<Point> seen{orbit[0]};
    for (size_t head = 0; head < orbit.size(); ++head) {
        Vec v = decode(*g.F, g.dim, orbit[head]);
        for (const Semilinear& s : g.gens) {
            Point y = encode(apply(s, v));
            if (seen.insert(y).second) {
                orbit.push_back(y);
                if (orbit.size() > cap) throw std::runtime_error("vector_orbit: cap exceeded");
            }
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

template <bool Unordered>
std::vector<std::pair<Point, Point>> pair_orbit_impl(const GroupHandle& g, const Vec& v,
                                                     const Vec& w, uint64_t cap) {
    using Pair = std::pair<Point, Point>;
    auto norm = [](Point a, Point b) {
        if (Unordered && b < a) std::swap(a, b);
        return Pair{a, b};
    };
    std::vector<Pair> queue{norm(encode(v), encode(w))};
    std::set<Pair> seen{queue[0]};
    for (size_t head = 0; head < queue.size(); ++head) {
        Vec a = decode(*g.F, g.dim, queue[head].first);
        Vec b = decode(*g.F, g.dim, queue[head].second);
        for (const Semilinear& s : g.gens) {
            Pair y = norm(encode(apply(s, a)), encode(apply(s, b)));
            if (seen.insert(y).second) {
                queue.push_back(y);
                if (queue.size() > cap) throw std::runtime_error("pair orbit: cap exceeded");
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<std::pair<Point, Point>> ordered_pair_orbit(const GroupHandle& g, const Vec& v,
                                                        const Vec& w, uint64_t cap) {
    return pair_orbit_impl<false>(g, v, w, cap);
}

std::vector<std::pair<Point, Point>> unordered_pair_orbit(const GroupHandle& g, const Vec& v,
                                                          const Vec& w, uint64_t cap) {
    return pair_orbit_impl<true>(g, v, w, cap);
}

GroupHandle point_stabilizer(const GroupHandle& g, const Vec& v, uint64_t* orbit_size) {
    StabChain chain(g, {encode(v)});
    if (chain.depth() == 0 || chain.base_point(0) != encode(v)) {
        // v is fixed by the whole group
        if (orbit_size) *orbit_size = 1;
        return g;
    }
    if (orbit_size) *orbit_size = chain.orbit_size(0);
    return make_group(*g.F, g.dim, chain.level_gens(1));
}

namespace {

// dedup key: frobenius exponent + matrix entries
std::vector<Fel> elem_key(const Semilinear& g) {
    std::vector<Fel> k;
    k.reserve(g.m.a.size() + 1);
    k.push_back(Fel(g.frob));
    k.insert(k.end(), g.m.a.begin(), g.m.a.end());
    return k;
}

// generic orbit + Schreier-generator stabilizer over any point type
template <class P, class Act>
std::pair<uint64_t, std::vector<Semilinear>> orbit_with_stabilizer(const GroupHandle& g, P start,
                                                                   Act point_act) {
    std::vector<P> orbit{start};
    std::map<P, int> pos{{start, 0}};
    std::vector<Semilinear> reps{Semilinear::identity(*g.F, g.dim)};
    for (size_t head = 0; head < orbit.size(); ++head)
        for (const Semilinear& s : g.gens) {
            P y = point_act(s, orbit[head]);
            if (pos.count(y)) continue;
            pos[y] = int(orbit.size());
            orbit.push_back(y);
            reps.push_back(compose(reps[head], s));
        }
    std::set<std::vector<Fel>> seen;
    std::vector<Semilinear> stab;
    for (size_t oi = 0; oi < orbit.size(); ++oi)
        for (const Semilinear& s : g.gens) {
            P y = point_act(s, orbit[oi]);
            Semilinear sch = compose(compose(reps[oi], s), inverse(reps[pos.at(y)]));
            if (sch.is_identity()) continue;
            if (seen.insert(elem_key(sch)).second) stab.push_back(std::move(sch));
        }
    return {uint64_t(orbit.size()), std::move(stab)};
}

}  // namespace

GroupHandle setwise_pair_stabilizer(const GroupHandle& g, const Vec& v, const Vec& w,
                                    uint64_t* orbit_size, bool* swap_exists) {
    using Pair = std::pair<Point, Point>;
    auto norm = [](Point a, Point b) { return Pair{std::min(a, b), std::max(a, b)}; };
    auto pact = [&](const Semilinear& s, const Pair& pr) {
        Point a = encode(apply(s, decode(*g.F, g.dim, pr.first)));
        Point b = encode(apply(s, decode(*g.F, g.dim, pr.second)));
        return norm(a, b);
    };
    auto [n, stab] = orbit_with_stabilizer(g, norm(encode(v), encode(w)), pact);
    if (orbit_size) *orbit_size = n;
    if (swap_exists) {
        // every setwise-stabilizer element either fixes or exchanges v and w,
        // so an exchanging element exists iff some Schreier generator swaps
        *swap_exists = false;
        for (const Semilinear& s : stab)
            if (encode(apply(s, v)) == encode(w)) {
                *swap_exists = true;
                break;
            }
    }
    return make_group(*g.F, g.dim, std::move(stab));
}

GroupHandle parity_kernel(const GroupHandle& g,
                          const std::function<int(const Semilinear&)>& parity, bool* proper) {
    auto pact = [&](const Semilinear& s, int x) { return (x + parity(s)) % 2; };
    auto [n, stab] = orbit_with_stabilizer(g, 0, pact);
    if (proper) *proper = (n == 2);
    return make_group(*g.F, g.dim, std::move(stab));
}

cpp_int group_order(const GroupHandle& g, std::vector<Point> base_hints) {
    return StabChain(g, std::move(base_hints)).order();
}

bool group_contains(const GroupHandle& g, const Semilinear& x) {
    return StabChain(g).contains(x);
}

std::vector<Semilinear> enumerate_group(const GroupHandle& g, uint64_t cap) {
    return StabChain(g).enumerate(cap);
}

}  // namespace omf
