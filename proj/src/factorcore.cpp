#include "omf/factorcore.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace omf {

Perm pidentity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm pcompose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm pinverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = int(i);
    return r;
}

SmallGroup closure(int degree, const std::vector<Perm>& gens, size_t cap) {
    std::set<Perm> seen{pidentity(degree)};
    std::vector<Perm> queue{pidentity(degree)};
    for (size_t head = 0; head < queue.size(); ++head)
        for (const Perm& g : gens) {
            if (int(g.size()) != degree) throw std::invalid_argument("closure: degree mismatch");
            Perm x = pcompose(queue[head], g);
            if (seen.insert(x).second) {
                queue.push_back(std::move(x));
                if (seen.size() > cap) throw std::runtime_error("closure: cap exceeded");
            }
        }
    SmallGroup out;
    out.degree = degree;
    out.elements.assign(seen.begin(), seen.end());
    return out;
}

bool contains(const SmallGroup& g, const Perm& p) {
    return std::binary_search(g.elements.begin(), g.elements.end(), p);
}

bool is_subgroup(const SmallGroup& sub, const SmallGroup& g) {
    for (const Perm& p : sub.elements)
        if (!contains(g, p)) return false;
    return true;
}

bool is_normal(const SmallGroup& n, const SmallGroup& g) {
    if (!is_subgroup(n, g)) return false;
    for (const Perm& x : g.elements) {
        Perm xi = pinverse(x);
        for (const Perm& h : n.elements)
            if (!contains(n, pcompose(pcompose(xi, h), x))) return false;
    }
    return true;
}

SmallGroup intersection(const SmallGroup& a, const SmallGroup& b) {
    SmallGroup out;
    out.degree = a.degree;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                          b.elements.end(), std::back_inserter(out.elements));
    return out;
}

SmallGroup conjugate_group(const SmallGroup& g, const Perm& x) {
    Perm xi = pinverse(x);
    SmallGroup out;
    out.degree = g.degree;
    for (const Perm& h : g.elements) out.elements.push_back(pcompose(pcompose(xi, h), x));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

std::vector<Perm> product_set(const SmallGroup& h, const SmallGroup& k) {
    std::set<Perm> prod;
    for (const Perm& a : h.elements)
        for (const Perm& b : k.elements) prod.insert(pcompose(a, b));
    return {prod.begin(), prod.end()};
}

SmallGroup join(const SmallGroup& a, const SmallGroup& b) {
    std::vector<Perm> gens = a.elements;
    gens.insert(gens.end(), b.elements.begin(), b.elements.end());
    return closure(a.degree, gens);
}

bool is_factorization(const SmallGroup& g, const SmallGroup& h, const SmallGroup& k) {
    return product_set(h, k) == g.elements;
}

bool quotient_reduction_check(const SmallGroup& g, const SmallGroup& h, const SmallGroup& k,
                              const SmallGroup& n) {
    bool lhs = is_factorization(g, h, k);
    std::vector<Perm> hk = product_set(h, k);
    bool covers_n = std::includes(hk.begin(), hk.end(), n.elements.begin(), n.elements.end());
    // G/N = (HN/N)(KN/N) iff G = (HN)(KN), both sides being unions of
    // N-cosets
    bool quot = is_factorization(g, join(h, n), join(k, n));
    bool rhs = covers_n && quot;
    return lhs == rhs;
}

bool conjugate_pair_checks(const SmallGroup& g, const SmallGroup& h, const SmallGroup& k,
                           const Perm& x, const Perm& y) {
    if (!is_factorization(g, h, k)) return false;
    SmallGroup hx = conjugate_group(h, x);
    SmallGroup ky = conjugate_group(k, y);
    if (!is_factorization(g, hx, ky)) return false;
    return intersection(hx, ky).size() == intersection(h, k).size();
}

bool mixed_product_identity(const SmallGroup& g, const SmallGroup& h, const SmallGroup& k,
                            const SmallGroup& l) {
    if (!is_factorization(g, h, k)) return false;
    SmallGroup hl = join(h, l), kl = join(k, l);
    std::vector<Perm> lhs = intersection(hl, kl).elements;
    std::vector<Perm> rhs = product_set(intersection(h, kl), intersection(k, hl));
    return lhs == rhs;
}

SmallGroup symmetric_group(int n) {
    Perm t = pidentity(n);
    std::swap(t[0], t[1]);
    Perm c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    return closure(n, {t, c});
}

SmallGroup alternating_group(int n) {
    Perm t = pidentity(n);
    t[0] = 1;
    t[1] = 2;
    t[2] = 0;
    Perm c(n);
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    } else {
        c[0] = 0;
        for (int i = 1; i < n; ++i) c[i] = i % (n - 1) + 1;
    }
    return closure(n, {t, c});
}

SmallGroup cyclic_group(int n, int degree) {
    Perm c = pidentity(degree);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    return closure(degree, {c});
}

}  // namespace omf
