#include "bbd/exemplars.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <tuple>

namespace bbd {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    int fixed_a;  // 0 for parametric families
};

constexpr std::array<FamilyInfo, 10> kFamilies{{
    {Family::D8, "D8", 4},
    {Family::D6, "D6", 3},
    {Family::H6, "H6", 3},
    {Family::EX4, "EX4", 0},
    {Family::EX5, "EX5", 0},
    {Family::Hprime6, "Hprime6", 3},
    {Family::DirectedCycle, "DirectedCycle", 0},
    {Family::CompleteBipartite, "CompleteBipartite", 0},
    {Family::SymmetricCycle, "SymmetricCycle", 0},
    {Family::SymmetricPath, "SymmetricPath", 0},
}};

const FamilyInfo& info(Family f) {
    for (const auto& i : kFamilies) {
        if (i.family == f) return i;
    }
    throw ContractViolation("unknown family");
}

class ArcList {
public:
    void arc(VertexId from, VertexId to) { arcs_.push_back({from, to}); }
    void both(VertexId u, VertexId v) {
        arc(u, v);
        arc(v, u);
    }
    BipartiteDigraph build(int a) const { return BipartiteDigraph(a, arcs_); }

private:
    std::vector<Arc> arcs_;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw ContractViolation(what);
}

BipartiteDigraph make_d8() {
    ArcList l;
    l.arc(yv(0), xv(1));
    l.arc(yv(1), xv(0));
    l.arc(xv(2), yv(3));
    l.arc(xv(3), yv(2));
    for (int i = 0; i < 4; ++i) l.both(xv(i), yv(i));
    l.both(yv(0), xv(2));
    l.both(yv(0), xv(3));
    l.both(yv(1), xv(2));
    l.both(yv(1), xv(3));
    return l.build(4);
}

BipartiteDigraph make_d6() {
    ArcList l;
    for (int i = 0; i < 3; ++i) l.both(xv(i), yv(i));
    l.both(xv(0), yv(2));
    l.both(xv(1), yv(2));
    l.arc(xv(1), yv(0));
    l.arc(xv(0), yv(1));
    return l.build(3);
}

BipartiteDigraph make_h6() {
    const VertexId x = xv(0), y = xv(1), z = xv(2);
    const VertexId u = yv(0), v = yv(1), w = yv(2);
    ArcList l;
    l.arc(x, u);
    l.arc(y, u);
    for (VertexId s : {u, v, w}) l.arc(s, x);
    l.arc(v, y);
    l.arc(v, z);
    l.arc(z, v);
    l.arc(z, w);
    l.arc(u, z);
    return l.build(3);
}

BipartiteDigraph make_ex4(int a, int size_a) {
    require(a >= 4, "EX4 needs a >= 4");
    require(size_a >= 1 && size_a <= a - 2, "EX4 needs 1 <= size_a <= a - 2");
    const VertexId z = xv(a - 1);
    const VertexId u = yv(a - 2);
    const VertexId v = yv(a - 1);
    ArcList l;
    for (int i = 0; i < a; ++i) {
        for (int c = 0; c < a - 2; ++c) l.both(xv(i), yv(c));
    }
    l.arc(z, u);
    l.both(z, v);
    for (int i = 0; i < size_a; ++i) l.arc(u, xv(i));
    for (int i = size_a; i < a - 1; ++i) l.arc(v, xv(i));
    return l.build(a);
}

BipartiteDigraph make_ex5(int a) {
    require(a >= 4, "EX5 needs a >= 4");
    ArcList l;
    for (int i = 1; i < a; ++i) {
        for (int j = 1; j < a; ++j) l.both(xv(i), yv(j));
    }
    l.both(xv(0), yv(0));
    l.both(xv(0), yv(1));
    return l.build(a);
}

BipartiteDigraph make_hprime6() {
    ArcList l;
    l.arc(yv(0), xv(1));
    l.arc(yv(1), xv(2));
    l.arc(xv(0), yv(2));
    for (int i = 0; i < 3; ++i) l.both(xv(i), yv(i));
    l.both(xv(0), yv(1));
    l.both(xv(1), yv(2));
    return l.build(3);
}

BipartiteDigraph make_directed_cycle(int a) {
    require(a >= 1, "DirectedCycle needs a >= 1");
    ArcList l;
    for (int i = 0; i < a; ++i) {
        l.arc(xv(i), yv(i));
        l.arc(yv(i), xv((i + 1) % a));
    }
    return l.build(a);
}

BipartiteDigraph make_complete(int a) {
    require(a >= 1, "CompleteBipartite needs a >= 1");
    ArcList l;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < a; ++j) l.both(xv(i), yv(j));
    }
    return l.build(a);
}

BipartiteDigraph make_symmetric_path(int a, bool close) {
    ArcList l;
    for (int i = 0; i < a; ++i) {
        l.both(xv(i), yv(i));
        if (i + 1 < a) l.both(yv(i), xv(i + 1));
    }
    if (close) l.both(yv(a - 1), xv(0));
    return l.build(a);
}

}  // namespace

std::string_view family_name(Family f) noexcept {
    for (const auto& i : kFamilies) {
        if (i.family == f) return i.name;
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    auto lower = [](std::string_view s) {
        std::string out(s);
        for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return out;
    };
    const std::string key = lower(name);
    for (const auto& i : kFamilies) {
        if (lower(i.name) == key) return i.family;
    }
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> v;
        for (const auto& i : kFamilies) v.push_back(i.family);
        return v;
    }();
    return families;
}

BipartiteDigraph generate(const FamilySpec& spec) {
    const FamilyInfo& fi = info(spec.family);
    if (fi.fixed_a != 0) {
        require(!spec.a || *spec.a == fi.fixed_a,
                std::string(fi.name) + " has fixed a = " + std::to_string(fi.fixed_a));
    }
    const int a = fi.fixed_a != 0 ? fi.fixed_a : spec.a.value_or(4);
    require(a <= kMaxHalfOrder, "a must be <= " + std::to_string(kMaxHalfOrder));
    switch (spec.family) {
        case Family::D8: return make_d8();
        case Family::D6: return make_d6();
        case Family::H6: return make_h6();
        case Family::EX4: return make_ex4(a, spec.size_a);
        case Family::EX5: return make_ex5(a);
        case Family::Hprime6: return make_hprime6();
        case Family::DirectedCycle: return make_directed_cycle(a);
        case Family::CompleteBipartite: return make_complete(a);
        case Family::SymmetricCycle:
            require(a >= 2, "SymmetricCycle needs a >= 2");
            return make_symmetric_path(a, true);
        case Family::SymmetricPath:
            require(a >= 1, "SymmetricPath needs a >= 1");
            return make_symmetric_path(a, false);
    }
    throw ContractViolation("unknown family");
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

class IsoSearch {
public:
    IsoSearch(const BipartiteDigraph& g1, const BipartiteDigraph& g2)
        : g1_(g1), g2_(g2), n_(g1.order()), map_(n_, -1) {
        build_order();
    }

    bool run() { return extend(0); }

    std::vector<int> mapping() const { return map_; }

private:
    static std::pair<int, int> degrees(const BipartiteDigraph& g, int f) {
        return {std::popcount(g.out_flat(f)), std::popcount(g.in_flat(f))};
    }

    // Most-connected-to-placed first, so adjacency checks prune early.
    void build_order() {
        FlatMask placed = 0;
        for (int step = 0; step < n_; ++step) {
            int best = -1;
            std::tuple<int, int, int> best_key{-1, -1, 0};
            for (int f = 0; f < n_; ++f) {
                if (placed >> f & 1U) continue;
                const FlatMask nb = g1_.out_flat(f) | g1_.in_flat(f);
                const auto [out, in] = degrees(g1_, f);
                std::tuple<int, int, int> key{std::popcount(nb & placed), out + in, -f};
                if (best < 0 || key > best_key) {
                    best = f;
                    best_key = key;
                }
            }
            order_.push_back(best);
            placed |= FlatMask{1} << best;
        }
    }

    bool consistent(int v, int w) const {
        for (int u = 0; u < n_; ++u) {
            const int mu = map_[u];
            if (mu < 0) continue;
            if (((g1_.out_flat(v) >> u) & 1U) != ((g2_.out_flat(w) >> mu) & 1U)) return false;
            if (((g1_.in_flat(v) >> u) & 1U) != ((g2_.in_flat(w) >> mu) & 1U)) return false;
        }
        return true;
    }

    bool extend(int depth) {
        if (depth == n_) return true;
        const int v = order_[depth];
        const int a = g1_.half_order();
        const int lo = v < a ? 0 : a;
        for (int w = lo; w < lo + a; ++w) {
            if (used_ >> w & 1U) continue;
            if (degrees(g1_, v) != degrees(g2_, w)) continue;
            if (!consistent(v, w)) continue;
            map_[v] = w;
            used_ |= FlatMask{1} << w;
            if (extend(depth + 1)) return true;
            map_[v] = -1;
            used_ &= ~(FlatMask{1} << w);
        }
        return false;
    }

    const BipartiteDigraph& g1_;
    const BipartiteDigraph& g2_;
    int n_;
    std::vector<int> map_;
    std::vector<int> order_;
    FlatMask used_ = 0;
};

std::vector<int> identity(int a) {
    std::vector<int> p(a);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

std::vector<std::pair<int, int>> degree_multiset(const BipartiteDigraph& g) {
    std::vector<std::pair<int, int>> d;
    for (int f = 0; f < g.order(); ++f) {
        d.emplace_back(std::popcount(g.out_flat(f)), std::popcount(g.in_flat(f)));
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

IsoResult is_isomorphic(const BipartiteDigraph& g1, const BipartiteDigraph& g2) {
    if (g1.half_order() != g2.half_order() || g1.arc_count() != g2.arc_count() ||
        degree_multiset(g1) != degree_multiset(g2)) {
        return {};
    }
    const int a = g1.half_order();
    const auto id = identity(a);
    for (bool swap : {false, true}) {
        const BipartiteDigraph target = swap ? g2.relabel(id, id, true) : g2;
        IsoSearch search(g1, target);
        if (!search.run()) continue;
        std::vector<VertexId> mapping;
        for (int w : search.mapping()) {
            VertexId image = target.vertex(w);
            if (swap) image.side = opposite(image.side);
            mapping.push_back(image);
        }
        return {true, std::move(mapping), swap};
    }
    return {};
}

bool is_valid_isomorphism(const BipartiteDigraph& g1, const BipartiteDigraph& g2,
                          const std::vector<VertexId>& mapping) {
    if (g1.half_order() != g2.half_order() || g1.arc_count() != g2.arc_count()) return false;
    if (static_cast<int>(mapping.size()) != g1.order()) return false;
    std::vector<VertexId> sorted = mapping;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g2.vertices()) return false;
    for (const Arc& arc : g1.arcs()) {
        if (!g2.has_arc(mapping[g1.flat(arc.from)], mapping[g1.flat(arc.to)])) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

// Iterated color refinement: a vertex's color is its side, degrees, and the
// multisets of its out- and in-neighbors' colors. Colors are renumbered by
// sorted signature, so they are an isomorphism invariant.
std::vector<int> refine_colors(const BipartiteDigraph& g) {
    const int n = g.order();
    using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<int> color(n);
    {
        std::map<std::tuple<int, int, int>, int> ids;
        std::vector<std::tuple<int, int, int>> keys(n);
        for (int f = 0; f < n; ++f) {
            keys[f] = {f < g.half_order() ? 0 : 1, std::popcount(g.out_flat(f)),
                       std::popcount(g.in_flat(f))};
            ids[keys[f]] = 0;
        }
        int next = 0;
        for (auto& [k, id] : ids) id = next++;
        for (int f = 0; f < n; ++f) color[f] = ids[keys[f]];
    }
    int classes = *std::max_element(color.begin(), color.end()) + 1;
    while (true) {
        std::vector<Signature> sig(n);
        for (int f = 0; f < n; ++f) {
            std::vector<int> outs, ins;
            for (FlatMask m = g.out_flat(f); m != 0; m &= m - 1) outs.push_back(color[std::countr_zero(m)]);
            for (FlatMask m = g.in_flat(f); m != 0; m &= m - 1) ins.push_back(color[std::countr_zero(m)]);
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            sig[f] = {color[f], std::move(outs), std::move(ins)};
        }
        std::map<Signature, int> ids;
        for (const auto& s : sig) ids[s] = 0;
        int next = 0;
        for (auto& [k, id] : ids) id = next++;
        for (int f = 0; f < n; ++f) color[f] = ids[sig[f]];
        if (next == classes) break;
        classes = next;
    }
    return color;
}

// All orderings of `side` vertices (as side-local indices) that list color
// classes in ascending color order.
std::vector<std::vector<int>> cell_orders(const std::vector<int>& colors) {
    const int a = static_cast<int>(colors.size());
    std::vector<int> base(a);
    std::iota(base.begin(), base.end(), 0);
    std::stable_sort(base.begin(), base.end(), [&](int l, int r) { return colors[l] < colors[r]; });
    std::vector<std::pair<int, int>> cells;  // [begin, end)
    for (int i = 0; i < a;) {
        int j = i;
        while (j < a && colors[base[j]] == colors[base[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::vector<std::vector<int>> result;
    std::vector<int> current = base;
    // Odometer over the permutations of each cell.
    while (true) {
        result.push_back(current);
        std::size_t c = 0;
        for (; c < cells.size(); ++c) {
            auto first = current.begin() + cells[c].first;
            auto last = current.begin() + cells[c].second;
            if (std::next_permutation(first, last)) break;  // wraps to sorted when false
        }
        if (c == cells.size()) break;
    }
    return result;
}

using CanonKey = std::array<std::uint64_t, 2>;

}  // namespace

std::string canonical_form(const BipartiteDigraph& g) {
    const int a = g.half_order();
    if (a > 6) throw ResourceLimit("canonical_form is capped at a <= 6");
    const auto id = identity(a);

    std::optional<CanonKey> best_key;
    BipartiteDigraph best(a);
    for (bool swap : {false, true}) {
        const BipartiteDigraph h = swap ? g.relabel(id, id, true) : g;
        const auto colors = refine_colors(h);
        const std::vector<int> x_colors(colors.begin(), colors.begin() + a);
        const std::vector<int> y_colors(colors.begin() + a, colors.end());
        const auto x_orders = cell_orders(x_colors);
        const auto y_orders = cell_orders(y_colors);
        for (const auto& xo : x_orders) {
            for (const auto& yo : y_orders) {
                // Slot s is stored at bit 63 - s % 64 of word s / 64, so
                // comparing the words compares slot sequences lexicographically.
                CanonKey key{0, 0};
                int slot = 0;
                auto put = [&](bool present) {
                    if (present) key[slot / 64] |= std::uint64_t{1} << (63 - slot % 64);
                    ++slot;
                };
                for (int i = 0; i < a; ++i) {
                    for (int j = 0; j < a; ++j) put((h.out_mask(xv(xo[i])) >> yo[j]) & 1U);
                }
                for (int i = 0; i < a; ++i) {
                    for (int j = 0; j < a; ++j) put((h.out_mask(yv(yo[i])) >> xo[j]) & 1U);
                }
                if (best_key && key >= *best_key) continue;
                best_key = key;
                // xo[new] = old; relabel wants perm[old] = new.
                std::vector<int> xp(a), yp(a);
                for (int i = 0; i < a; ++i) {
                    xp[xo[i]] = i;
                    yp[yo[i]] = i;
                }
                best = h.relabel(xp, yp);
            }
        }
    }
    return serialize(best);
}

}  // namespace bbd
