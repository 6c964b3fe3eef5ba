#include "hnet/testkit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace hnet::testkit {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, n].
    int upto(int n) { return n <= 0 ? 0 : static_cast<int>(eng_() % static_cast<std::uint64_t>(n + 1)); }
    bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        std::shuffle(v.begin(), v.end(), eng_);
    }

private:
    std::mt19937_64 eng_;
};

const char* const kSymbols[] = {"R0", "R1", "R2"};

void add_boundaries(Hypernetwork& h, Rng& rng, const GenConfig& cfg) {
    const int nb = rng.upto(cfg.max_boundaries);
    for (int i = 0; i < nb; ++i)
        h.boundaries().add({ElementId("b" + std::to_string(i)), rng.chance(cfg.percolation_probability)});
}

void add_vertices(Hypernetwork& h, Rng& rng, const GenConfig& cfg) {
    const int nv = rng.upto(cfg.max_vertices);
    for (int i = 0; i < nv; ++i) {
        h.append(Vertex{ElementId("v" + std::to_string(i))});
        if (rng.chance(0.2)) h.append(AntiVertex{ElementId("v" + std::to_string(i))});
    }
    if (rng.chance(0.15)) h.append(AntiVertex{ElementId("x0")});
}

} // namespace

Hypernetwork gen_flat(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    Hypernetwork h;
    add_vertices(h, rng, cfg);
    return h;
}

Hypernetwork gen_valid(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    Hypernetwork h;
    add_boundaries(h, rng, cfg);
    add_vertices(h, rng, cfg);

    std::vector<ElementId> boundary_ids;
    for (const auto& [id, b] : h.boundaries()) boundary_ids.push_back(id);

    const int nh = h.size() == 0 ? 0 : rng.upto(cfg.max_hypersimplices);
    for (int i = 0; i < nh; ++i) {
        std::vector<ElementId> pool = h.insertion_order();
        const int cap = std::min<int>(cfg.max_arity, static_cast<int>(pool.size()));
        if (cap < 1) break;
        rng.shuffle(pool);
        // Prefer a recent hypersimplex as first pick so nesting shows up often.
        if (i > 0 && rng.chance(0.4)) {
            ElementId prev("h" + std::to_string(rng.upto(i - 1)));
            auto it = std::find(pool.begin(), pool.end(), prev);
            if (it != pool.end()) std::iter_swap(pool.begin(), it);
        }
        const int arity = 1 + rng.upto(cap - 1);
        Hypersimplex hs;
        hs.id = ElementId("h" + std::to_string(i));
        hs.agg = rng.chance(cfg.alpha_beta_ratio) ? Aggregation::Alpha : Aggregation::Beta;
        hs.relation = RelationSignature::anonymous(kSymbols[rng.upto(2)], static_cast<std::size_t>(arity));
        hs.participants.assign(pool.begin(), pool.begin() + arity);
        for (const auto& b : boundary_ids)
            if (rng.chance(0.4)) hs.tags.insert(b);
        h.append(std::move(hs));
    }
    return h;
}

namespace {

// Copy of `h` with one hypersimplex's tag toggled or participants reversed,
// and sometimes one extra vertex.
Hypernetwork perturb(const Hypernetwork& h, Rng& rng) {
    std::vector<Element> elements = h.elements();
    std::vector<std::size_t> hs_pos;
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (is_hypersimplex(elements[i])) hs_pos.push_back(i);
    if (!hs_pos.empty()) {
        auto& hs = std::get<Hypersimplex>(elements[hs_pos[static_cast<std::size_t>(rng.upto(static_cast<int>(hs_pos.size()) - 1))]]);
        if (!h.boundaries().empty() && rng.chance(0.5)) {
            const ElementId b = h.boundaries().begin()->first;
            if (hs.tags.count(b))
                hs.tags.erase(b);
            else
                hs.tags.insert(b);
        } else {
            std::reverse(hs.participants.begin(), hs.participants.end());
        }
    }
    if (rng.chance(0.5)) elements.push_back(Vertex{ElementId("w" + std::to_string(rng.upto(3)))});
    return Hypernetwork::assemble(std::move(elements), h.boundaries());
}

} // namespace

std::pair<Hypernetwork, Hypernetwork> gen_pair(const GenConfig& cfg) {
    GenConfig a = cfg;
    a.seed = cfg.seed * 2 + 1;
    Hypernetwork first = gen_valid(a);
    if (cfg.seed % 2 == 0) {
        Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
        return {first, perturb(first, rng)};
    }
    GenConfig b = cfg;
    b.seed = cfg.seed * 2 + 2;
    return {std::move(first), gen_valid(b)};
}

std::pair<Hypernetwork, Hypernetwork> gen_sub_pair(const GenConfig& cfg) {
    Hypernetwork big = gen_valid(cfg);
    Rng rng(cfg.seed + 0x5bd1e995ULL);

    std::set<ElementId> keep;
    std::function<void(const ElementId&)> take = [&](const ElementId& id) {
        if (!keep.insert(id).second) return;
        if (const auto* hs = as_hypersimplex(*big.find(id)))
            for (const auto& p : hs->participants) take(p);
    };
    for (const auto& id : big.insertion_order())
        if (rng.chance(0.35)) take(id);

    std::vector<Element> picked;
    for (const auto& e : big.elements())
        if (keep.count(id_of(e))) picked.push_back(e);
    if (picked.size() > kOracleSubhnLimit) picked.resize(kOracleSubhnLimit);

    // Occasionally flip one tag so the verdict changes.
    if (rng.chance(0.3) && !big.boundaries().empty()) {
        for (auto& e : picked) {
            if (auto* hs = std::get_if<Hypersimplex>(&e)) {
                const ElementId b = big.boundaries().begin()->first;
                if (hs->tags.count(b))
                    hs->tags.erase(b);
                else
                    hs->tags.insert(b);
                break;
            }
        }
    }

    // The truncated selection may drop participants; that is fine for the
    // relation, which looks at elements only.
    Hypernetwork small = Hypernetwork::assemble(std::move(picked), big.boundaries());
    if (big.size() > kOracleSubhnLimit) {
        std::vector<Element> trimmed(big.elements().begin(),
                                     big.elements().begin() + static_cast<std::ptrdiff_t>(kOracleSubhnLimit));
        big = Hypernetwork::assemble(std::move(trimmed), big.boundaries());
    }
    return {std::move(small), std::move(big)};
}

int nesting_depth(const Hypernetwork& h) {
    std::map<ElementId, int> depth;
    std::function<int(const ElementId&)> of = [&](const ElementId& id) -> int {
        auto it = depth.find(id);
        if (it != depth.end()) return it->second;
        depth[id] = 0;  // cycle guard
        const Element* e = h.find(id);
        int d = 0;
        if (const auto* hs = e ? as_hypersimplex(*e) : nullptr) {
            d = 1;
            for (const auto& p : hs->participants) d = std::max(d, 1 + of(p));
        }
        return depth[id] = d;
    };
    int best = 0;
    for (const auto& id : h.insertion_order()) best = std::max(best, of(id));
    return best;
}

namespace {

std::set<std::string> flat_ids(const Hypernetwork& h) {
    std::set<std::string> ids;
    for (const auto& e : h.elements()) {
        if (std::holds_alternative<Hypersimplex>(e))
            throw OperandNotFlat("set oracle needs vertex-only operands");
        ids.insert(std::holds_alternative<Vertex>(e) ? std::get<Vertex>(e).id.str()
                                                     : "~" + std::get<AntiVertex>(e).excludes.str());
    }
    return ids;
}

} // namespace

SetOps oracle_set_ops(const Hypernetwork& h1, const Hypernetwork& h2) {
    const auto a = flat_ids(h1);
    const auto b = flat_ids(h2);
    SetOps out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out.union_ids, out.union_ids.end()));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out.intersection_ids, out.intersection_ids.end()));
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out.difference_ids, out.difference_ids.end()));
    return out;
}

namespace {

bool same_element(const Element& a, const Element& b);

bool same_hs(const Hypersimplex& a, const Hypersimplex& b) {
    if (a.id.str() != b.id.str()) return false;
    if (a.tags != b.tags) return false;
    if (a.conflict.has_value() != b.conflict.has_value()) return false;
    if (a.conflict) {
        auto snap = [](const std::shared_ptr<const Element>& x, const std::shared_ptr<const Element>& y) {
            return x && y ? same_element(*x, *y) : x == y;
        };
        return snap(a.conflict->left, b.conflict->left) && snap(a.conflict->right, b.conflict->right);
    }
    if (a.agg != b.agg) return false;
    if (a.relation.symbol != b.relation.symbol || a.relation.roles != b.relation.roles) return false;
    if (a.participants.size() != b.participants.size()) return false;
    if (a.agg == Aggregation::Alpha) {
        for (std::size_t i = 0; i < a.participants.size(); ++i)
            if (a.participants[i].str() != b.participants[i].str()) return false;
        return true;
    }
    std::multiset<std::string> pa, pb;
    for (const auto& p : a.participants) pa.insert(p.str());
    for (const auto& p : b.participants) pb.insert(p.str());
    return std::set<std::string>(pa.begin(), pa.end()) == std::set<std::string>(pb.begin(), pb.end());
}

bool same_element(const Element& a, const Element& b) {
    if (const auto* va = std::get_if<Vertex>(&a)) {
        const auto* vb = std::get_if<Vertex>(&b);
        return vb && va->id.str() == vb->id.str();
    }
    if (const auto* xa = std::get_if<AntiVertex>(&a)) {
        const auto* xb = std::get_if<AntiVertex>(&b);
        return xb && xa->excludes.str() == xb->excludes.str();
    }
    const auto* hb = std::get_if<Hypersimplex>(&b);
    return hb && same_hs(std::get<Hypersimplex>(a), *hb);
}

} // namespace

bool oracle_subhn(const Hypernetwork& h_small, const Hypernetwork& h_big) {
    if (h_small.size() > kOracleSubhnLimit || h_big.size() > kOracleSubhnLimit)
        throw TooLarge("exhaustive sub-hypernetwork oracle is limited to 8 elements per operand");
    for (const auto& e : h_small.elements()) {
        bool matched = false;
        for (const auto& f : h_big.elements()) matched = matched || same_element(e, f);
        if (!matched) return false;
    }
    return true;
}

} // namespace hnet::testkit
