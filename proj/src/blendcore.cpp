#include "cliffpar/blendcore.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace cliffpar {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            // Path halving keeps trees shallow.
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); }
};

void require_same_ground(const FinitePartition& p1, const FinitePartition& p2) {
    if (p1.ground_size() != p2.ground_size())
        throw std::domain_error("partitions have different ground sizes");
}

// Elements where the P1-block and the P2-block coincide.
std::vector<bool> agreement_locus(const FinitePartition& p1, const FinitePartition& p2) {
    std::vector<bool> agree(static_cast<std::size_t>(p1.ground_size()));
    for (int x = 0; x < p1.ground_size(); ++x)
        agree[static_cast<std::size_t>(x)] = p1.block_of(x) == p2.block_of(x);
    return agree;
}

}  // namespace

FinitePartition::FinitePartition(int ground_size, std::vector<std::vector<int>> blocks)
    : n_(ground_size), blocks_(std::move(blocks)), index_of_(0) {
    if (n_ <= 0) throw std::domain_error("FinitePartition: ground size must be positive");
    index_of_.assign(static_cast<std::size_t>(n_), -1);
    for (auto& block : blocks_) {
        if (block.empty()) throw std::domain_error("FinitePartition: empty block");
        std::sort(block.begin(), block.end());
        for (int x : block) {
            if (x < 0 || x >= n_)
                throw std::domain_error("FinitePartition: element out of range");
            if (index_of_[static_cast<std::size_t>(x)] != -1)
                throw std::domain_error("FinitePartition: element in two blocks");
            index_of_[static_cast<std::size_t>(x)] = 0;  // provisional
        }
    }
    for (int x = 0; x < n_; ++x) {
        if (index_of_[static_cast<std::size_t>(x)] == -1)
            throw std::domain_error("FinitePartition: element missing from all blocks");
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& u, const auto& v) { return u.front() < v.front(); });
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (int x : blocks_[b]) index_of_[static_cast<std::size_t>(x)] = static_cast<int>(b);
}

FinitePartition FinitePartition::discrete(int n) {
    std::vector<std::vector<int>> blocks;
    for (int x = 0; x < n; ++x) blocks.push_back({x});
    return FinitePartition(n, std::move(blocks));
}

FinitePartition FinitePartition::single_block(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return FinitePartition(n, {all});
}

FinitePartition FinitePartition::from_class_ids(const std::vector<int>& class_of) {
    std::map<int, std::vector<int>> fibres;
    for (std::size_t x = 0; x < class_of.size(); ++x)
        fibres[class_of[x]].push_back(static_cast<int>(x));
    std::vector<std::vector<int>> blocks;
    for (auto& [id, block] : fibres) {
        (void)id;
        blocks.push_back(std::move(block));
    }
    return FinitePartition(static_cast<int>(class_of.size()), std::move(blocks));
}

int FinitePartition::block_index_of(int x) const {
    if (x < 0 || x >= n_) throw std::domain_error("FinitePartition: element out of range");
    return index_of_[static_cast<std::size_t>(x)];
}

const std::vector<int>& FinitePartition::block_of(int x) const {
    return blocks_[static_cast<std::size_t>(block_index_of(x))];
}

bool FinitePartition::refines(const FinitePartition& coarser) const {
    require_same_ground(*this, coarser);
    for (const auto& block : blocks_) {
        for (int x : block) {
            if (!coarser.same_block(block.front(), x)) return false;
        }
    }
    return true;
}

bool FinitePartition::operator<(const FinitePartition& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    return blocks_ < other.blocks_;
}

FinitePartition join_partitions(const FinitePartition& p1, const FinitePartition& p2) {
    require_same_ground(p1, p2);
    UnionFind uf(p1.ground_size());
    for (const auto& block : p1.blocks())
        for (int x : block) uf.unite(block.front(), x);
    for (const auto& block : p2.blocks())
        for (int x : block) uf.unite(block.front(), x);
    std::vector<int> class_of(static_cast<std::size_t>(p1.ground_size()));
    for (int x = 0; x < p1.ground_size(); ++x) class_of[static_cast<std::size_t>(x)] = uf.find(x);
    return FinitePartition::from_class_ids(class_of);
}

bool is_blend(const FinitePartition& p3, const FinitePartition& p1, const FinitePartition& p2) {
    require_same_ground(p3, p1);
    require_same_ground(p3, p2);
    for (int x = 0; x < p3.ground_size(); ++x) {
        if (p3.block_of(x) != p1.block_of(x) && p3.block_of(x) != p2.block_of(x)) return false;
    }
    return true;
}

FinitePartition blend_from_seed(const BlendSeed& d, const FinitePartition& p1,
                                const FinitePartition& p2) {
    require_same_ground(p1, p2);
    const FinitePartition join = join_partitions(p1, p2);
    std::set<int> chosen_classes;
    for (int x : d) {
        if (x < 0 || x >= p1.ground_size())
            throw std::domain_error("blend_from_seed: seed index out of range");
        chosen_classes.insert(join.block_index_of(x));
    }
    // Inside the saturation of the seed the first relation wins.
    std::vector<std::vector<int>> blocks;
    std::set<std::pair<int, int>> seen;
    for (int x = 0; x < p1.ground_size(); ++x) {
        const bool in_b = chosen_classes.count(join.block_index_of(x)) != 0;
        const FinitePartition& source = in_b ? p1 : p2;
        const std::pair<int, int> key(in_b ? 1 : 2, source.block_index_of(x));
        if (seen.insert(key).second) blocks.push_back(source.block_of(x));
    }
    return FinitePartition(p1.ground_size(), std::move(blocks));
}

BlendSeed seed_from_blend(const FinitePartition& p3, const FinitePartition& p1,
                          const FinitePartition& p2) {
    if (!is_blend(p3, p1, p2)) throw std::domain_error("seed_from_blend: P3 is not a blend");
    BlendSeed d;
    for (int x = 0; x < p3.ground_size(); ++x) {
        if (p1.block_of(x) == p3.block_of(x)) d.insert(x);
    }
    return d;
}

bool seeds_equivalent(const BlendSeed& d1, const BlendSeed& d2, const FinitePartition& p1,
                      const FinitePartition& p2) {
    require_same_ground(p1, p2);
    const FinitePartition join = join_partitions(p1, p2);
    const std::vector<bool> agree = agreement_locus(p1, p2);
    auto relevant_classes = [&](const BlendSeed& d) {
        std::set<int> classes;
        for (int x : d) {
            if (x < 0 || x >= p1.ground_size())
                throw std::domain_error("seeds_equivalent: seed index out of range");
            if (!agree[static_cast<std::size_t>(x)]) classes.insert(join.block_index_of(x));
        }
        return classes;
    };
    return relevant_classes(d1) == relevant_classes(d2);
}

std::set<FinitePartition> enumerate_blends(const FinitePartition& p1, const FinitePartition& p2,
                                           int ground_bound) {
    require_same_ground(p1, p2);
    if (p1.ground_size() > ground_bound)
        throw ResourceError("enumerate_blends: ground size " +
                            std::to_string(p1.ground_size()) + " exceeds bound " +
                            std::to_string(ground_bound));
    const FinitePartition join = join_partitions(p1, p2);
    const int m = static_cast<int>(join.blocks().size());
    std::set<FinitePartition> result;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        std::vector<std::vector<int>> blocks;
        std::set<std::pair<int, int>> seen;
        for (int x = 0; x < p1.ground_size(); ++x) {
            const int jc = join.block_index_of(x);
            const bool first = (mask >> jc) & 1UL;
            const FinitePartition& source = first ? p1 : p2;
            const std::pair<int, int> key(first ? 1 : 2, source.block_index_of(x));
            if (seen.insert(key).second) blocks.push_back(source.block_of(x));
        }
        result.insert(FinitePartition(p1.ground_size(), std::move(blocks)));
    }
    return result;
}

SubsetVerdict verify_subset_property(const FinitePartition& p1, const FinitePartition& p2,
                                     const FinitePartition& p3) {
    require_same_ground(p1, p2);
    require_same_ground(p1, p3);
    SubsetVerdict verdict{true, true, std::nullopt};
    for (const auto& block : p3.blocks()) {
        for (std::size_t s = 0; s < block.size() && verdict.hypothesis_holds; ++s) {
            for (std::size_t t = s + 1; t < block.size(); ++t) {
                if (!p1.same_block(block[s], block[t]) && !p2.same_block(block[s], block[t])) {
                    verdict.hypothesis_holds = false;
                    break;
                }
            }
        }
    }
    for (int x = 0; x < p3.ground_size() && verdict.conclusion_holds; ++x) {
        const auto& c3 = p3.block_of(x);
        const auto& c1 = p1.block_of(x);
        const auto& c2 = p2.block_of(x);
        const bool in1 = std::includes(c1.begin(), c1.end(), c3.begin(), c3.end());
        const bool in2 = std::includes(c2.begin(), c2.end(), c3.begin(), c3.end());
        if (!in1 && !in2) {
            verdict.conclusion_holds = false;
            if (verdict.hypothesis_holds) verdict.violator = x;
        }
    }
    return verdict;
}

bool is_union_of_blocks(const FinitePartition& p, const std::set<int>& b) {
    for (int x : b) {
        if (x < 0 || x >= p.ground_size())
            throw std::domain_error("is_union_of_blocks: element out of range");
        for (int y : p.block_of(x)) {
            if (b.count(y) == 0) return false;
        }
    }
    return true;
}

std::vector<FinitePartition> all_partitions(int n, int ground_bound) {
    if (n <= 0) throw std::domain_error("all_partitions: ground size must be positive");
    if (n > ground_bound)
        throw ResourceError("all_partitions: ground size " + std::to_string(n) +
                            " exceeds bound " + std::to_string(ground_bound));
    std::vector<FinitePartition> result;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    // Restricted growth strings: rgs[0] = 0 and rgs[i] <= max(prefix) + 1.
    auto emit = [&](auto&& self, int i, int max_used) -> void {
        if (i == n) {
            result.push_back(FinitePartition::from_class_ids(rgs));
            return;
        }
        for (int c = 0; c <= max_used + 1; ++c) {
            rgs[static_cast<std::size_t>(i)] = c;
            self(self, i + 1, std::max(max_used, c));
        }
    };
    emit(emit, 1, 0);
    return result;
}

std::string to_string(const FinitePartition& p) {
    std::string out = "{";
    for (std::size_t b = 0; b < p.blocks().size(); ++b) {
        if (b > 0) out += ",";
        out += "{";
        const auto& block = p.blocks()[b];
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(block[i] + 1);
        }
        out += "}";
    }
    out += "}";
    return out;
}

}  // namespace cliffpar
