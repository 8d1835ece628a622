#pragma once

// Brute-force reference implementations used only by tests. They share no
// code path with the library beyond the IndexSet container.

#include "votedim/certificates.hpp"
#include "votedim/cover.hpp"
#include "votedim/game.hpp"
#include "votedim/separation.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace votedim::oracle {

using Predicate = std::function<bool(std::uint64_t)>;

// mpq_class does not reduce on construction.
inline Rational frac(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Winning coalitions whose every one-member removal loses, by full scan.
inline std::vector<Coalition> minimal_winning(const Predicate& wins, int n)
{
    std::vector<Coalition> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (!wins(m))
            continue;
        bool minimal = true;
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1U)
                minimal = minimal && !wins(m & ~(std::uint64_t{1} << i));
        if (minimal)
            out.push_back(Coalition::from_mask(m, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool contains_edge(std::uint64_t s, const Hypergraph& h)
{
    for (const auto& e : h.edges())
        if ((e.mask() & s) == e.mask())
            return true;
    return false;
}

// Every subset tested: independent, and each one-node extension is not.
inline std::vector<NodeSet> maximal_independent(const Hypergraph& h)
{
    const int t = h.node_count();
    std::vector<NodeSet> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << t); ++s) {
        if (contains_edge(s, h))
            continue;
        bool maximal = true;
        for (int v = 0; v < t && maximal; ++v) {
            const std::uint64_t b = std::uint64_t{1} << v;
            if ((s & b) == 0 && !contains_edge(s | b, h))
                maximal = false;
        }
        if (maximal)
            out.push_back(NodeSet::from_mask(s, t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Smallest k such that some k of the candidates cover every node, by trying
// all combinations of each size in turn.
inline int cover_number(const std::vector<NodeSet>& candidates, int t)
{
    const std::uint64_t all = t == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
    if (all == 0)
        return 0;
    const int c = static_cast<int>(candidates.size());
    for (int k = 1; k <= c; ++k) {
        std::vector<bool> pick(static_cast<std::size_t>(c), false);
        std::fill(pick.begin(), pick.begin() + k, true);
        do {
            std::uint64_t u = 0;
            for (int i = 0; i < c; ++i)
                if (pick[static_cast<std::size_t>(i)])
                    u |= candidates[static_cast<std::size_t>(i)].mask();
            if (u == all)
                return k;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return -1;
}

// Searches integer weights in [0, max_weight] and every integer quota.
// Complete for n <= 4 with max_weight >= 3: every threshold function on at
// most four inputs has an integer realization with weights at most 3.
inline bool separable_by_small_weights(const SeparationInstance& inst, int max_weight)
{
    const int n = inst.n;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    auto weigh = [&](const Coalition& c) {
        int s = 0;
        for (int i : c.indices())
            s += w[static_cast<std::size_t>(i - 1)];
        return s;
    };
    std::function<bool(int)> rec = [&](int i) {
        if (i == n) {
            int lowest_win = 1 << 30;
            for (const auto& c : inst.winning_constraints)
                lowest_win = std::min(lowest_win, weigh(c));
            int highest_lose = -(1 << 30);
            for (const auto& c : inst.losing_targets)
                highest_lose = std::max(highest_lose, weigh(c));
            return highest_lose < lowest_win;
        }
        for (int v = 0; v <= max_weight; ++v) {
            w[static_cast<std::size_t>(i)] = v;
            if (rec(i + 1))
                return true;
        }
        return false;
    };
    return rec(0);
}

// Random antichain of minimal winning coalitions on n members.
inline ExplicitGame random_explicit_game(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> count(1, 2 * n);
    std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << n) - 1);
    std::vector<Coalition> listed;
    const int k = count(rng);
    for (int i = 0; i < k; ++i)
        listed.push_back(Coalition::from_mask(mask(rng), n));
    return ExplicitGame::from_minimal(n, listed);
}

// Intersection of two or three random integer-weighted games.
inline SimpleGameExpr random_intersection_game(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> parts(2, 3);
    std::uniform_int_distribution<int> weight(0, 4);
    Intersection inter;
    const int p = parts(rng);
    for (int j = 0; j < p; ++j) {
        std::vector<Rational> w;
        int total = 0;
        for (int i = 0; i < n; ++i) {
            w.emplace_back(weight(rng));
            total += w.back().get_num().get_si();
        }
        std::uniform_int_distribution<int> quota(1, std::max(1, total));
        inter.parts.emplace_back(WeightedGame(std::move(w), quota(rng)));
    }
    return inter;
}

// Two-coalition balance certificates found by splitting pairs of minimal
// winning coalitions: L1 and L2 share W1 & W2 and divide W1 ^ W2 between them,
// so the incidence counts match by construction. Stops after `limit` finds.
inline std::vector<BalanceCertificate> split_certificates(const SimpleGameExpr& g, std::size_t limit)
{
    const int n = g.member_count();
    const auto table = winning_table(g);
    const auto mw = minimal_winning(g);
    std::vector<BalanceCertificate> out;
    for (std::size_t a = 0; a < mw.size(); ++a) {
        for (std::size_t b = a + 1; b < mw.size(); ++b) {
            const std::uint64_t w1 = mw[a].mask();
            const std::uint64_t w2 = mw[b].mask();
            const std::uint64_t common = w1 & w2;
            const std::uint64_t spread = w1 ^ w2;
            // enumerate the submasks of spread; each unordered split once
            for (std::uint64_t split = spread;; split = (split - 1) & spread) {
                const std::uint64_t l1 = common | split;
                const std::uint64_t l2 = common | (spread & ~split);
                if (l1 < l2 && !table[l1] && !table[l2]) {
                    out.push_back({{Coalition::from_mask(l1, n), Coalition::from_mask(l2, n)},
                                   {mw[a], mw[b]}});
                    if (out.size() >= limit)
                        return out;
                }
                if (split == 0)
                    break;
            }
        }
    }
    return out;
}

}  // namespace votedim::oracle
