#pragma once

#include "votedim/index_set.hpp"
#include "votedim/rational.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace votedim {

// Exhaustive scans over 2^n coalitions are refused above this member count.
inline constexpr int kExhaustiveMemberLimit = 20;

// Winning iff the weight sum of the coalition is at least the quota.
class WeightedGame {
public:
    // Throws InvalidArgument on a negative weight.
    WeightedGame(std::vector<Rational> weights, Rational quota);

    // Unit weights on all n members.
    static WeightedGame uniform(int n, Rational quota);

    int member_count() const { return static_cast<int>(weights_.size()); }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& quota() const { return quota_; }

    Rational weight_of(const Coalition& c) const;

private:
    std::vector<Rational> weights_;
    Rational quota_;
};

bool weighted_contains(const WeightedGame& g, const Coalition& c);

// A game listed by its winning coalitions.
//
// Only the inclusion-minimal listed coalitions are kept for evaluation;
// membership is "contains some minimal winning coalition". Whether the
// original list was already upward closed is recorded for check_monotone.
class ExplicitGame {
public:
    // Reduces the list to its minimal elements and records closure.
    ExplicitGame(int n, std::vector<Coalition> winning);

    // Trusted constructor from an antichain of minimal winning coalitions.
    static ExplicitGame from_minimal(int n, std::vector<Coalition> minimal);

    int member_count() const { return n_; }
    const std::vector<Coalition>& minimal_winning() const { return minimal_; }
    bool listed_upward_closed() const { return listed_closed_; }

    bool contains(const Coalition& c) const;

private:
    ExplicitGame() = default;

    int n_ = 0;
    std::vector<Coalition> minimal_;
    bool listed_closed_ = true;
};

class SimpleGameExpr;

struct Intersection {
    std::vector<SimpleGameExpr> parts;
};

struct Union {
    std::vector<SimpleGameExpr> parts;
};

// A monotone game: explicit, weighted, or a union/intersection of games.
class SimpleGameExpr {
public:
    using Node = std::variant<ExplicitGame, WeightedGame, Intersection, Union>;

    // Throws InvalidArgument for empty compositions or parts of differing size.
    SimpleGameExpr(ExplicitGame g);
    SimpleGameExpr(WeightedGame g);
    SimpleGameExpr(Intersection g);
    SimpleGameExpr(Union g);

    int member_count() const { return n_; }
    const Node& node() const { return *node_; }

    bool is_explicit() const { return std::holds_alternative<ExplicitGame>(*node_); }

private:
    std::shared_ptr<const Node> node_;
    int n_ = 0;
};

bool simple_contains(const SimpleGameExpr& g, const Coalition& c);

// True iff the listed winning family of an explicit game is upward closed.
// Throws InvalidArgument for non-explicit input and ResourceGuard above the
// exhaustive limit.
bool check_monotone(const SimpleGameExpr& g);

// Exhaustive conversion; ResourceGuard above kExhaustiveMemberLimit.
ExplicitGame to_explicit(const SimpleGameExpr& g);

// Membership of every coalition, indexed by mask. ResourceGuard above
// kExhaustiveMemberLimit.
std::vector<bool> winning_table(const SimpleGameExpr& g);

// Winning coalitions whose proper subsets all lose, in canonical order.
// Explicit games answer from their stored antichain; every other form is
// scanned exhaustively under the member limit.
std::vector<Coalition> minimal_winning(const SimpleGameExpr& g);

}  // namespace votedim
