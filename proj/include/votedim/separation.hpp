#pragma once

#include "votedim/game.hpp"

#include <string>
#include <variant>
#include <vector>

namespace votedim {

// is_nonseparable_exhaustive refuses games above this member count.
inline constexpr int kSeparationMemberLimit = 14;

// Can one weighted game make every coalition in winning_constraints win while
// every coalition in losing_targets loses?
struct SeparationInstance {
    int n = 0;
    std::vector<Coalition> winning_constraints;
    std::vector<Coalition> losing_targets;
};

// Throws InvalidArgument / DimensionMismatch on an ill-formed instance.
void validate(const SeparationInstance& instance);

// weight(W) >= quota on every winning constraint, weight(L) <= quota - 1 on
// every losing target, all weights >= 0.
struct Separable {
    std::vector<Rational> weights;
    Rational quota;
};

// Nonnegative multipliers on the constraints
//     a_m >= 0,  a(W) - quota >= 0,  quota - a(L) >= 1
// whose combination has zero coefficients and a positive right-hand side,
// i.e. 0 >= (positive): the system is infeasible.
struct NotSeparable {
    std::vector<Rational> nonnegativity;  // per member
    std::vector<Rational> winning;        // per winning constraint
    std::vector<Rational> losing;         // per losing target
    std::string farkas_note;
};

using SeparationResult = std::variant<Separable, NotSeparable>;

// Exact decision by Fourier-Motzkin elimination over the rationals.
//
// The strict requirement weight(L) < quota is modelled as weight(L) <=
// quota - 1. This loses nothing: a rational solution with a positive gap g
// scales by 1/g to a solution with gap 1, and gap 1 is strictly feasible.
// Winning constraints that contain another winning constraint are implied
// under nonnegative weights and are dropped before elimination.
SeparationResult lp_feasible(const SeparationInstance& instance);

// Direct substitution of a witness into every constraint of the instance.
bool verify_witness(const SeparationInstance& instance, const Separable& witness);

// Recombines the multipliers and checks that they yield 0 >= (positive).
bool verify_farkas(const SeparationInstance& instance, const NotSeparable& proof);

// True iff no weighted game containing g makes every coalition of
// `losing_set` lose. Ground truth by the separation LP over all minimal
// winning coalitions. ResourceGuard above kSeparationMemberLimit;
// InvalidArgument if some element of losing_set is winning.
bool is_nonseparable_exhaustive(const SimpleGameExpr& g, const std::vector<Coalition>& losing_set);

}  // namespace votedim
