#pragma once

#include "votedim/eu_council.hpp"
#include "votedim/json_io.hpp"

#include <string>
#include <vector>

namespace votedim {

enum class StepStatus { Pass, Fail, Skip };

struct ProofStep {
    std::string name;
    StepStatus status = StepStatus::Skip;
    std::string detail;
};

// Ordered record of the lower-bound replay. Rationals appear as fractions.
struct ProofTranscript {
    std::string data_source;
    std::vector<std::string> notes;
    std::vector<ProofStep> steps;
    std::string conclusion;

    bool verified() const;
};

// The 21 maximal sets expected for the listed family, node numbers 1..15.
const std::vector<std::vector<int>>& expected_maximal_sets();

// Replays the full argument on a member table:
//   1. L1..L15 lose and W1..W12 win
//   2. the 75 pair certificates are built and verify
//   3. the 5 triple certificates verify
//   4. the maximal independent sets are exactly the expected 21
//   5. no 7-cover exists, by exhaustive search
//   6. both dual weightings verify and jointly refute a 7-cover
//   7. the cover number is 8
// Never throws for data-dependent failures; they become failed steps.
ProofTranscript run_proof(const eu::MemberTable& table, std::string data_source);

std::string render_text(const ProofTranscript& t);
json_io::Json to_json(const ProofTranscript& t);

}  // namespace votedim
