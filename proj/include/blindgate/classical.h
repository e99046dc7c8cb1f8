// Copyright 2026 The Blindgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLINDGATE_CLASSICAL_H
#define BLINDGATE_CLASSICAL_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blindgate/simulator.h"

namespace blindgate {

inline constexpr size_t kMaxClassicalBits = 12;

/// A bijection on n-bit strings, stored as a lookup table. Bit 0 is the
/// least significant bit of the table index.
class ReversibleGate {
   public:
    /// Throws std::invalid_argument unless `table` is a permutation of [0, 2^n).
    static ReversibleGate from_table(std::vector<uint32_t> table);
    static ReversibleGate identity(size_t num_bits);
    /// x -> x xor mask.
    static ReversibleGate not_mask(size_t num_bits, uint32_t mask);
    /// Bit 0 controls bit 1.
    static ReversibleGate cnot();
    /// Bits 0 and 1 control bit 2.
    static ReversibleGate toffoli();
    /// Bit 0 controls a swap of bits 1 and 2.
    static ReversibleGate fredkin();
    static ReversibleGate swap();
    /// NOT, CNOT, SWAP, TOFFOLI, FREDKIN and their CX/CCX/CSWAP aliases.
    static std::optional<ReversibleGate> by_name(std::string_view name);

    size_t num_bits() const {
        return n_;
    }
    uint32_t operator()(uint32_t x) const {
        return table_[x];
    }
    const std::vector<uint32_t> &table() const {
        return table_;
    }
    ReversibleGate inverse() const;
    /// Applies `other` first, then this.
    ReversibleGate after(const ReversibleGate &other) const;
    bool operator==(const ReversibleGate &) const = default;

   private:
    ReversibleGate(size_t n, std::vector<uint32_t> table) : n_(n), table_(std::move(table)) {
    }
    size_t n_;
    std::vector<uint32_t> table_;
};

/// Level-1 elements are x -> x xor a. Level k conjugates every level-1
/// element into level k - 1.
bool is_in_tilde_level(const ReversibleGate &g, int k);

/// Smallest level in [1, max_k], or empty if none.
std::optional<int> tilde_level(const ReversibleGate &g, int max_k = 4);

/// A CNF formula over variables 1..num_vars. A literal is +v or -v.
struct CnfFormula {
    size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;

    /// Parses `p cnf <vars> <clauses>` then clauses of signed integers, each
    /// ended by 0. `c` lines are comments. Throws ParseError with the line.
    static CnfFormula parse_dimacs(std::string_view text);
    std::string to_dimacs() const;
    bool operator==(const CnfFormula &) const = default;
};

/// assignment[i] is the value of variable i + 1.
bool evaluate(const CnfFormula &formula, const std::vector<bool> &assignment);

/// Negates every literal of variable i + 1 where mask[i] is set.
CnfFormula apply_mask(const CnfFormula &formula, const std::vector<bool> &mask);

struct BlindedFormula {
    CnfFormula formula;
    std::vector<bool> mask;
};

/// Hides the formula behind a uniformly random variable-inversion mask.
BlindedFormula blind_sat(const CnfFormula &formula, Rng &rng);

/// assignment xor mask. Throws std::invalid_argument on a length mismatch.
std::vector<bool> unblind_assignment(const std::vector<bool> &assignment, const std::vector<bool> &mask);

/// First satisfying assignment in counting order, if any.
std::optional<std::vector<bool>> brute_force_solve(const CnfFormula &formula);

/// Random 3-CNF whose clauses are all satisfied by a random planted assignment.
CnfFormula random_planted_3cnf(size_t num_vars, size_t num_clauses, Rng &rng);

struct NoGoFact {
    std::string statement;
    bool holds;
};

struct NoGoReport {
    std::vector<NoGoFact> facts;
    size_t closure_samples = 0;
    size_t closure_violations = 0;

    bool all_hold() const;
};

/// Evidence that the classical level-2 gates are closed and miss Toffoli
/// and Fredkin: every controlled-NOT pattern on up to 3 bits is at level
/// at most 2, Toffoli and Fredkin are at level 3, and `closure_samples`
/// compositions of random level-2 gates on 3 bits stay at level 2.
NoGoReport demonstrate_no_go(uint64_t seed = 0, size_t closure_samples = 10000);

}  // namespace blindgate

#endif
