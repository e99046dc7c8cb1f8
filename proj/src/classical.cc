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

#include "blindgate/classical.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "blindgate/errors.h"

namespace blindgate {

namespace {

size_t bits_for_size(size_t size) {
    size_t n = 0;
    while ((size_t{1} << n) < size) {
        n++;
    }
    if ((size_t{1} << n) != size || n == 0) {
        throw std::invalid_argument("permutation table size must be a power of two of at least 2");
    }
    if (n > kMaxClassicalBits) {
        throw CapacityError("at most " + std::to_string(kMaxClassicalBits) + " bits are supported");
    }
    return n;
}

ReversibleGate from_function(size_t n, auto f) {
    std::vector<uint32_t> t(size_t{1} << n);
    for (uint32_t x = 0; x < t.size(); x++) {
        t[x] = f(x);
    }
    return ReversibleGate::from_table(std::move(t));
}

/// x -> P(P^-1(x) xor a).
ReversibleGate conjugate_not(const ReversibleGate &p, const ReversibleGate &p_inv, uint32_t a) {
    return from_function(p.num_bits(), [&](uint32_t x) {
        return p(p_inv(x) ^ a);
    });
}

/// Random level-2 gate on 3 bits as a product of NOT, CNOT and SWAP gates.
ReversibleGate random_affine(Rng &rng) {
    ReversibleGate g = ReversibleGate::identity(3);
    for (int step = 0; step < 8; step++) {
        uint32_t a = (uint32_t)rng.below(3);
        uint32_t b = (uint32_t)(a + 1 + rng.below(2)) % 3;
        switch (rng.below(3)) {
            case 0:
                g = ReversibleGate::not_mask(3, 1u << a).after(g);
                break;
            case 1:
                g = from_function(3, [&](uint32_t x) {
                        return x ^ (((x >> a) & 1) << b);
                    }).after(g);
                break;
            default:
                g = from_function(3, [&](uint32_t x) {
                        uint32_t ba = (x >> a) & 1, bb = (x >> b) & 1;
                        return (x & ~((1u << a) | (1u << b))) | (ba << b) | (bb << a);
                    }).after(g);
                break;
        }
    }
    return g;
}

}  // namespace

ReversibleGate ReversibleGate::from_table(std::vector<uint32_t> table) {
    size_t n = bits_for_size(table.size());
    std::vector<bool> seen(table.size());
    for (uint32_t y : table) {
        if (y >= table.size() || seen[y]) {
            throw std::invalid_argument("table is not a permutation");
        }
        seen[y] = true;
    }
    return ReversibleGate(n, std::move(table));
}

ReversibleGate ReversibleGate::identity(size_t num_bits) {
    return not_mask(num_bits, 0);
}

ReversibleGate ReversibleGate::not_mask(size_t num_bits, uint32_t mask) {
    if (num_bits == 0 || num_bits > kMaxClassicalBits || (mask >> num_bits) != 0) {
        throw std::invalid_argument("mask does not fit the bit count");
    }
    return from_function(num_bits, [mask](uint32_t x) {
        return x ^ mask;
    });
}

ReversibleGate ReversibleGate::cnot() {
    return from_function(2, [](uint32_t x) {
        return x ^ ((x & 1) << 1);
    });
}

ReversibleGate ReversibleGate::toffoli() {
    return from_function(3, [](uint32_t x) {
        return (x & 3) == 3 ? x ^ 4 : x;
    });
}

ReversibleGate ReversibleGate::fredkin() {
    return from_function(3, [](uint32_t x) {
        if ((x & 1) == 0) {
            return x;
        }
        return 1 | ((x >> 1) & 2) | ((x << 1) & 4);
    });
}

ReversibleGate ReversibleGate::swap() {
    return from_function(2, [](uint32_t x) {
        return ((x & 1) << 1) | ((x >> 1) & 1);
    });
}

std::optional<ReversibleGate> ReversibleGate::by_name(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) {
        return (char)std::toupper(c);
    });
    if (upper == "NOT" || upper == "X") {
        return not_mask(1, 1);
    }
    if (upper == "CNOT" || upper == "CX") {
        return cnot();
    }
    if (upper == "SWAP") {
        return swap();
    }
    if (upper == "TOFFOLI" || upper == "CCX") {
        return toffoli();
    }
    if (upper == "FREDKIN" || upper == "CSWAP") {
        return fredkin();
    }
    return std::nullopt;
}

ReversibleGate ReversibleGate::inverse() const {
    std::vector<uint32_t> inv(table_.size());
    for (uint32_t x = 0; x < table_.size(); x++) {
        inv[table_[x]] = x;
    }
    return ReversibleGate(n_, std::move(inv));
}

ReversibleGate ReversibleGate::after(const ReversibleGate &other) const {
    if (other.n_ != n_) {
        throw DimensionError("gates act on different numbers of bits");
    }
    std::vector<uint32_t> t(table_.size());
    for (uint32_t x = 0; x < t.size(); x++) {
        t[x] = table_[other.table_[x]];
    }
    return ReversibleGate(n_, std::move(t));
}

bool is_in_tilde_level(const ReversibleGate &g, int k) {
    if (k < 1) {
        throw std::invalid_argument("levels start at 1");
    }
    if (k == 1) {
        uint32_t a = g(0);
        for (uint32_t x = 0; x < g.table().size(); x++) {
            if (g(x) != (x ^ a)) {
                return false;
            }
        }
        return true;
    }
    ReversibleGate inv = g.inverse();
    for (uint32_t a = 1; a < g.table().size(); a++) {
        if (!is_in_tilde_level(conjugate_not(g, inv, a), k - 1)) {
            return false;
        }
    }
    return true;
}

std::optional<int> tilde_level(const ReversibleGate &g, int max_k) {
    for (int k = 1; k <= max_k; k++) {
        if (is_in_tilde_level(g, k)) {
            return k;
        }
    }
    return std::nullopt;
}

CnfFormula CnfFormula::parse_dimacs(std::string_view text) {
    CnfFormula f;
    bool have_header = false;
    size_t declared_clauses = 0;
    std::vector<int> current;
    std::istringstream in{std::string(text)};
    std::string raw;
    size_t line = 0;
    while (std::getline(in, raw)) {
        line++;
        std::istringstream words(raw);
        std::string first;
        if (!(words >> first) || first[0] == 'c' || first[0] == '%') {
            continue;
        }
        if (first == "p") {
            std::string kind;
            long long vars = -1, clauses = -1;
            if (have_header || !(words >> kind >> vars >> clauses) || kind != "cnf" || vars < 0 || clauses < 0) {
                throw ParseError(line, "malformed header; expected 'p cnf <vars> <clauses>'");
            }
            have_header = true;
            f.num_vars = (size_t)vars;
            declared_clauses = (size_t)clauses;
            continue;
        }
        if (!have_header) {
            throw ParseError(line, "clause before the 'p cnf' header");
        }
        std::istringstream tokens(raw);
        for (std::string tok; tokens >> tok;) {
            long long lit;
            try {
                size_t used;
                lit = std::stoll(tok, &used);
                if (used != tok.size()) {
                    throw std::invalid_argument(tok);
                }
            } catch (const std::exception &) {
                throw ParseError(line, "expected a signed integer literal, got '" + tok + "'");
            }
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if ((size_t)std::llabs(lit) > f.num_vars) {
                throw ParseError(line, "literal " + tok + " names a variable beyond " + std::to_string(f.num_vars));
            }
            current.push_back((int)lit);
        }
    }
    if (!have_header) {
        throw ParseError(line, "missing 'p cnf' header");
    }
    if (!current.empty()) {
        throw ParseError(line, "last clause is not terminated by 0");
    }
    if (f.clauses.size() != declared_clauses) {
        throw ParseError(
            line, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                      std::to_string(f.clauses.size()));
    }
    return f;
}

std::string CnfFormula::to_dimacs() const {
    std::string out = "p cnf " + std::to_string(num_vars) + " " + std::to_string(clauses.size()) + "\n";
    for (const auto &clause : clauses) {
        for (int lit : clause) {
            out += std::to_string(lit) + " ";
        }
        out += "0\n";
    }
    return out;
}

bool evaluate(const CnfFormula &formula, const std::vector<bool> &assignment) {
    if (assignment.size() != formula.num_vars) {
        throw std::invalid_argument(
            "assignment has " + std::to_string(assignment.size()) + " values for " +
            std::to_string(formula.num_vars) + " variables");
    }
    for (const auto &clause : formula.clauses) {
        bool sat = false;
        for (int lit : clause) {
            if (assignment[(size_t)std::abs(lit) - 1] == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) {
            return false;
        }
    }
    return true;
}

CnfFormula apply_mask(const CnfFormula &formula, const std::vector<bool> &mask) {
    if (mask.size() != formula.num_vars) {
        throw std::invalid_argument("mask length does not match the variable count");
    }
    CnfFormula out = formula;
    for (auto &clause : out.clauses) {
        for (int &lit : clause) {
            if (mask[(size_t)std::abs(lit) - 1]) {
                lit = -lit;
            }
        }
    }
    return out;
}

BlindedFormula blind_sat(const CnfFormula &formula, Rng &rng) {
    std::vector<bool> mask(formula.num_vars);
    for (size_t i = 0; i < mask.size(); i++) {
        mask[i] = rng.coin();
    }
    return {apply_mask(formula, mask), mask};
}

std::vector<bool> unblind_assignment(const std::vector<bool> &assignment, const std::vector<bool> &mask) {
    if (assignment.size() != mask.size()) {
        throw std::invalid_argument("assignment and mask lengths differ");
    }
    std::vector<bool> out(assignment.size());
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = assignment[i] != mask[i];
    }
    return out;
}

std::optional<std::vector<bool>> brute_force_solve(const CnfFormula &formula) {
    if (formula.num_vars > 24) {
        throw CapacityError("brute force is limited to 24 variables");
    }
    std::vector<bool> a(formula.num_vars);
    for (uint64_t x = 0; x < (uint64_t{1} << formula.num_vars); x++) {
        for (size_t i = 0; i < a.size(); i++) {
            a[i] = (x >> i) & 1;
        }
        if (evaluate(formula, a)) {
            return a;
        }
    }
    return std::nullopt;
}

CnfFormula random_planted_3cnf(size_t num_vars, size_t num_clauses, Rng &rng) {
    if (num_vars < 3) {
        throw std::invalid_argument("3-CNF needs at least 3 variables");
    }
    std::vector<bool> planted(num_vars);
    for (size_t i = 0; i < num_vars; i++) {
        planted[i] = rng.coin();
    }
    CnfFormula f;
    f.num_vars = num_vars;
    while (f.clauses.size() < num_clauses) {
        std::vector<int> clause;
        bool sat = false;
        while (clause.size() < 3) {
            int v = (int)rng.below(num_vars) + 1;
            if (std::any_of(clause.begin(), clause.end(), [v](int l) {
                    return std::abs(l) == v;
                })) {
                continue;
            }
            bool positive = rng.coin();
            sat |= planted[(size_t)v - 1] == positive;
            clause.push_back(positive ? v : -v);
        }
        if (sat) {
            f.clauses.push_back(std::move(clause));
        }
    }
    return f;
}

bool NoGoReport::all_hold() const {
    return std::all_of(facts.begin(), facts.end(), [](const NoGoFact &f) {
        return f.holds;
    });
}

NoGoReport demonstrate_no_go(uint64_t seed, size_t closure_samples) {
    NoGoReport report;

    bool controlled_ok = true;
    size_t controlled_count = 0;
    for (size_t n = 2; n <= 3; n++) {
        for (uint32_t control = 0; control < n; control++) {
            for (uint32_t mask = 1; mask < (1u << n); mask++) {
                if (mask & (1u << control)) {
                    continue;
                }
                auto g = from_function(n, [&](uint32_t x) {
                    return (x >> control) & 1 ? x ^ mask : x;
                });
                controlled_count++;
                auto level = tilde_level(g, 2);
                controlled_ok &= level.has_value();
            }
        }
    }
    report.facts.push_back(
        {"all " + std::to_string(controlled_count) + " controlled-NOT-pattern gates on 2 and 3 bits are at level <= 2",
         controlled_ok});

    for (const char *name : {"TOFFOLI", "FREDKIN"}) {
        auto level = tilde_level(*ReversibleGate::by_name(name), 4);
        report.facts.push_back({std::string(name) + " is not at level <= 2", !(level.has_value() && *level <= 2)});
        report.facts.push_back({std::string(name) + " is at level 3", level == 3});
    }

    Rng rng(seed);
    report.closure_samples = closure_samples;
    for (size_t s = 0; s < closure_samples; s++) {
        auto g = random_affine(rng).after(random_affine(rng));
        if (!is_in_tilde_level(g, 2)) {
            report.closure_violations++;
        }
    }
    report.facts.push_back(
        {std::to_string(closure_samples) + " compositions of random level-2 gates on 3 bits stay at level 2",
         report.closure_violations == 0});
    return report;
}

}  // namespace blindgate
