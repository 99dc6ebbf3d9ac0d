#include "nsv/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace nsv {

const char* to_string(VerificationStatus status) noexcept {
    switch (status) {
        case VerificationStatus::IntendedInvalid: return "intended-invalid";
        case VerificationStatus::ShortcutFree: return "shortcut-free";
        case VerificationStatus::ShortcutsFound: return "shortcuts-found";
    }
    return "unknown";
}

namespace {

bool congruent_succ(Label src, Label dst, int modulus) {
    long long diff = static_cast<long long>(dst) - static_cast<long long>(src) - 1;
    return ((diff % modulus) + modulus) % modulus == 0;
}

// Depth-first search over outputs in declaration order, values ascending.
// Pin/Domain/PairDomain are folded into the per-output domains up front;
// sums and successors forward-check once a single referenced output remains
// open; tables reject as soon as no row matches the assigned prefix.
// AltClause compares whole mappings, so it only runs on complete assignments.
struct Search {
    const Problem& p;
    MappingMode mode;
    int cap;
    bool exclude_intended;

    int n = 0;
    std::vector<std::vector<Label>> domains;      // per output, ascending
    std::vector<std::vector<int>> watchers;       // per output: constraint indices
    std::vector<const Constraint*> final_checks;  // AltClause constraints
    std::unordered_map<Label, int> concept_index;

    std::vector<Label> values;
    std::vector<char> used;  // by concept index; Bijection mode only

    std::vector<ConceptMapping> out;
    bool saturated = false;

    explicit Search(const Problem& problem, MappingMode m, int c, bool excl)
        : p(problem), mode(m), cap(c), exclude_intended(excl) {
        n = static_cast<int>(p.outputs.size());
        values.assign(n, 0);

        std::vector<Label> sorted_concepts = p.concepts;
        std::sort(sorted_concepts.begin(), sorted_concepts.end());
        for (std::size_t i = 0; i < sorted_concepts.size(); ++i)
            concept_index.emplace(sorted_concepts[i], static_cast<int>(i));
        used.assign(sorted_concepts.size(), 0);

        domains.assign(n, sorted_concepts);
        for (const auto& c0 : p.constraints) {
            if (const auto* pin = std::get_if<Pin>(&c0)) {
                restrict(pin->output, {pin->value});
            } else if (const auto* dom = std::get_if<Domain>(&c0)) {
                restrict(dom->output, dom->allowed);
            } else if (const auto* pd = std::get_if<PairDomain>(&c0)) {
                restrict(pd->first, {pd->low, pd->high});
                restrict(pd->second, {pd->low, pd->high});
            }
        }

        watchers.assign(n, {});
        for (std::size_t k = 0; k < p.constraints.size(); ++k) {
            const Constraint& c0 = p.constraints[k];
            if (std::holds_alternative<AltClause>(c0)) {
                final_checks.push_back(&c0);
                continue;
            }
            if (std::holds_alternative<Pin>(c0) ||
                std::holds_alternative<Domain>(c0) ||
                std::holds_alternative<PairDomain>(c0))
                continue;  // fully absorbed into the domains
            for (int ref : referenced_outputs(c0))
                watchers[ref].push_back(static_cast<int>(k));
        }
    }

    void restrict(int output, std::vector<Label> allowed) {
        std::sort(allowed.begin(), allowed.end());
        std::vector<Label> next;
        std::set_intersection(domains[output].begin(), domains[output].end(),
                              allowed.begin(), allowed.end(),
                              std::back_inserter(next));
        domains[output] = std::move(next);
    }

    bool value_open(int output, Label v) const {
        if (!std::binary_search(domains[output].begin(), domains[output].end(), v))
            return false;
        if (mode == MappingMode::Bijection) {
            auto it = concept_index.find(v);
            if (it == concept_index.end() || used[it->second]) return false;
        }
        return true;
    }

    // Consistency of one constraint against the prefix 0..assigned (inclusive).
    bool consistent(const Constraint& c, int assigned) const {
        if (const auto* s = std::get_if<WeightedSum>(&c)) {
            long long partial = 0;
            int open_output = -1;
            long long open_coeff = 0;
            bool multiple_open = false;
            for (const auto& t : s->terms) {
                if (t.output <= assigned) {
                    partial += static_cast<long long>(t.coefficient) * values[t.output];
                } else if (open_output == -1 || open_output == t.output) {
                    open_output = t.output;
                    open_coeff += t.coefficient;
                } else {
                    multiple_open = true;
                }
            }
            if (multiple_open) return true;
            if (open_output == -1) return partial == s->target;
            if (open_coeff == 0) return partial == s->target;
            long long need = s->target - partial;
            if (need % open_coeff != 0) return false;
            long long forced = need / open_coeff;
            if (forced < std::numeric_limits<Label>::min() ||
                forced > std::numeric_limits<Label>::max())
                return false;
            return value_open(open_output, static_cast<Label>(forced));
        }
        if (const auto* m = std::get_if<ModSucc>(&c)) {
            const bool src_set = m->src <= assigned;
            const bool dst_set = m->dst <= assigned;
            if (src_set && dst_set)
                return congruent_succ(values[m->src], values[m->dst], m->modulus);
            if (src_set) {
                for (Label v : domains[m->dst])
                    if (congruent_succ(values[m->src], v, m->modulus) &&
                        value_open(m->dst, v))
                        return true;
                return false;
            }
            if (dst_set) {
                for (Label v : domains[m->src])
                    if (congruent_succ(v, values[m->dst], m->modulus) &&
                        value_open(m->src, v))
                        return true;
                return false;
            }
            return true;
        }
        if (const auto* t = std::get_if<Table>(&c)) {
            for (const auto& row : t->rows) {
                bool match = true;
                for (std::size_t i = 0; i < t->outputs.size(); ++i) {
                    int o = t->outputs[i];
                    if (o <= assigned && values[o] != row[i]) {
                        match = false;
                        break;
                    }
                }
                if (match) return true;
            }
            return false;
        }
        if (const auto* s = std::get_if<PinSet>(&c)) {
            for (const auto& pin : s->pins)
                if (pin.output <= assigned && values[pin.output] != pin.value)
                    return false;
            return true;
        }
        return true;
    }

    // Returns false to abort the whole search (one solution past the cap).
    bool dfs(int pos) {
        if (pos == n) return emit();
        for (Label v : domains[pos]) {
            int used_idx = -1;
            if (mode == MappingMode::Bijection) {
                used_idx = concept_index.at(v);
                if (used[used_idx]) continue;
                used[used_idx] = 1;
            }
            values[pos] = v;
            bool ok = true;
            for (int k : watchers[pos])
                if (!consistent(p.constraints[k], pos)) {
                    ok = false;
                    break;
                }
            if (ok && !dfs(pos + 1)) {
                if (used_idx >= 0) used[used_idx] = 0;
                return false;
            }
            if (used_idx >= 0) used[used_idx] = 0;
        }
        return true;
    }

    bool emit() {
        ConceptMapping phi{values};
        for (const Constraint* c : final_checks)
            if (!evaluate_constraint(*c, phi, p.intended)) return true;
        if (exclude_intended && phi == p.intended) return true;
        out.push_back(std::move(phi));
        if (out.size() > static_cast<std::size_t>(cap)) {
            out.pop_back();
            saturated = true;
            return false;
        }
        return true;
    }
};

}  // namespace

Enumeration enumerate_valid(const Problem& p, MappingMode mode, int cap,
                            bool exclude_intended) {
    validate_problem(p);
    if (cap < 1) fail(ErrorKind::Argument, "model cap must be at least 1");
    if (mode == MappingMode::Bijection && p.outputs.size() != p.concepts.size())
        fail(ErrorKind::Mode,
             "bijection mode requires equally many outputs and concepts");

    Search search(p, mode, cap, exclude_intended);
    search.dfs(0);
    return Enumeration{std::move(search.out), search.saturated};
}

VerificationResult verify(const Problem& p, MappingMode mode, int cap) {
    validate_problem(p);
    if (cap < 1) fail(ErrorKind::Argument, "model cap must be at least 1");

    VerificationResult result;
    result.mode = mode;
    result.cap = cap;
    if (!is_valid(p, p.intended, mode)) {
        result.status = VerificationStatus::IntendedInvalid;
        return result;
    }
    Enumeration alternatives = enumerate_valid(p, mode, cap, /*exclude=*/true);
    if (alternatives.mappings.empty()) {
        result.status = VerificationStatus::ShortcutFree;
        return result;
    }
    result.status = VerificationStatus::ShortcutsFound;
    result.shortcuts = std::move(alternatives.mappings);
    result.saturated = alternatives.saturated;
    return result;
}

AmbiguityMeasures measures(const std::vector<ConceptMapping>& solutions,
                           bool saturated) {
    if (solutions.empty())
        fail(ErrorKind::Argument,
             "measures require a nonempty solution set (the intended mapping "
             "is assumed valid)");
    const std::size_t n = solutions.front().size();
    for (const auto& phi : solutions)
        if (phi.size() != n)
            fail(ErrorKind::Structural,
                 "solutions cover different output lists");

    AmbiguityMeasures m;
    m.multiplicity = static_cast<int>(solutions.size()) - 1;
    m.exact = !saturated;

    for (std::size_t i = 0; i < n; ++i) {
        const Label first = solutions.front()[i];
        for (const auto& phi : solutions)
            if (phi[i] != first) {
                m.disagreement_positions.push_back(static_cast<int>(i));
                break;
            }
    }

    // Max pairwise Hamming disagreement; it can only occur on disagreement
    // positions and cannot exceed their count, which bounds the scan.
    const int limit = static_cast<int>(m.disagreement_positions.size());
    for (std::size_t a = 0; a + 1 < solutions.size() && m.ambiguity < limit; ++a) {
        for (std::size_t b = a + 1; b < solutions.size() && m.ambiguity < limit; ++b) {
            int differ = 0;
            for (int pos : m.disagreement_positions)
                if (solutions[a][pos] != solutions[b][pos]) ++differ;
            m.ambiguity = std::max(m.ambiguity, differ);
        }
    }
    return m;
}

}  // namespace nsv
