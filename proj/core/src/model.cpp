#include "nsv/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace nsv {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Structural: return "structural";
        case ErrorKind::Argument: return "argument";
        case ErrorKind::Mode: return "mode";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Resource: return "resource";
        case ErrorKind::Unsupported: return "unsupported";
    }
    return "unknown";
}

const char* to_string(MappingMode mode) noexcept {
    return mode == MappingMode::Function ? "function" : "bijection";
}

const char* constraint_kind_name(const Constraint& c) noexcept {
    struct Namer {
        const char* operator()(const WeightedSum&) const { return "sum"; }
        const char* operator()(const ModSucc&) const { return "modsucc"; }
        const char* operator()(const Pin&) const { return "pin"; }
        const char* operator()(const Domain&) const { return "domain"; }
        const char* operator()(const PairDomain&) const { return "pairdomain"; }
        const char* operator()(const Table&) const { return "table"; }
        const char* operator()(const PinSet&) const { return "pinset"; }
        const char* operator()(const AltClause&) const { return "altclause"; }
    };
    return std::visit(Namer{}, c);
}

std::vector<int> referenced_outputs(const Constraint& c) {
    std::vector<int> refs;
    struct Collect {
        std::vector<int>& refs;
        void operator()(const WeightedSum& s) {
            for (const auto& t : s.terms) refs.push_back(t.output);
        }
        void operator()(const ModSucc& m) {
            refs.push_back(m.src);
            refs.push_back(m.dst);
        }
        void operator()(const Pin& p) { refs.push_back(p.output); }
        void operator()(const Domain& d) { refs.push_back(d.output); }
        void operator()(const PairDomain& d) {
            refs.push_back(d.first);
            refs.push_back(d.second);
        }
        void operator()(const Table& t) {
            for (int o : t.outputs) refs.push_back(o);
        }
        void operator()(const PinSet& s) {
            for (const auto& p : s.pins) refs.push_back(p.output);
        }
        void operator()(const AltClause& a) {
            for (const auto& l : a.literals) refs.push_back(l.output);
        }
    };
    std::visit(Collect{refs}, c);
    std::sort(refs.begin(), refs.end());
    refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
    return refs;
}

namespace {

// value(dst) == value(src) + 1 under the given modulus, as a congruence.
bool congruent_succ(Label src, Label dst, int modulus) {
    long long diff = static_cast<long long>(dst) - static_cast<long long>(src) - 1;
    return ((diff % modulus) + modulus) % modulus == 0;
}

void check_output_ref(int output, std::size_t n, const char* kind) {
    if (output < 0 || static_cast<std::size_t>(output) >= n)
        fail(ErrorKind::Structural,
             std::string(kind) + " constraint references output index " +
                 std::to_string(output) + " outside the mapping");
}

}  // namespace

void validate_problem(const Problem& p) {
    const std::size_t n = p.outputs.size();

    std::unordered_set<std::string> seen_outputs;
    for (const auto& name : p.outputs)
        if (!seen_outputs.insert(name).second)
            fail(ErrorKind::Structural, "duplicate output identifier '" + name + "'");

    std::unordered_set<Label> seen_concepts;
    for (Label c : p.concepts)
        if (!seen_concepts.insert(c).second)
            fail(ErrorKind::Structural,
                 "duplicate concept label " + std::to_string(c));

    if (p.intended.size() != n)
        fail(ErrorKind::Structural, "intended mapping is not total over the outputs");
    for (Label v : p.intended.values)
        if (!seen_concepts.count(v))
            fail(ErrorKind::Structural,
                 "intended mapping uses label " + std::to_string(v) +
                     " outside the concept domain");

    for (const auto& c : p.constraints) {
        for (int ref : referenced_outputs(c))
            check_output_ref(ref, n, constraint_kind_name(c));
        if (const auto* s = std::get_if<WeightedSum>(&c)) {
            if (s->terms.empty())
                fail(ErrorKind::Structural, "sum constraint has no terms");
        } else if (const auto* m = std::get_if<ModSucc>(&c)) {
            if (m->modulus < 2)
                fail(ErrorKind::Structural, "modsucc modulus must be at least 2");
        } else if (const auto* d = std::get_if<Domain>(&c)) {
            if (d->allowed.empty())
                fail(ErrorKind::Structural, "domain constraint has an empty set");
        } else if (const auto* d = std::get_if<PairDomain>(&c)) {
            if (d->low == d->high)
                fail(ErrorKind::Structural,
                     "pairdomain requires two distinct labels");
        } else if (const auto* t = std::get_if<Table>(&c)) {
            if (t->outputs.empty())
                fail(ErrorKind::Structural, "table constraint has no outputs");
            for (const auto& row : t->rows)
                if (row.size() != t->outputs.size())
                    fail(ErrorKind::Structural,
                         "table row arity does not match its output list");
        } else if (const auto* s = std::get_if<PinSet>(&c)) {
            if (s->pins.empty())
                fail(ErrorKind::Structural, "pinset constraint has no assignments");
        } else if (const auto* a = std::get_if<AltClause>(&c)) {
            if (a->literals.empty())
                fail(ErrorKind::Structural, "altclause constraint has no literals");
        }
    }
}

bool evaluate_constraint(const Constraint& c, const ConceptMapping& phi,
                         const ConceptMapping& intended) {
    if (phi.size() != intended.size())
        fail(ErrorKind::Structural,
             "mapping and intended mapping cover different output lists");
    const std::size_t n = phi.size();
    for (int ref : referenced_outputs(c))
        check_output_ref(ref, n, constraint_kind_name(c));

    struct Eval {
        const ConceptMapping& phi;
        const ConceptMapping& intended;

        bool operator()(const WeightedSum& s) const {
            long long sum = 0;
            for (const auto& t : s.terms)
                sum += static_cast<long long>(t.coefficient) * phi[t.output];
            return sum == s.target;
        }
        bool operator()(const ModSucc& m) const {
            return congruent_succ(phi[m.src], phi[m.dst], m.modulus);
        }
        bool operator()(const Pin& p) const { return phi[p.output] == p.value; }
        bool operator()(const Domain& d) const {
            return std::binary_search(d.allowed.begin(), d.allowed.end(),
                                      phi[d.output]);
        }
        bool operator()(const PairDomain& d) const {
            const Label a = phi[d.first];
            const Label b = phi[d.second];
            return (a == d.low || a == d.high) && (b == d.low || b == d.high);
        }
        bool operator()(const Table& t) const {
            for (const auto& row : t.rows) {
                bool match = true;
                for (std::size_t i = 0; i < t.outputs.size(); ++i)
                    if (phi[t.outputs[i]] != row[i]) {
                        match = false;
                        break;
                    }
                if (match) return true;
            }
            return false;
        }
        bool operator()(const PinSet& s) const {
            for (const auto& p : s.pins)
                if (phi[p.output] != p.value) return false;
            return true;
        }
        bool operator()(const AltClause& a) const {
            if (phi == intended) return true;
            for (const auto& l : a.literals)
                if (phi[l.output] == l.value) return true;
            return false;
        }
    };
    return std::visit(Eval{phi, intended}, c);
}

bool is_bijective_over(const ConceptMapping& phi, std::span<const Label> concepts) {
    if (phi.size() != concepts.size()) return false;
    std::set<Label> domain(concepts.begin(), concepts.end());
    std::set<Label> used;
    for (Label v : phi.values) {
        if (!domain.count(v)) return false;
        if (!used.insert(v).second) return false;
    }
    return used.size() == domain.size();
}

bool is_valid(const Problem& p, const ConceptMapping& phi, MappingMode mode) {
    if (phi.size() != p.outputs.size())
        fail(ErrorKind::Structural, "mapping is not total over the problem outputs");
    if (mode == MappingMode::Bijection && p.outputs.size() != p.concepts.size())
        fail(ErrorKind::Mode,
             "bijection mode requires equally many outputs and concepts");
    if (mode == MappingMode::Bijection && !is_bijective_over(phi, p.concepts))
        return false;
    for (const auto& c : p.constraints)
        if (!evaluate_constraint(c, phi, p.intended)) return false;
    return true;
}

ConceptMapping apply_transposition(const ConceptMapping& phi, Label a, Label b) {
    if (a == b)
        fail(ErrorKind::Argument, "transposition requires two distinct labels");
    ConceptMapping out = phi;
    for (Label& v : out.values) {
        if (v == a)
            v = b;
        else if (v == b)
            v = a;
    }
    return out;
}

Label Permutation::apply(Label v) const {
    auto it = std::lower_bound(map.begin(), map.end(), v,
                               [](const auto& pair, Label key) { return pair.first < key; });
    if (it == map.end() || it->first != v)
        fail(ErrorKind::Argument,
             "permutation is not total: label " + std::to_string(v) +
                 " has no image");
    return it->second;
}

bool Permutation::is_identity() const noexcept {
    for (const auto& [from, to] : map)
        if (from != to) return false;
    return true;
}

Permutation make_permutation(std::vector<std::pair<Label, Label>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    std::vector<Label> from, to;
    from.reserve(pairs.size());
    to.reserve(pairs.size());
    for (const auto& [f, t] : pairs) {
        from.push_back(f);
        to.push_back(t);
    }
    if (std::adjacent_find(from.begin(), from.end()) != from.end())
        fail(ErrorKind::Argument, "permutation maps a label twice");
    std::sort(to.begin(), to.end());
    if (to != from)
        fail(ErrorKind::Argument, "permutation image is not a bijection on its domain");
    return Permutation{std::move(pairs)};
}

Permutation identity_permutation(std::span<const Label> labels) {
    std::vector<std::pair<Label, Label>> pairs;
    pairs.reserve(labels.size());
    for (Label l : labels) pairs.emplace_back(l, l);
    return make_permutation(std::move(pairs));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    std::vector<std::pair<Label, Label>> pairs;
    pairs.reserve(inner.map.size());
    for (const auto& [from, mid] : inner.map)
        pairs.emplace_back(from, outer.apply(mid));
    return make_permutation(std::move(pairs));
}

Permutation inverse(const Permutation& p) {
    std::vector<std::pair<Label, Label>> pairs;
    pairs.reserve(p.map.size());
    for (const auto& [from, to] : p.map) pairs.emplace_back(to, from);
    return make_permutation(std::move(pairs));
}

ConceptMapping compose_value_permutation(const Permutation& sigma,
                                         const ConceptMapping& phi) {
    // Revalidate: callers may have built the struct by hand.
    std::vector<std::pair<Label, Label>> copy(sigma.map);
    Permutation checked = make_permutation(std::move(copy));
    ConceptMapping out = phi;
    for (Label& v : out.values) v = checked.apply(v);
    return out;
}

}  // namespace nsv
