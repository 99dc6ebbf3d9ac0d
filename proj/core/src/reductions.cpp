#include "nsv/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

namespace nsv {

namespace {

void validate_cnf(const CnfFormula& f) {
    if (f.num_vars < 1)
        fail(ErrorKind::Argument, "formula needs at least one variable");
    for (const auto& clause : f.clauses) {
        if (clause.empty())
            fail(ErrorKind::Argument, "empty clause in formula");
        for (int lit : clause) {
            if (lit == 0) fail(ErrorKind::Argument, "literal 0 is not allowed");
            if (std::abs(lit) > f.num_vars)
                fail(ErrorKind::Argument,
                     "literal " + std::to_string(lit) +
                         " exceeds the declared variable count");
        }
    }
}

void validate_instance(const SetCoverInstance& inst) {
    if (inst.universe.size() < 2)
        fail(ErrorKind::Argument,
             "set cover reduction needs a universe of at least 2 elements");
    std::set<std::string> elements;
    for (const auto& e : inst.universe) {
        if (e.empty() ||
            !(std::isalpha(static_cast<unsigned char>(e[0])) || e[0] == '_') ||
            !std::all_of(e.begin(), e.end(), [](char c) {
                return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
            }))
            fail(ErrorKind::Argument,
                 "universe element '" + e + "' is not identifier-shaped");
        if (!elements.insert(e).second)
            fail(ErrorKind::Argument, "duplicate universe element '" + e + "'");
    }
    for (const auto& set : inst.sets) {
        if (set.empty())
            fail(ErrorKind::Argument, "cover sets must be nonempty");
        for (const auto& e : set)
            if (!elements.count(e))
                fail(ErrorKind::Argument,
                     "set member '" + e + "' is outside the universe");
    }
}

}  // namespace

Problem cnf_to_nsl(const CnfFormula& formula) {
    validate_cnf(formula);
    const int m = formula.num_vars;

    Problem p;
    // Variable i (1-based) owns outputs x<i>/xb<i> and labels 2(i-1)/2(i-1)+1
    // for true/false; the fresh variable y takes the last pair.
    for (int i = 1; i <= m; ++i) {
        p.outputs.push_back("x" + std::to_string(i));
        p.outputs.push_back("xb" + std::to_string(i));
    }
    p.outputs.push_back("y");
    p.outputs.push_back("yb");
    for (int i = 0; i < 2 * (m + 1); ++i) p.concepts.push_back(i);

    std::vector<Label> values;
    for (int i = 0; i <= m; ++i) {
        values.push_back(2 * i);      // positive output -> true label
        values.push_back(2 * i + 1);  // negated output -> false label
    }
    p.intended = ConceptMapping{std::move(values)};

    auto pos_output = [](int var) { return 2 * (var - 1); };
    auto neg_output = [](int var) { return 2 * (var - 1) + 1; };
    auto true_label = [](int var) { return 2 * (var - 1); };

    for (int i = 1; i <= m + 1; ++i) {
        const Label t = 2 * (i - 1);
        const Label f = t + 1;
        p.constraints.emplace_back(PairDomain{pos_output(i), neg_output(i), t, f});
        p.constraints.emplace_back(PairDomain{neg_output(i), pos_output(i), t, f});
    }

    // Clauses of psi' = psi AND NOT y: literal l is witnessed by mapping its
    // output to the variable's true label.
    for (const auto& clause : formula.clauses) {
        AltClause alt;
        for (int lit : clause) {
            const int var = std::abs(lit);
            alt.literals.push_back(
                Pin{lit > 0 ? pos_output(var) : neg_output(var), true_label(var)});
        }
        p.constraints.emplace_back(std::move(alt));
    }
    p.constraints.emplace_back(
        AltClause{{Pin{neg_output(m + 1), true_label(m + 1)}}});

    return p;
}

long long brute_force_sharp_sat(const CnfFormula& formula) {
    validate_cnf(formula);
    if (formula.num_vars > 20)
        fail(ErrorKind::Resource,
             "exhaustive model counting is limited to 20 variables");

    long long count = 0;
    const unsigned long long total = 1ull << formula.num_vars;
    for (unsigned long long assignment = 0; assignment < total; ++assignment) {
        bool all = true;
        for (const auto& clause : formula.clauses) {
            bool sat = false;
            for (int lit : clause) {
                const bool value = (assignment >> (std::abs(lit) - 1)) & 1ull;
                if (value == (lit > 0)) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) ++count;
    }
    return count;
}

CnfFormula parse_dimacs(const std::string& text) {
    CnfFormula formula;
    bool header_seen = false;
    int declared_clauses = 0;
    std::vector<int> current;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            if (header_seen)
                fail(ErrorKind::Argument, "duplicate DIMACS header");
            std::string format;
            if (!(fields >> format >> formula.num_vars >> declared_clauses) ||
                format != "cnf" || formula.num_vars < 1 || declared_clauses < 0)
                fail(ErrorKind::Argument,
                     "malformed DIMACS header on line " + std::to_string(line_no));
            header_seen = true;
            continue;
        }
        if (!header_seen)
            fail(ErrorKind::Argument, "clause data before the DIMACS header");
        std::istringstream nums(line);
        int lit;
        while (nums >> lit) {
            if (lit == 0) {
                if (current.empty())
                    fail(ErrorKind::Argument,
                         "empty clause on line " + std::to_string(line_no));
                formula.clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > formula.num_vars)
                    fail(ErrorKind::Argument,
                         "literal " + std::to_string(lit) +
                             " exceeds the declared variable count");
                current.push_back(lit);
            }
        }
        if (!nums.eof())
            fail(ErrorKind::Argument,
                 "malformed clause on line " + std::to_string(line_no));
    }
    if (!header_seen) fail(ErrorKind::Argument, "missing DIMACS header");
    if (!current.empty())
        fail(ErrorKind::Argument, "unterminated clause at end of input");
    if (declared_clauses != static_cast<int>(formula.clauses.size()))
        fail(ErrorKind::Argument,
             "header declares " + std::to_string(declared_clauses) +
                 " clauses but " + std::to_string(formula.clauses.size()) +
                 " were given");
    return formula;
}

RepairProblem setcover_to_repair(const SetCoverInstance& instance) {
    validate_instance(instance);

    RepairProblem out;
    Problem& p = out.problem;
    std::unordered_map<std::string, int> index;
    for (const auto& e : instance.universe) {
        index.emplace(e, static_cast<int>(p.outputs.size()));
        p.outputs.push_back(e);
    }
    std::vector<Label> values;
    for (int i = 0; i < static_cast<int>(p.outputs.size()); ++i) {
        p.concepts.push_back(i);
        values.push_back(i);  // identity intended mapping
    }
    p.intended = ConceptMapping{std::move(values)};

    for (const auto& set : instance.sets) {
        PinSet pins;
        for (const auto& e : set) {
            const int idx = index.at(e);
            pins.pins.push_back(Pin{idx, p.intended[idx]});
        }
        std::sort(pins.pins.begin(), pins.pins.end());
        out.library.push_back(std::move(pins));
    }
    return out;
}

std::optional<int> brute_force_min_cover(const SetCoverInstance& instance) {
    validate_instance(instance);
    if (instance.sets.size() > 20)
        fail(ErrorKind::Resource,
             "exhaustive cover search is limited to 20 sets");

    const std::size_t n = instance.universe.size();
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < n; ++i)
        index.emplace(instance.universe[i], static_cast<int>(i));

    std::vector<unsigned long long> masks;
    for (const auto& set : instance.sets) {
        unsigned long long mask = 0;
        for (const auto& e : set) mask |= 1ull << index.at(e);
        masks.push_back(mask);
    }
    const unsigned long long full = (n == 64) ? ~0ull : (1ull << n) - 1;

    std::optional<int> best;
    const unsigned long long total = 1ull << masks.size();
    for (unsigned long long pick = 0; pick < total; ++pick) {
        unsigned long long covered = 0;
        int size = 0;
        for (std::size_t i = 0; i < masks.size(); ++i)
            if ((pick >> i) & 1ull) {
                covered |= masks[i];
                ++size;
            }
        if (covered == full && (!best || size < *best)) best = size;
    }
    return best;
}

}  // namespace nsv
