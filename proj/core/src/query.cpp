#include "nsv/query.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace nsv {

const char* to_string(QueryStrategy strategy) noexcept {
    switch (strategy) {
        case QueryStrategy::Uncertainty: return "uncertainty";
        case QueryStrategy::GreedyDisambiguation: return "greedy-disambiguation";
        case QueryStrategy::Random: return "random";
    }
    return "unknown";
}

QueryBounds query_bounds(const std::vector<ConceptMapping>& solutions,
                         int concept_count) {
    if (solutions.empty())
        fail(ErrorKind::Argument, "query bounds require a nonempty solution set");
    if (concept_count < 2 && solutions.size() > 1)
        fail(ErrorKind::Argument,
             "a concept domain of size below 2 cannot distinguish candidates");

    QueryBounds b;
    // Smallest q with concept_count^q >= |solutions|.
    unsigned long long reach = 1;
    while (reach < solutions.size()) {
        reach *= static_cast<unsigned long long>(concept_count);
        ++b.lower;
    }

    const std::size_t n = solutions.front().size();
    for (std::size_t i = 0; i < n; ++i) {
        const Label first = solutions.front()[i];
        for (const auto& phi : solutions)
            if (phi[i] != first) {
                ++b.upper;
                break;
            }
    }
    return b;
}

QueryTrace run_strategy(const std::vector<ConceptMapping>& solutions,
                        const ConceptMapping& intended, QueryStrategy strategy,
                        std::uint64_t seed, int concept_count) {
    if (solutions.empty())
        fail(ErrorKind::Argument, "query simulation requires candidates");
    const std::size_t n = intended.size();
    for (const auto& phi : solutions)
        if (phi.size() != n)
            fail(ErrorKind::Structural,
                 "candidates cover different output lists");
    if (std::find(solutions.begin(), solutions.end(), intended) == solutions.end())
        fail(ErrorKind::Argument,
             "the intended mapping is missing from the candidate set; the "
             "oracle would be inconsistent");
    {
        std::set<std::vector<Label>> distinct;
        for (const auto& phi : solutions) distinct.insert(phi.values);
        if (distinct.size() != solutions.size())
            fail(ErrorKind::Argument, "candidate set contains duplicates");
    }

    QueryTrace trace;
    trace.strategy = strategy;
    trace.bounds = query_bounds(solutions, concept_count);

    std::vector<ConceptMapping> candidates = solutions;
    std::vector<char> queried(n, 0);
    std::mt19937_64 rng(seed);

    while (candidates.size() > 1) {
        int position = -1;
        switch (strategy) {
            case QueryStrategy::Uncertainty: {
                // d(n): number of distinct values candidates assign to n.
                std::size_t best = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::set<Label> values;
                    for (const auto& phi : candidates) values.insert(phi[i]);
                    if (values.size() > best) {
                        best = values.size();
                        position = static_cast<int>(i);
                    }
                }
                break;
            }
            case QueryStrategy::GreedyDisambiguation: {
                // e(n): candidates the revealed answer would eliminate.
                std::size_t best = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::size_t eliminated = 0;
                    for (const auto& phi : candidates)
                        if (phi[i] != intended[i]) ++eliminated;
                    if (eliminated > best) {
                        best = eliminated;
                        position = static_cast<int>(i);
                    }
                }
                break;
            }
            case QueryStrategy::Random: {
                std::vector<int> open;
                for (std::size_t i = 0; i < n; ++i)
                    if (!queried[i]) open.push_back(static_cast<int>(i));
                position = open[static_cast<std::size_t>(rng() % open.size())];
                break;
            }
        }

        QueryRecord record;
        record.position = position;
        record.answer = intended[position];
        record.candidates_before = static_cast<int>(candidates.size());
        std::erase_if(candidates, [&](const ConceptMapping& phi) {
            return phi[position] != intended[position];
        });
        record.candidates_after = static_cast<int>(candidates.size());
        queried[position] = 1;
        trace.queries.push_back(record);
    }

    trace.identified = candidates.size() == 1;
    trace.survivor = candidates.front();
    return trace;
}

}  // namespace nsv
