#pragma once

#include <cstdint>
#include <vector>

#include "nsv/model.hpp"

namespace nsv {

enum class QueryStrategy { Uncertainty, GreedyDisambiguation, Random };

const char* to_string(QueryStrategy strategy) noexcept;

struct QueryRecord {
    int position = 0;       // output index
    Label answer = 0;       // the intended value at that position
    int candidates_before = 0;
    int candidates_after = 0;
};

struct QueryBounds {
    int lower = 0;  // ceil(log_r |solutions|)
    int upper = 0;  // |disagreement positions|
};

struct QueryTrace {
    QueryStrategy strategy = QueryStrategy::Uncertainty;
    std::vector<QueryRecord> queries;
    bool identified = false;
    QueryBounds bounds;
    ConceptMapping survivor;  // the single remaining candidate
};

// Simulates label queries against the intended mapping over an exact
// candidate set that contains it. Uncertainty queries the position where
// candidates spread over the most values; greedy disambiguation the position
// whose revealed answer eliminates the most candidates; random walks unqueried
// positions uniformly (seeded). Ties break toward the smallest output index.
QueryTrace run_strategy(const std::vector<ConceptMapping>& solutions,
                        const ConceptMapping& intended, QueryStrategy strategy,
                        std::uint64_t seed, int concept_count);

// Information-theoretic bounds: at least ceil(log_r |solutions|) queries are
// needed, and querying every disagreement position always suffices.
QueryBounds query_bounds(const std::vector<ConceptMapping>& solutions,
                         int concept_count);

}  // namespace nsv
