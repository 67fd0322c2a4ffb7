#pragma once

#include <string>

#include "searchlab/behavior.hpp"
#include "searchlab/rng.hpp"
#include "searchlab/trajectory.hpp"

namespace searchlab::testsupport {

// Behavior flags computed straight off the raw tag stream, written
// independently of the production parser so the two can cross-check each
// other:
//   - no_search: no search tag token appears at all;
//   - invalid: the token stream is not a sequence of adjacently matched
//     open/close pairs, or some intact search pair holds a query that strips
//     to nothing (whitespace/punctuation only);
//   - duplicate_queries: two intact search pairs share a casefolded,
//     whitespace-collapsed query.
// The duplicate comparison only sees adjacently intact pairs, so generated
// inputs keep the payloads of structurally damaged blocks unique; the other
// two flags are exact for arbitrary input.
BehaviorFlags reference_flags(std::string_view raw);

// Structured well-formed trajectory for render -> parse round-trips: thinks,
// searches (sometimes empty/degenerate/duplicated queries), observations,
// at most one final answer.
ParsedTrajectory fuzz_structured(Rng& rng);

// Raw well-formed text: rendered blocks with plain-text noise between them,
// planted duplicates/degenerate queries, occasional extra answers and
// trailing content. Tag literals never appear inside payloads or noise.
std::string fuzz_well_formed(Rng& rng);

// Raw text with one structural mutation (deleted close, stray close/open,
// cross-kind interleave) plus, sometimes, a degenerate query. Mutations are
// chosen so production recovery and reference_flags stay comparable: deletes
// hit a kind's last close, strays sit at the ends, interleaves carry unique
// payloads.
std::string fuzz_malformed(Rng& rng);

}  // namespace searchlab::testsupport
