#pragma once
#include <string>
#include <vector>

#include "thkg/core/fact.hpp"
#include "thkg/core/vocabulary.hpp"

namespace thkg::data {

// One fact per line. Schema:
//   {"s": str, "r": str, "o": {"entity": str} | {"number": float},
//    "time": {"c": "Since"|"Until"|"Period"|"Invariant",
//             "t1": float|null, "t2": float|null},
//    "quals": [{"k": str, "v": {"entity"|"number": ...}}, ...]}
// null time fields encode the infinity side implied by the conjunction.
//
// parse_fact_line throws ParseError with the line number and field path;
// a Period whose endpoints are out of order propagates InvalidTimeTriplet.
Fact parse_fact_line(const std::string& line, std::size_t line_number = 0);

// Inverse of parse_fact_line: parse(serialize(f)) == f, numbers rendered
// with round-trip precision.
std::string serialize_fact(const Fact& f);

std::vector<Fact> read_fact_file(const std::string& path);
void write_fact_file(const std::string& path, const std::vector<Fact>& facts);

// Indices over all three splits (transductive setting), first-occurrence
// order. Numeric flags are derived from observed modalities; a relation seen
// with both entity and number values is a ModalityMismatch.
Vocabulary build_vocabulary(const std::vector<Fact>& train,
                            const std::vector<Fact>& valid,
                            const std::vector<Fact>& test);

}  // namespace thkg::data
