#pragma once

/**
 * @file json_io.hpp
 * @brief JSON and CSV serialization for expansions and circle sets.
 *
 * Key order is fixed and circle lists are sorted by canonical key, so equal
 * inputs always serialize to identical bytes. Timing fields are null unless
 * explicitly requested, for the same reason.
 */

#include "hurwitz/cells.hpp"
#include "hurwitz/real_cf.hpp"

#include "json.hpp"

#include <string>

namespace hurwitz {

using Json = nlohmann::ordered_json;

/// {"a": .., "b_re": .., "b_im": .., "c": ..} from the canonical integer
/// form. Throws std::overflow_error if a coefficient exceeds int64 range.
Json circle_to_json(const GenCircle& g);

Json alpha_to_json(const Alpha& alpha);

Json expansion_to_json(const Alpha& alpha, const std::string& z_text, const CFExpansion& e);

/// Full partition artifact: alpha, sorted circles, run report.
/// `with_timings` replaces the null timing block with wall-clock seconds.
Json partition_to_json(const CircleSet& set, const PartitionReport& report,
                       bool with_timings = false);

Json markov_report_to_json(const MarkovReport& rep);

Json orbit_report_to_json(const OrbitReport& rep);

/// CSV with header n,digit,p,q[,approx]: digit index, digit, convergent.
std::string real_cf_to_csv(const RealCFExpansion& e, bool with_approx = false);

}  // namespace hurwitz
