#pragma once

#include <string>

#include "persp/ideal.hpp"
#include "persp/laws.hpp"
#include "persp/props.hpp"
#include "persp/reduction.hpp"

#include <json.hpp>

namespace persp {

using OrderedJson = nlohmann::ordered_json;

/// Ring spec grammar: M<n>(F<p>) factors joined by 'x', e.g. M2(F2)xM3(F3).
RingSpec parse_ring_spec(const std::string& src);
std::string ring_spec_to_string(const RingSpec& spec);

/// Matrix text format: p:rows x cols:[e,e,...] with row-major entries.
std::string mat_to_string(const Mat& m);
Mat parse_mat(const std::string& src);

/// Element text: per-component matrix blocks separated by ';'. Bare
/// comma lists (sizes from the spec) are accepted on input.
std::string element_to_string(const RingElement& a);
RingElement parse_element(const RingSpec& spec, const std::string& src);

OrderedJson ideal_to_json(const Ideal& a);
OrderedJson trace_to_json(const ReductionTrace& trace);
OrderedJson certificate_bundle_to_json(const ReductionTrace& trace,
                                       const Certificate& axis,
                                       const Certificate& unit);
OrderedJson law_verdict_to_json(const LawVerdict& v);
OrderedJson prop_report_to_json(const PropReport& r);

}  // namespace persp
