#pragma once

// JSON and CSV encodings of the report types. Every integer is written as a
// decimal string. The layout is described in docs/json-schema.md.

#include <string>

#include <json.hpp>

#include "cannonball/classifier.hpp"
#include "cannonball/compare.hpp"
#include "cannonball/conditions.hpp"
#include "cannonball/sieve.hpp"
#include "cannonball/solver.hpp"

namespace cannonball {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& n);
/// Throws std::invalid_argument unless `j` is a decimal string.
Integer integer_from_json(const Json& j);

void to_json(Json& j, const ClassVerdict& v);
void from_json(const Json& j, ClassVerdict& v);
void to_json(Json& j, const MuDecomposition& d);
void from_json(const Json& j, MuDecomposition& d);
void to_json(Json& j, const ClassDecomposition& c);
void from_json(const Json& j, ClassDecomposition& c);

void to_json(Json& j, const Witness& w);
void from_json(const Json& j, Witness& w);
void to_json(Json& j, const Verdict& v);
void from_json(const Json& j, Verdict& v);
void to_json(Json& j, const ConditionReport& r);
void from_json(const Json& j, ConditionReport& r);

void to_json(Json& j, const Solution& s);
void from_json(const Json& j, Solution& s);

void to_json(Json& j, const ViolationNote& n);
void from_json(const Json& j, ViolationNote& n);
void to_json(Json& j, const SieveRow& r);
void from_json(const Json& j, SieveRow& r);

void to_json(Json& j, const DifferenceEntry& e);
void from_json(const Json& j, DifferenceEntry& e);
void to_json(Json& j, const DifferenceReport& r);
void from_json(const Json& j, DifferenceReport& r);

/// "M,class,beeckmans,refined,first_a,first_s,violated_list"
std::string csv_header();
/// violated_list holds "strict:C2" / "literal:C4.2" labels joined by ';'.
std::string csv_line(const SieveRow& row);

}  // namespace cannonball
