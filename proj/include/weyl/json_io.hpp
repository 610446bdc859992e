#pragma once

#include <istream>
#include <string>

#include <json.hpp>

#include "weyl/chain.hpp"
#include "weyl/transform.hpp"

namespace weyl {

using json = nlohmann::ordered_json;

json element_to_json(const WeylElement& p);
WeylElement element_from_json(const json& j);
std::string save_element(const WeylElement& p);  // canonical text, trailing newline
WeylElement load_element(std::istream& in);
WeylElement load_element_file(const std::string& path);

json point_to_json(const SupportPoint& p);  // [x, y] with x a fraction string
json direction_to_json(const Direction& d);
Direction direction_from_json(const json& j);
json poly_to_json(const UniPoly& f);  // coefficient strings, ascending degree

json node_to_json(const ChainNode& n);
ChainNode node_from_json(const json& j);
json chain_to_json(const Chain& c);
Chain chain_from_json(const json& j);
Chain load_chain_file(const std::string& path);

json bounds_to_json(const SearchBounds& b);
SearchBounds bounds_from_json(const json& j);
json certificate_to_json(const SearchCertificate& c);
SearchCertificate certificate_from_json(const json& j);

json bracket_to_json(const BracketOutcome& b);
json ode_to_json(const OdeCertificate& c);
json root_to_json(const RootFactorization& r);
json verdicts_to_json(const std::vector<Verdict>& v, const char* key);
json cut_to_json(const CutReport& r);
json conditions_to_json(const std::vector<ConditionResult>& r);
json corner_case_to_json(const CornerCase& c);

std::string fnv1a_hex(const std::string& s);

}  // namespace weyl
