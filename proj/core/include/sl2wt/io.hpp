#pragma once

#include <string>

#include "sl2wt/pipeline.hpp"

namespace sl2wt {

// Labels are read from JSON or from the compact forms
//   D+(r,s)@l  D-(r,s)@l  L(r)@l  E(lam;r,s)@l  M(r,s)xPi(l;lam)
bool is_a_label_text(const std::string& text);
SimpleCLabel parse_c_label(const AdmissibleLevel& level, const std::string& text);
SimpleALabel parse_a_label(const AdmissibleLevel& level, const std::string& text);

std::string to_json(const Weight& w);
Weight weight_from_json(const std::string& text);
std::string to_json(const SimpleCLabel& x);
std::string to_json(const SimpleALabel& x);
std::string to_json(const AdmissibleLevel& level, const CObject& x);
std::string to_json(const AdmissibleLevel& level, const AObject& x);
std::string to_json(const GrothC& x);
std::string to_json(const GrothA& x);
std::string to_json(const Report& rep);

std::string loewy_diagram(const LayersA& layers);
std::string loewy_diagram(const LayersC& layers);
std::string render_report(const Report& rep);

std::string kac_table_text(const AdmissibleLevel& level);
std::string kac_table_json(const AdmissibleLevel& level);

}  // namespace sl2wt
