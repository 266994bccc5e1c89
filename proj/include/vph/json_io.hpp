#pragma once

#include <json.hpp>

#include "vph/matching.hpp"
#include "vph/pullback.hpp"

namespace vph {

using nlohmann::json;

// Exact mode serializes values as canonical "p/q" strings; float mode as
// JSON numbers. Infinity is the string "inf" in both modes.
template <typename T> json value_json(const T& v);
template <> inline json value_json<rational>(const rational& v) { return v.str(); }
template <> inline json value_json<double>(const double& v) { return v; }

template <typename T> json value_json(const extended<T>& v) {
	if (!v.finite) return "inf";
	return value_json<T>(v.value);
}

template <typename T> json barcode_json(const barcode<T>& b) {
	json arr = json::array();
	for (const auto& p : b) arr.push_back(json::array({value_json<T>(p.birth), value_json(p.death)}));
	return arr;
}

// {degree: [[birth, death|"inf"], ...]}
template <typename T> json family_json(const barcode_family<T>& fam) {
	json out = json::object();
	for (size_t k = 0; k < fam.size(); ++k) out[std::to_string(k)] = barcode_json(fam[k]);
	return out;
}

template <typename T> json matching_json(const matching_result<T>& m) {
	json out;
	out["cost"] = value_json(m.cost);
	if (m.cost.finite) {
		json a = json::array();
		for (auto [i, j] : m.assignment) a.push_back(json::array({i, j}));
		out["assignment"] = a;
	}
	json trace = json::array();
	for (const auto& [t, ok] : m.threshold_trace)
		trace.push_back(json{{"threshold", value_json(t)}, {"feasible", ok}});
	out["threshold_trace"] = trace;
	out["mode"] = num_traits<T>::exact ? "exact" : "float";
	if (!num_traits<T>::exact) out["feasibility_slack"] = 1e-12;
	return out;
}

inline json tripod_json(const tripod& r) {
	return json{{"z_size", r.z_size()}, {"phi_x", r.phi_x.map}, {"phi_y", r.phi_y.map}};
}

template <typename T> json hatdb_json(const hatdb_result<T>& h) {
	json out;
	out["degree"] = h.degree;
	out["bound"] = value_json(h.bound);
	out["lower_bound"] = value_json(h.lower);
	out["certified"] = h.certified;
	out["via_formula"] = h.via_formula;
	out["max_extra"] = h.max_extra;
	out["z_max"] = h.z_max;
	out["tripods_enumerated"] = h.tripods_enumerated;
	if (h.has_witness || h.via_formula) out["witness"] = tripod_json(h.witness);
	if (h.has_min_dis) out["min_enumerated_distortion"] = value_json(h.min_dis);
	return out;
}

template <typename T> json stability_json(const stability_report<T>& rep) {
	json out;
	out["degree"] = rep.degree;
	out["db_concise"] = value_json(rep.db_concise);
	out["hatdb_bound"] = value_json(rep.hat.bound);
	out["hatdb_certified"] = rep.hat.certified;
	out["two_dgh"] = value_json(rep.two_dgh);
	out["left_inequality_ok"] = rep.left_ok;
	out["right_inequality_checked"] = rep.right_checked;
	out["right_inequality_ok"] = rep.right_ok;
	out["weak_check_ok"] = rep.weak_ok;
	out["ok"] = rep.ok;
	out["witness"] = hatdb_json(rep.hat);
	return out;
}

template <typename T> T value_from_json(const json& v) {
	if (v.is_string()) return num_traits<T>::parse(v.get<std::string>());
	if (v.is_number()) return num_traits<T>::parse(v.dump());
	throw input_error("barcode json: expected a number or \"p/q\" string");
}

template <typename T> extended<T> extended_from_json(const json& v) {
	if (v.is_string() && v.get<std::string>() == "inf") return extended<T>::infinity();
	return extended<T>(value_from_json<T>(v));
}

// Parses the {degree: [[birth, death|"inf"], ...]} document.
template <typename T> barcode_family<T> family_from_json(const json& doc) {
	if (!doc.is_object()) throw input_error("barcode json: expected an object");
	int max_degree = -1;
	for (auto it = doc.begin(); it != doc.end(); ++it) {
		int k = -1;
		try {
			k = std::stoi(it.key());
		} catch (const std::exception&) {
			throw input_error("barcode json: bad degree key '" + it.key() + "'");
		}
		if (k < 0) throw input_error("barcode json: negative degree");
		max_degree = std::max(max_degree, k);
	}
	barcode_family<T> fam(max_degree + 1);
	for (auto it = doc.begin(); it != doc.end(); ++it) {
		int k = std::stoi(it.key());
		for (const auto& pt : it.value()) {
			if (!pt.is_array() || pt.size() != 2)
				throw input_error("barcode json: points must be [birth, death]");
			bar<T> p{value_from_json<T>(pt[0]), extended_from_json<T>(pt[1])};
			if (extended<T>(p.birth) > p.death) throw input_error("barcode json: birth > death");
			fam[k].push_back(p);
		}
		canonicalize(fam[k]);
	}
	return fam;
}

// Plain-text multiset notation with multiplicity subscripts:
// {(0,1)_2, (0,2), (0,inf)}.
template <typename T> std::string barcode_table(const barcode<T>& b) {
	barcode<T> s = b;
	canonicalize(s);
	std::string out = "{";
	size_t i = 0;
	bool firstgroup = true;
	while (i < s.size()) {
		size_t j = i;
		while (j < s.size() && s[j] == s[i]) ++j;
		if (!firstgroup) out += ", ";
		firstgroup = false;
		out += "(" + num_traits<T>::str(s[i].birth) + "," + s[i].death.str() + ")";
		if (j - i > 1) out += "_" + std::to_string(j - i);
		i = j;
	}
	out += "}";
	if (firstgroup) return "{}";
	return out;
}

}  // namespace vph
