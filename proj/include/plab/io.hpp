#pragma once

#include <string>

#include "json.hpp"
#include "plab/construct.hpp"
#include "plab/graph.hpp"
#include "plab/labelling.hpp"
#include "plab/product.hpp"
#include "plab/solve.hpp"
#include "plab/theorem.hpp"

namespace plab {

using json = nlohmann::json;

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json product_to_json(const ProductGraph& pg);
ProductGraph product_from_json(const json& j);

json labelling_to_json(const Labelling& phi);
Labelling labelling_from_json(const json& j);

json report_to_json(const VerificationReport& report);
json colouring_to_json(const ColouringReport& report);

json solve_result_to_json(const SolveResult& result);

json construction_trace_to_json(const ConstructionResult& result);

json instance_spec_to_json(const InstanceSpec& spec);
InstanceSpec instance_spec_from_json(const json& j);

json condition_to_json(const ConditionCheck& check);
json experiment_to_json(const ExperimentReport& report);
json sandwich_to_json(const SandwichReport& report);

// instance,l,h,condition,constructed,certificate,reproduced
std::string experiment_csv_header();
std::string experiment_csv_row(const ExperimentReport& report);

// Plain graphs only; "p edge n m" + "e u v" lines, 1-based vertices.
Graph read_dimacs(std::istream& in, std::string name = "");

// Reads JSON by default; DIMACS when format == "dimacs".
Graph read_graph_file(const std::string& path, const std::string& format = "json");

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace plab
