#ifndef FAREYFLIP_IO_HPP
#define FAREYFLIP_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include "fareyflip/plan.hpp"
#include "fareyflip/triangulation.hpp"

namespace fareyflip {

// JSON document formats (version 1).  Unknown fields are rejected and
// canonical output round-trips byte-for-byte.
//
//   polygon        {"kind":"polygon","version":1,"vertices":[[a,b],...]}
//   edges          {"kind":"edges","version":1,
//                   "items":[{"from":[a,b],"to":[a,b]},...]}
//   triangulation  {"kind":"triangulation","version":1,"vertices":[...],
//                   "edges":[[[a,b],[c,d]],...]}
//   plan           {"kind":"plan","version":1,
//                   "nodes":[{"quad":[[a,b]x4],"removed":[[..],[..]],
//                             "created":[[..],[..]],
//                             "direction":"forward"|"reversed"}],
//                   "arcs":[[childIdx,parentIdx],...]}

struct EdgeListDocument {
    std::vector<EdgeInstance> items;
};

using Document = std::variant<Polygon, EdgeListDocument, Triangulation, FlipPlan>;

Document load_document(const std::string& text);
Document load_document_file(const std::string& path);

std::string save_polygon(const Polygon& poly);
std::string save_edges(const EdgeListDocument& edges);
std::string save_triangulation(const Triangulation& t);
std::string save_plan(const FlipPlan& plan);
std::string save_document(const Document& doc);

// A bare JSON array of node indices, used by `verify --order`.
std::vector<int> load_order_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fareyflip

#endif
