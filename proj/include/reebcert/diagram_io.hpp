#ifndef REEBCERT_DIAGRAM_IO_HPP
#define REEBCERT_DIAGRAM_IO_HPP

#include <string>

#include "reebcert/jsonval.hpp"
#include "reebcert/surgery.hpp"

namespace reebcert {

// Diagram document layout:
//   { "ambient": "S3",
//     "knots": [ {"id": "K1", "tb": -2, "rot": 1, "unknot": true}, ... ],
//     "linking": [[-3]] }
// "unknot" defaults to false; the linking matrix is mandatory and complete,
// off-diagonal entries are never inferred.
FramedLinkDiagram diagram_from_json(const jsonval::Value& doc);

FramedLinkDiagram parse_diagram(const std::string& text);

// Reads and parses; missing or unreadable files throw ParseError.
FramedLinkDiagram load_diagram(const std::string& path);

jsonval::Value diagram_to_json(const FramedLinkDiagram& d);

}  // namespace reebcert

#endif
