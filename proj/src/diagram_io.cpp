#include "reebcert/diagram_io.hpp"

#include <fstream>
#include <sstream>

#include "reebcert/errors.hpp"

namespace reebcert {

FramedLinkDiagram diagram_from_json(const jsonval::Value& doc) {
    if (!doc.is_object()) throw ParseError("diagram document must be an object");
    FramedLinkDiagram d;
    d.ambient = doc.get("ambient").as_string();

    const jsonval::Value& knots = doc.get("knots");
    if (!knots.is_array()) throw ParseError("'knots' must be an array");
    d.knots.reserve(knots.size());
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const jsonval::Value& k = knots.at(i);
        if (!k.is_object()) throw ParseError("each knot must be an object");
        LegendrianKnotData knot;
        knot.id = k.get("id").as_string();
        knot.tb = k.get("tb").as_int();
        knot.rot = k.get("rot").as_int();
        knot.is_unknot = k.has("unknot") ? k.get("unknot").as_bool() : false;
        d.knots.push_back(std::move(knot));
    }

    const jsonval::Value& linking = doc.get("linking");
    if (!linking.is_array()) throw ParseError("'linking' must be an array of rows");
    const std::size_t rows = linking.size();
    std::size_t cols = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!linking.at(i).is_array()) throw ParseError("'linking' rows must be arrays");
        if (i == 0)
            cols = linking.at(i).size();
        else if (linking.at(i).size() != cols)
            throw ParseError("'linking' rows have differing lengths");
    }
    d.linking = IntMatrix(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) d.linking.at(i, j) = linking.at(i).at(j).as_int();
    return d;
}

FramedLinkDiagram parse_diagram(const std::string& text) {
    return diagram_from_json(jsonval::parse(text));
}

FramedLinkDiagram load_diagram(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open diagram file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_diagram(buffer.str());
}

jsonval::Value diagram_to_json(const FramedLinkDiagram& d) {
    jsonval::Value doc = jsonval::Value::object();
    doc.set("ambient", jsonval::Value::string(d.ambient));
    jsonval::Value knots = jsonval::Value::array();
    for (const auto& k : d.knots) {
        jsonval::Value knot = jsonval::Value::object();
        knot.set("id", jsonval::Value::string(k.id));
        knot.set("tb", jsonval::Value::integer(k.tb));
        knot.set("rot", jsonval::Value::integer(k.rot));
        knot.set("unknot", jsonval::Value::boolean(k.is_unknot));
        knots.push_back(std::move(knot));
    }
    doc.set("knots", std::move(knots));
    jsonval::Value linking = jsonval::Value::array();
    for (std::size_t i = 0; i < d.linking.rows(); ++i) {
        jsonval::Value row = jsonval::Value::array();
        for (std::size_t j = 0; j < d.linking.cols(); ++j)
            row.push_back(jsonval::Value::integer(d.linking.at(i, j)));
        linking.push_back(std::move(row));
    }
    doc.set("linking", std::move(linking));
    return doc;
}

}  // namespace reebcert
