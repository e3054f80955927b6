#ifndef REEBCERT_JSONVAL_HPP
#define REEBCERT_JSONVAL_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "reebcert/exact.hpp"

namespace reebcert::jsonval {

// JSON restricted to what the reports need: objects with insertion-ordered
// keys, arrays, booleans, strings, and integers of unlimited width. Floats
// and null are deliberately rejected so nothing inexact can slip through a
// round trip.
class Value {
  public:
    enum class Kind { Boolean, Integer, String, Array, Object };

    Value() : kind_(Kind::Object) {}
    static Value boolean(bool b);
    static Value integer(Int i);
    static Value string(std::string s);
    static Value array();
    static Value object();

    Kind kind() const { return kind_; }
    bool is_object() const { return kind_ == Kind::Object; }
    bool is_array() const { return kind_ == Kind::Array; }

    bool as_bool() const;
    const Int& as_int() const;
    const std::string& as_string() const;

    // Array access.
    void push_back(Value v);
    std::size_t size() const;
    const Value& at(std::size_t i) const;

    // Object access; set appends, keys must be unique.
    void set(const std::string& key, Value v);
    bool has(const std::string& key) const;
    const Value& get(const std::string& key) const;
    const std::vector<std::pair<std::string, Value>>& members() const;

    bool operator==(const Value& rhs) const;

    // Deterministic rendering: 2-space indent, objects and composite arrays
    // multiline, all-scalar arrays on one line, trailing newline.
    std::string emit() const;

  private:
    Kind kind_;
    bool bool_ = false;
    Int int_;
    std::string string_;
    std::vector<Value> elements_;
    std::vector<std::pair<std::string, Value>> members_;

    void emit_to(std::string& out, int indent) const;
};

// Strict parser for the same subset; throws ParseError with a position on
// malformed input, floats, null, duplicate keys, or trailing garbage.
Value parse(const std::string& text);

}  // namespace reebcert::jsonval

#endif
