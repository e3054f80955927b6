#include "reebcert/jsonval.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "reebcert/errors.hpp"

namespace reebcert::jsonval {

Value Value::boolean(bool b) {
    Value v;
    v.kind_ = Kind::Boolean;
    v.bool_ = b;
    return v;
}

Value Value::integer(Int i) {
    Value v;
    v.kind_ = Kind::Integer;
    v.int_ = std::move(i);
    return v;
}

Value Value::string(std::string s) {
    Value v;
    v.kind_ = Kind::String;
    v.string_ = std::move(s);
    return v;
}

Value Value::array() {
    Value v;
    v.kind_ = Kind::Array;
    return v;
}

Value Value::object() {
    Value v;
    v.kind_ = Kind::Object;
    return v;
}

bool Value::as_bool() const {
    if (kind_ != Kind::Boolean) throw ParseError("json value is not a boolean");
    return bool_;
}

const Int& Value::as_int() const {
    if (kind_ != Kind::Integer) throw ParseError("json value is not an integer");
    return int_;
}

const std::string& Value::as_string() const {
    if (kind_ != Kind::String) throw ParseError("json value is not a string");
    return string_;
}

void Value::push_back(Value v) {
    if (kind_ != Kind::Array) throw InternalError("push_back on non-array json value");
    elements_.push_back(std::move(v));
}

std::size_t Value::size() const {
    if (kind_ == Kind::Array) return elements_.size();
    if (kind_ == Kind::Object) return members_.size();
    throw InternalError("size of scalar json value");
}

const Value& Value::at(std::size_t i) const {
    if (kind_ != Kind::Array) throw ParseError("indexing non-array json value");
    return elements_.at(i);
}

void Value::set(const std::string& key, Value v) {
    if (kind_ != Kind::Object) throw InternalError("set on non-object json value");
    for (const auto& [k, _] : members_)
        if (k == key) throw InternalError("duplicate json key '" + key + "'");
    members_.emplace_back(key, std::move(v));
}

bool Value::has(const std::string& key) const {
    if (kind_ != Kind::Object) return false;
    for (const auto& [k, _] : members_)
        if (k == key) return true;
    return false;
}

const Value& Value::get(const std::string& key) const {
    if (kind_ != Kind::Object) throw ParseError("get on non-object json value");
    for (const auto& [k, v] : members_)
        if (k == key) return v;
    throw ParseError("missing field '" + key + "'");
}

const std::vector<std::pair<std::string, Value>>& Value::members() const {
    if (kind_ != Kind::Object) throw InternalError("members of non-object json value");
    return members_;
}

bool Value::operator==(const Value& rhs) const {
    if (kind_ != rhs.kind_) return false;
    switch (kind_) {
        case Kind::Boolean: return bool_ == rhs.bool_;
        case Kind::Integer: return int_ == rhs.int_;
        case Kind::String: return string_ == rhs.string_;
        case Kind::Array: return elements_ == rhs.elements_;
        case Kind::Object: return members_ == rhs.members_;
    }
    return false;
}

namespace {

void escape_string(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

bool all_scalar(const Value& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        Value::Kind k = v.at(i).kind();
        if (k == Value::Kind::Array || k == Value::Kind::Object) return false;
    }
    return true;
}

}  // namespace

void Value::emit_to(std::string& out, int indent) const {
    const std::string pad(2 * static_cast<std::size_t>(indent), ' ');
    const std::string inner(2 * static_cast<std::size_t>(indent + 1), ' ');
    switch (kind_) {
        case Kind::Boolean: out += bool_ ? "true" : "false"; return;
        case Kind::Integer: out += int_.str(); return;
        case Kind::String: escape_string(string_, out); return;
        case Kind::Array:
            if (elements_.empty()) {
                out += "[]";
            } else if (all_scalar(*this)) {
                out += '[';
                for (std::size_t i = 0; i < elements_.size(); ++i) {
                    if (i) out += ", ";
                    elements_[i].emit_to(out, indent);
                }
                out += ']';
            } else {
                out += "[\n";
                for (std::size_t i = 0; i < elements_.size(); ++i) {
                    out += inner;
                    elements_[i].emit_to(out, indent + 1);
                    if (i + 1 < elements_.size()) out += ',';
                    out += '\n';
                }
                out += pad;
                out += ']';
            }
            return;
        case Kind::Object:
            if (members_.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            for (std::size_t i = 0; i < members_.size(); ++i) {
                out += inner;
                escape_string(members_[i].first, out);
                out += ": ";
                members_[i].second.emit_to(out, indent + 1);
                if (i + 1 < members_.size()) out += ',';
                out += '\n';
            }
            out += pad;
            out += '}';
            return;
    }
}

std::string Value::emit() const {
    std::string out;
    emit_to(out, 0);
    out += '\n';
    return out;
}

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    Value run() {
        skip_ws();
        Value v = parse_value();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters after document");
        return v;
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "parse error at byte " << pos_ << ": " << msg;
        throw ParseError(os.str());
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    char peek() const {
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input");
        return text_[pos_];
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool consume_word(const char* word) {
        std::size_t len = std::char_traits<char>::length(word);
        if (text_.compare(pos_, len, word) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }

    Value parse_value() {
        switch (peek()) {
            case '{': return parse_object();
            case '[': return parse_array();
            case '"': return Value::string(parse_string());
            case 't':
                if (consume_word("true")) return Value::boolean(true);
                fail("unrecognized token");
            case 'f':
                if (consume_word("false")) return Value::boolean(false);
                fail("unrecognized token");
            case 'n': fail("null is not supported in this format");
            default: return parse_integer();
        }
    }

    Value parse_object() {
        expect('{');
        Value obj = Value::object();
        skip_ws();
        if (peek() == '}') {
            ++pos_;
            return obj;
        }
        for (;;) {
            skip_ws();
            std::string key = parse_string();
            if (obj.has(key)) fail("duplicate key '" + key + "'");
            skip_ws();
            expect(':');
            skip_ws();
            obj.set(key, parse_value());
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect('}');
            return obj;
        }
    }

    Value parse_array() {
        expect('[');
        Value arr = Value::array();
        skip_ws();
        if (peek() == ']') {
            ++pos_;
            return arr;
        }
        for (;;) {
            skip_ws();
            arr.push_back(parse_value());
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            return arr;
        }
    }

    std::string parse_string() {
        expect('"');
        std::string out;
        for (;;) {
            if (pos_ >= text_.size()) fail("unterminated string");
            char c = text_[pos_++];
            if (c == '"') return out;
            if (c != '\\') {
                out += c;
                continue;
            }
            if (pos_ >= text_.size()) fail("unterminated escape");
            char e = text_[pos_++];
            switch (e) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case '/': out += '/'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case 'r': out += '\r'; break;
                case 'u': {
                    if (pos_ + 4 > text_.size()) fail("truncated \\u escape");
                    unsigned code = 0;
                    for (int i = 0; i < 4; ++i) {
                        char h = text_[pos_++];
                        code <<= 4;
                        if (h >= '0' && h <= '9')
                            code += static_cast<unsigned>(h - '0');
                        else if (h >= 'a' && h <= 'f')
                            code += static_cast<unsigned>(h - 'a' + 10);
                        else if (h >= 'A' && h <= 'F')
                            code += static_cast<unsigned>(h - 'A' + 10);
                        else
                            fail("bad hex digit in \\u escape");
                    }
                    if (code > 0x7f) fail("non-ASCII \\u escape is not supported");
                    out += static_cast<char>(code);
                    break;
                }
                default: fail("unsupported escape sequence");
            }
        }
    }

    Value parse_integer() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a value");
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() &&
            (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
            fail("floating point numbers are not supported in this format");
        return Value::integer(Int(text_.substr(start, pos_ - start)));
    }
};

}  // namespace

Value parse(const std::string& text) { return Parser(text).run(); }

}  // namespace reebcert::jsonval
