#include "reebcert/report.hpp"

#include <algorithm>
#include <sstream>

#include "reebcert/errors.hpp"
#include "reebcert/jsonval.hpp"

namespace reebcert::report {

namespace {

using jsonval::Value;

const char* bstr(bool b) { return b ? "true" : "false"; }

std::string bracket_list(const std::vector<Int>& values) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << ']';
    return os.str();
}

std::string paren_tuple(const std::vector<Int>& values) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << ')';
    return os.str();
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (rat_den(r) != 1) os << '/' << rat_den(r);
    return os.str();
}

Value int_array(const std::vector<Int>& values) {
    Value arr = Value::array();
    for (const Int& v : values) arr.push_back(Value::integer(v));
    return arr;
}

Value class_image_json(const ClassImage& img) {
    Value obj = Value::object();
    obj.set("coordinates", int_array(img.coordinates));
    obj.set("zero", Value::boolean(img.zero));
    return obj;
}

// Two-column key/value block with the values aligned.
class KeyValueBlock {
  public:
    void add(std::string key, std::string value) {
        width_ = std::max(width_, key.size());
        lines_.emplace_back(std::move(key), std::move(value));
    }

    void render(std::ostream& os) const {
        for (const auto& [key, value] : lines_)
            os << key << std::string(width_ - key.size() + 2, ' ') << value << '\n';
    }

  private:
    std::vector<std::pair<std::string, std::string>> lines_;
    std::size_t width_ = 0;
};

// Left-aligned table, two spaces between columns, no trailing padding.
class Table {
  public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    void render(std::ostream& os) const {
        std::vector<std::size_t> widths;
        for (const auto& row : rows_) {
            if (widths.size() < row.size()) widths.resize(row.size(), 0);
            for (std::size_t i = 0; i < row.size(); ++i)
                widths[i] = std::max(widths[i], row[i].size());
        }
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << "  ";
                os << row[i];
                if (i + 1 < row.size()) os << std::string(widths[i] - row[i].size(), ' ');
            }
            os << '\n';
        }
    }

  private:
    std::vector<std::vector<std::string>> rows_;
};

void lens_header(KeyValueBlock& kv, const LensSpace& lens) {
    kv.add("p", lens.pair.p.str());
    kv.add("q", lens.pair.q.str());
    kv.add("expansion", bracket_list(lens.cf.coefficients));
    kv.add("odd", bstr(lens.odd));
}

void lens_header_json(Value& obj, const LensSpace& lens) {
    obj.set("p", Value::integer(lens.pair.p));
    obj.set("q", Value::integer(lens.pair.q));
    obj.set("coefficients", int_array(lens.cf.coefficients));
    obj.set("odd", Value::boolean(lens.odd));
}

// 1-based position of the tuple -r in enumeration order; the admissible
// sets are symmetric about zero, so the conjugate always exists.
Int conjugate_index(const LensSpace& lens, const RotationTuple& rot) {
    Int index = 0;
    for (std::size_t j = 0; j < rot.values.size(); ++j) {
        const Int& n = lens.cf.coefficients[j];
        Int len = abs(n + 1);
        Int flipped_pos = (-rot.values[j] - (n + 2)) / 2;
        index = index * len + flipped_pos;
    }
    return index + 1;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "machine") return Format::Machine;
    throw InputError("unknown format '" + name + "' (expected text or machine)");
}

std::string cfrac_report(const LensSpace& lens, Format format) {
    if (format == Format::Machine) {
        Value obj = Value::object();
        obj.set("command", Value::string("cfrac"));
        lens_header_json(obj, lens);
        obj.set("q_sequence", int_array(lens.qseq.values));
        return obj.emit();
    }
    std::ostringstream os;
    KeyValueBlock kv;
    kv.add("p", lens.pair.p.str());
    kv.add("q", lens.pair.q.str());
    kv.add("expansion", bracket_list(lens.cf.coefficients));
    kv.add("q-sequence", bracket_list(lens.qseq.values));
    kv.add("odd", bstr(lens.odd));
    kv.render(os);
    return os.str();
}

std::string lens_count_report(const LensSpace& lens, Format format) {
    Int count = tight_count(lens);
    if (format == Format::Machine) {
        Value obj = Value::object();
        obj.set("command", Value::string("lens count"));
        lens_header_json(obj, lens);
        obj.set("tight_count", Value::integer(count));
        return obj.emit();
    }
    std::ostringstream os;
    KeyValueBlock kv;
    lens_header(kv, lens);
    kv.add("tight count", count.str());
    kv.render(os);
    return os.str();
}

std::string lens_enumerate_report(const LensSpace& lens, Format format) {
    const Int count = tight_count(lens);
    if (format == Format::Machine) {
        Value obj = Value::object();
        obj.set("command", Value::string("lens enumerate"));
        lens_header_json(obj, lens);
        obj.set("tight_count", Value::integer(count));
        Value rows = Value::array();
        Int index = 1;
        for_each_tight(lens, [&](const RotationTuple& rot) {
            NoncontractibleCertificate cert = noncontractible_certificate(lens, rot);
            Value row = Value::object();
            row.set("index", Value::integer(index));
            row.set("rotations", int_array(rot.values));
            row.set("reeb_class", Value::integer(cert.reeb_class_mod_p));
            row.set("noncontractible", Value::boolean(cert.noncontractible));
            row.set("conjugate_index", Value::integer(conjugate_index(lens, rot)));
            rows.push_back(std::move(row));
            index += 1;
            return true;
        });
        obj.set("tuples", std::move(rows));
        obj.set("note", Value::string("a nonzero class mod p certifies a non-contractible "
                                      "Reeb-link component (pi1 = H1 = Z_p)"));
        return obj.emit();
    }
    std::ostringstream os;
    KeyValueBlock kv;
    lens_header(kv, lens);
    kv.add("tight count", count.str());
    kv.render(os);
    os << '\n';
    Table table({"tuple", "rotations", "class", "noncontractible", "conjugate"});
    Int index = 1;
    for_each_tight(lens, [&](const RotationTuple& rot) {
        NoncontractibleCertificate cert = noncontractible_certificate(lens, rot);
        table.row({index.str(), paren_tuple(rot.values), cert.reeb_class_mod_p.str(),
                   bstr(cert.noncontractible), conjugate_index(lens, rot).str()});
        index += 1;
        return true;
    });
    table.render(os);
    os << "\nnote: a nonzero class mod p certifies a non-contractible Reeb-link component "
          "(pi1 = H1 = Z_p)\n";
    return os.str();
}

std::string survey_report(const SurveyReport& survey, bool parallel, Format format) {
    if (format == Format::Machine) {
        Value obj = Value::object();
        obj.set("command", Value::string("survey"));
        obj.set("pmax", Value::integer(survey.pmax));
        obj.set("parallel", Value::boolean(parallel));
        Value rows = Value::array();
        for (const SurveyRow& row : survey.rows) {
            Value r = Value::object();
            r.set("p", Value::integer(row.p));
            r.set("q", Value::integer(row.q));
            r.set("coefficients", int_array(row.coefficients));
            r.set("odd", Value::boolean(row.odd));
            r.set("tight_count", Value::integer(row.tight));
            r.set("tuples_checked", Value::integer(row.tuples_checked));
            if (!row.capped) r.set("min_reeb_class", Value::integer(row.min_class));
            r.set("class_violations", Value::integer(row.class_violations));
            r.set("bound_violations", Value::integer(row.bound_violations));
            r.set("capped", Value::boolean(row.capped));
            rows.push_back(std::move(r));
        }
        obj.set("rows", std::move(rows));
        Value summary = Value::object();
        summary.set("lens_spaces", Value::integer(survey.lens_spaces));
        summary.set("odd_lens_spaces", Value::integer(survey.odd_lens_spaces));
        summary.set("tuples_checked", Value::integer(survey.tuples_checked));
        summary.set("violations", Value::integer(survey.violations));
        summary.set("capped_cells", Value::integer(survey.capped_cells));
        obj.set("summary", std::move(summary));
        return obj.emit();
    }
    std::ostringstream os;
    KeyValueBlock kv;
    kv.add("pmax", survey.pmax.str());
    kv.add("parallel", bstr(parallel));
    kv.render(os);
    os << '\n';
    Table table({"p", "q", "expansion", "odd", "tight", "tuples", "min-class", "class-viol",
                 "bound-viol", "capped"});
    for (const SurveyRow& row : survey.rows)
        table.row({row.p.str(), row.q.str(), bracket_list(row.coefficients), bstr(row.odd),
                   row.tight.str(), row.tuples_checked.str(),
                   row.capped ? "-" : row.min_class.str(), row.class_violations.str(),
                   row.bound_violations.str(), bstr(row.capped)});
    table.render(os);
    os << "\nsummary: lens spaces " << survey.lens_spaces << ", odd " << survey.odd_lens_spaces
       << ", tuples checked " << survey.tuples_checked << ", violations " << survey.violations
       << ", capped cells " << survey.capped_cells << '\n';
    return os.str();
}

std::string brieskorn_report(const BrieskornRecord& record, Format format) {
    const Int last_exponent = 6 * record.n - 1;
    std::vector<std::string> fractions;
    for (const Rational& f : record.seifert.fractions) fractions.push_back(rational_str(f));
    const Rational sum = euler_sum(record.seifert);
    const Rational indicator = h1_order_indicator(record.seifert);

    if (format == Format::Machine) {
        Value obj = Value::object();
        obj.set("command", Value::string("brieskorn"));
        obj.set("n", Value::integer(record.n));
        Value exps = Value::array();
        exps.push_back(Value::integer(2));
        exps.push_back(Value::integer(3));
        exps.push_back(Value::integer(last_exponent));
        obj.set("milnor_exponents", std::move(exps));
        Value fracs = Value::array();
        for (const std::string& f : fractions) fracs.push_back(Value::string(f));
        obj.set("seifert_fractions", std::move(fracs));
        obj.set("euler_sum", Value::string(rational_str(sum)));
        obj.set("h1_order_indicator", Value::string(rational_str(indicator)));
        obj.set("homology_sphere", Value::boolean(record.is_homology_sphere));
        obj.set("milnor_b2_plus", Value::integer(record.milnor_b2_plus));
        obj.set("poincare_special_case", Value::boolean(record.poincare_special_case));
        if (record.tight_count) obj.set("tight_count", Value::integer(*record.tight_count));
        if (record.weinstein_holds)
            obj.set("weinstein_holds", Value::boolean(*record.weinstein_holds));
        if (record.universally_tight)
            obj.set("universally_tight", Value::boolean(*record.universally_tight));
        if (!record.tight_count_source.empty())
            obj.set("tight_count_source", Value::string(record.tight_count_source));
        obj.set("orientation_note", Value::string(record.orientation_note));
        return obj.emit();
    }
    std::ostringstream os;
    KeyValueBlock kv;
    kv.add("n", record.n.str());
    kv.add("brieskorn sphere", "Sigma(2,3," + last_exponent.str() + ")");
    {
        std::string joined;
        for (std::size_t i = 0; i < fractions.size(); ++i)
            joined += (i ? ", " : "") + fractions[i];
        kv.add("seifert fractions", joined);
    }
    kv.add("euler sum", rational_str(sum));
    kv.add("h1 order indicator", rational_str(indicator));
    kv.add("homology sphere", bstr(record.is_homology_sphere));
    kv.add("milnor fibre b2+", record.milnor_b2_plus.str());
    kv.add("poincare special case", bstr(record.poincare_special_case));
    kv.add("tight structures", record.tight_count ? record.tight_count->str() : "n/a");
    kv.add("weinstein holds", record.weinstein_holds ? bstr(*record.weinstein_holds) : "n/a");
    kv.add("universally tight",
           record.universally_tight ? bstr(*record.universally_tight) : "n/a");
    kv.render(os);
    if (!record.tight_count_source.empty()) os << "\nnote: " << record.tight_count_source << '\n';
    os << "note: " << record.orientation_note << '\n';
    return os.str();
}

std::string diagram_report(const FramedLinkDiagram& diagram, const WeinsteinVerdict& verdict,
                           Format format) {
    if (format == Format::Machine) {
        Value obj = Value::object();
        obj.set("command", Value::string("diagram"));
        obj.set("ambient", Value::string(diagram.ambient));
        Value knots = Value::array();
        for (const auto& k : diagram.knots) {
            Value knot = Value::object();
            knot.set("id", Value::string(k.id));
            knot.set("tb", Value::integer(k.tb));
            knot.set("rot", Value::integer(k.rot));
            knot.set("unknot", Value::boolean(k.is_unknot));
            knots.push_back(std::move(knot));
        }
        obj.set("knots", std::move(knots));
        Value linking = Value::array();
        for (std::size_t i = 0; i < diagram.linking.rows(); ++i) {
            Value row = Value::array();
            for (std::size_t j = 0; j < diagram.linking.cols(); ++j)
                row.push_back(Value::integer(diagram.linking.at(i, j)));
            linking.push_back(std::move(row));
        }
        obj.set("linking", std::move(linking));
        obj.set("valid", Value::boolean(true));
        obj.set("c1_filling_vector", int_array(verdict.c1_filling_vector));
        Value h1 = Value::object();
        {
            Value gens = Value::array();
            for (const std::string& g : verdict.boundary_h1.generators())
                gens.push_back(Value::string(g));
            h1.set("generators", std::move(gens));
        }
        h1.set("invariant_factors", int_array(verdict.boundary_h1.invariant_factors()));
        h1.set("description", Value::string(verdict.boundary_h1.description()));
        if (verdict.boundary_h1.is_finite())
            h1.set("order", Value::integer(verdict.boundary_h1.order()));
        obj.set("boundary_h1", std::move(h1));
        obj.set("c1_contact_class", class_image_json(verdict.c1_contact_class));
        obj.set("chen1_applies", Value::boolean(verdict.chen1_applies));
        obj.set("chen2_applies", Value::boolean(verdict.chen2_applies));
        obj.set("reeb_link_class", class_image_json(verdict.reeb_link_class));
        obj.set("non_null_homologous", Value::boolean(verdict.non_null_homologous));
        obj.set("notes", Value::string(verdict.notes));
        return obj.emit();
    }
    std::ostringstream os;
    KeyValueBlock head;
    head.add("ambient", diagram.ambient);
    head.add("knot count", std::to_string(diagram.knots.size()));
    head.render(os);
    os << '\n';
    Table knot_table({"id", "tb", "rot", "unknot", "framing"});
    for (std::size_t i = 0; i < diagram.knots.size(); ++i) {
        const auto& k = diagram.knots[i];
        knot_table.row({k.id, k.tb.str(), k.rot.str(), bstr(k.is_unknot),
                        diagram.linking.at(i, i).str()});
    }
    knot_table.render(os);
    os << "\nlinking matrix\n";
    for (std::size_t i = 0; i < diagram.linking.rows(); ++i) {
        std::vector<Int> row;
        row.reserve(diagram.linking.cols());
        for (std::size_t j = 0; j < diagram.linking.cols(); ++j)
            row.push_back(diagram.linking.at(i, j));
        os << "  " << bracket_list(row) << '\n';
    }
    os << '\n';
    KeyValueBlock kv;
    kv.add("validation", "ok");
    kv.add("c1 filling vector", paren_tuple(verdict.c1_filling_vector));
    kv.add("boundary H1", verdict.boundary_h1.description());
    kv.add("invariant factors", bracket_list(verdict.boundary_h1.invariant_factors()));
    kv.add("c1 contact class", paren_tuple(verdict.c1_contact_class.coordinates) +
                                   (verdict.c1_contact_class.zero ? " zero" : " nonzero"));
    kv.add("chen1 applies", bstr(verdict.chen1_applies));
    kv.add("chen2 applies", bstr(verdict.chen2_applies));
    kv.add("reeb link class", paren_tuple(verdict.reeb_link_class.coordinates) +
                                  (verdict.reeb_link_class.zero ? " zero" : " nonzero"));
    kv.add("non-null-homologous", bstr(verdict.non_null_homologous));
    kv.render(os);
    os << "\nnote: " << verdict.notes << '\n';
    return os.str();
}

}  // namespace reebcert::report
