#include "mahler/document.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace mahler {
namespace {

using nlohmann::json;

// nlohmann's DOM parser silently keeps the last value for a repeated key, so
// duplicates are caught in a SAX pre-pass that tracks the key set per open
// object.
class DuplicateKeyChecker : public nlohmann::json_sax<json> {
public:
    std::string duplicate;

    bool key(string_t& value) override {
        if (!scopes_.empty() && !scopes_.back().insert(value).second && duplicate.empty())
            duplicate = value;
        return true;
    }
    bool start_object(std::size_t) override {
        scopes_.emplace_back();
        return true;
    }
    bool end_object() override {
        scopes_.pop_back();
        return true;
    }
    bool null() override { return true; }
    bool boolean(bool) override { return true; }
    bool number_integer(number_integer_t) override { return true; }
    bool number_unsigned(number_unsigned_t) override { return true; }
    bool number_float(number_float_t, const string_t&) override { return true; }
    bool string(string_t&) override { return true; }
    bool binary(binary_t&) override { return true; }
    bool start_array(std::size_t) override { return true; }
    bool end_array() override { return true; }
    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::detail::exception& ex) override {
        throw DocumentError("malformed JSON at byte " + std::to_string(position) + ": " +
                            ex.what());
    }

private:
    std::vector<std::set<std::string>> scopes_;
};

Rational literal_at(const json& node, const std::string& where) {
    if (node.is_string()) {
        try {
            return parse_rational(node.get<std::string>());
        } catch (const std::invalid_argument& ex) {
            throw DocumentError("field '" + where + "': " + ex.what());
        }
    }
    if (node.is_number_integer() && !node.is_number_float())
        return Rational(Int(node.get<long long>()));
    if (node.is_number_unsigned())
        return Rational(Int(node.get<unsigned long long>()));
    throw DocumentError("field '" + where +
                        "': expected a rational literal string or an integer");
}

long integer_field(const json& object, const std::string& name) {
    if (!object.contains(name)) throw DocumentError("missing field '" + name + "'");
    const json& node = object.at(name);
    if (!node.is_number_integer())
        throw DocumentError("field '" + name + "' must be an integer");
    return node.get<long>();
}

}  // namespace

MahlerEquation parse_equation_document(const std::string& text) {
    DuplicateKeyChecker checker;
    json::sax_parse(text, &checker);
    if (!checker.duplicate.empty())
        throw DocumentError("duplicate field '" + checker.duplicate + "'");
    const json doc = json::parse(text);
    if (!doc.is_object()) throw DocumentError("document must be a JSON object");

    static const std::set<std::string> known = {"k", "d", "coefficients", "initial_terms",
                                                "name"};
    for (const auto& [field, value] : doc.items())
        if (!known.count(field)) throw DocumentError("unknown field '" + field + "'");

    MahlerEquation eq;
    const long k = integer_field(doc, "k");
    const long d = integer_field(doc, "d");
    if (k > std::numeric_limits<int>::max() || k < std::numeric_limits<int>::min())
        throw DocumentError("field 'k' is out of range");
    eq.k = static_cast<int>(k);

    if (!doc.contains("coefficients")) throw DocumentError("missing field 'coefficients'");
    const json& coefficients = doc.at("coefficients");
    if (!coefficients.is_array())
        throw DocumentError("field 'coefficients' must be an array of arrays");
    if (static_cast<long>(coefficients.size()) != d + 1)
        throw DocumentError("expected d+1 coefficient polynomials (d+1 = " +
                            std::to_string(d + 1) + ", got " +
                            std::to_string(coefficients.size()) + ")");
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        const json& entry = coefficients[i];
        const std::string where = "coefficients[" + std::to_string(i) + "]";
        if (!entry.is_array())
            throw DocumentError("field '" + where + "' must be an array of rational literals");
        std::vector<Rational> poly_coeffs;
        poly_coeffs.reserve(entry.size());
        for (std::size_t j = 0; j < entry.size(); ++j)
            poly_coeffs.push_back(literal_at(entry[j], where + "[" + std::to_string(j) + "]"));
        eq.coefficients.emplace_back(std::move(poly_coeffs));
    }

    if (!doc.contains("initial_terms")) throw DocumentError("missing field 'initial_terms'");
    const json& seeds = doc.at("initial_terms");
    if (!seeds.is_array())
        throw DocumentError("field 'initial_terms' must be an array of rational literals");
    for (std::size_t i = 0; i < seeds.size(); ++i)
        eq.initial_terms.push_back(literal_at(seeds[i], "initial_terms[" + std::to_string(i) + "]"));

    if (doc.contains("name")) {
        if (!doc.at("name").is_string()) throw DocumentError("field 'name' must be a string");
        eq.name = doc.at("name").get<std::string>();
    }

    const ValidationReport validation = validate_equation(eq);
    if (!validation.valid) {
        std::string message = "invalid equation";
        for (const auto& error : validation.errors) message += ": " + error;
        throw DocumentError(message);
    }
    return eq;
}

MahlerEquation load_equation_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_equation_document(buffer.str());
    } catch (const DocumentError& ex) {
        throw DocumentError(path + ": " + ex.what());
    }
}

}  // namespace mahler
