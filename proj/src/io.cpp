#include "stirling_kit/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stirling_kit {

using nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "table") return OutputFormat::table;
    throw std::invalid_argument("unknown format \"" + std::string(text) + "\" (expected json, csv or table)");
}

std::vector<std::string> render_values(const SequenceValues& values) {
    return std::visit(
        [](const auto& vec) {
            std::vector<std::string> out;
            out.reserve(vec.size());
            for (const auto& v : vec) out.push_back(to_string(v));
            return out;
        },
        values);
}

namespace {

template <class T>
std::vector<T> parse_all(const std::vector<std::string>& texts) {
    std::vector<T> out;
    out.reserve(texts.size());
    for (std::size_t i = 0; i < texts.size(); ++i) {
        try {
            out.push_back(parse_element<T>(texts[i]));
        } catch (const std::exception& e) {
            throw std::invalid_argument("value " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

std::string meta_text(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

SequenceValues parse_values(const std::vector<std::string>& texts, DomainTag domain) {
    switch (domain) {
        case DomainTag::integer: return parse_all<Integer>(texts);
        case DomainTag::rational: return parse_all<Rational>(texts);
        case DomainTag::surd5: {
            auto values = parse_all<QuadraticSurd>(texts);
            for (const auto& v : values) {
                if (v.radicand() != 5) throw std::invalid_argument("surd5 values must use sqrt(5)");
            }
            return values;
        }
        case DomainTag::polynomial: return parse_all<RationalPolynomial>(texts);
    }
    throw std::invalid_argument("unknown domain");
}

SequenceRecord parse_sequence_file(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("sequence file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("sequence file must be a JSON object");
    for (const char* key : {"name", "domain", "values"}) {
        if (!doc.contains(key)) throw std::invalid_argument(std::string("sequence file lacks \"") + key + "\"");
    }
    if (!doc["name"].is_string() || !doc["domain"].is_string() || !doc["values"].is_array()) {
        throw std::invalid_argument("sequence file fields have the wrong JSON types");
    }
    std::vector<std::string> texts;
    for (const auto& v : doc["values"]) {
        if (!v.is_string()) throw std::invalid_argument("sequence values must be strings of canonical text");
        texts.push_back(v.get<std::string>());
    }
    if (texts.empty()) throw std::invalid_argument("sequence file has no values");

    SequenceRecord record;
    record.name = doc["name"].get<std::string>();
    record.values = parse_values(texts, parse_domain_tag(doc["domain"].get<std::string>()));
    if (doc.contains("meta")) {
        if (!doc["meta"].is_object()) throw std::invalid_argument("\"meta\" must be an object");
        for (const auto& [k, v] : doc["meta"].items()) record.meta[k] = meta_text(v);
    }
    return record;
}

std::string render_sequence_file(const SequenceRecord& record) {
    ordered_json doc;
    doc["name"] = record.name;
    doc["domain"] = std::string(domain_name(record.domain()));
    doc["values"] = render_values(record.values);
    doc["meta"] = ordered_json::object();
    for (const auto& [k, v] : record.meta) doc["meta"][k] = v;
    return doc.dump(2) + "\n";
}

SequenceRecord load_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_sequence_file(buffer.str());
}

std::string render_sequence(const SequenceRecord& record, OutputFormat format) {
    const auto texts = render_values(record.values);
    std::string out;
    switch (format) {
        case OutputFormat::json: return render_sequence_file(record);
        case OutputFormat::csv:
            for (std::size_t i = 0; i < texts.size(); ++i) out += (i ? "," : "") + texts[i];
            return out + "\n";
        case OutputFormat::table:
            for (std::size_t i = 0; i < texts.size(); ++i) out += std::to_string(i) + "\t" + texts[i] + "\n";
            return out;
    }
    return out;
}

std::string render_matrix(const MatrixText& matrix, OutputFormat format) {
    std::string out;
    switch (format) {
        case OutputFormat::json: {
            ordered_json doc;
            doc["name"] = matrix.name;
            doc["domain"] = std::string(domain_name(matrix.domain));
            doc["built_from"] = matrix.built_from == BuiltFrom::initial ? "initial" : "final";
            doc["rows"] = matrix.rows;
            return doc.dump(2) + "\n";
        }
        case OutputFormat::csv:
            for (const auto& row : matrix.rows) {
                for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + row[j];
                out += "\n";
            }
            return out;
        case OutputFormat::table: {
            std::vector<std::size_t> width;
            for (const auto& row : matrix.rows) {
                width.resize(std::max(width.size(), row.size()));
                for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
            }
            for (const auto& row : matrix.rows) {
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (j) out += "  ";
                    out += std::string(width[j] - row[j].size(), ' ') + row[j];
                }
                out += "\n";
            }
            return out;
        }
    }
    return out;
}

}  // namespace stirling_kit
