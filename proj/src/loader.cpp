#include <georag/corpus/loader.hpp>

#include <fstream>
#include <map>

#include <json.hpp>

#include <georag/errors.hpp>

namespace georag::corpus {

namespace {

using nlohmann::json;

std::string at_line(size_t line, const std::string& what) {
    return "line " + std::to_string(line) + ": " + what;
}

Document parse_document(const json& obj, size_t line) {
    if (!obj.is_object()) throw ParseError(at_line(line, "expected a JSON object"), line);

    auto require_string = [&](const char* key) -> std::string {
        if (!obj.contains(key)) {
            throw ParseError(at_line(line, std::string("missing required field \"") + key + "\""),
                             line);
        }
        if (!obj.at(key).is_string()) {
            throw ParseError(at_line(line, std::string("field \"") + key + "\" must be a string"),
                             line);
        }
        return obj.at(key).get<std::string>();
    };

    Document doc;
    doc.id = require_string("id");
    doc.text = require_string("text");
    doc.title = obj.value("title", std::string{});
    try {
        doc.source_type = source_type_from_string(require_string("source_type"));
    } catch (const ParseError& e) {
        throw ParseError(at_line(line, e.what()), line);
    }
    if (obj.contains("year") && !obj.at("year").is_null()) {
        if (!obj.at("year").is_number_integer()) {
            throw ParseError(at_line(line, "field \"year\" must be an integer"), line);
        }
        doc.year = obj.at("year").get<int>();
    }
    if (obj.contains("region_tags")) {
        for (const auto& t : obj.at("region_tags")) {
            if (!t.is_string()) {
                throw ParseError(at_line(line, "region_tags entries must be strings"), line);
            }
            try {
                doc.region_tags.emplace_back(t.get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw ParseError(at_line(line, e.what()), line);
            }
        }
    }
    if (obj.contains("centroid") && !obj.at("centroid").is_null()) {
        const auto& c = obj.at("centroid");
        if (!c.is_object() || !c.contains("lat") || !c.contains("lon")) {
            throw ParseError(at_line(line, "centroid must be {\"lat\":..,\"lon\":..}"), line);
        }
        try {
            doc.centroid = geo::GeoPoint(c.at("lat").get<double>(), c.at("lon").get<double>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(at_line(line, e.what()), line);
        }
    }
    if (obj.contains("tags")) {
        for (const auto& t : obj.at("tags")) {
            if (!t.is_string()) {
                throw ParseError(at_line(line, "tags entries must be strings"), line);
            }
            doc.tags.push_back(t.get<std::string>());
        }
    }
    validate_document(doc, line);
    return doc;
}

} // namespace

std::vector<Document> load_corpus(std::istream& in, const std::string& source_name) {
    std::vector<Document> docs;
    std::map<std::string, size_t> seen; // id -> first line
    std::string line_text;
    size_t line_no = 0;
    while (std::getline(in, line_text)) {
        ++line_no;
        if (line_text.find_first_not_of(" \t\r") == std::string::npos) continue;

        json obj;
        try {
            obj = json::parse(line_text);
        } catch (const json::parse_error& e) {
            throw ParseError(source_name + ": " + at_line(line_no, e.what()), line_no);
        }
        Document doc = parse_document(obj, line_no);

        auto [it, inserted] = seen.emplace(doc.id, line_no);
        if (!inserted) {
            throw ParseError(source_name + ": duplicate document id \"" + doc.id +
                                 "\" on lines " + std::to_string(it->second) + " and " +
                                 std::to_string(line_no),
                             line_no);
        }
        docs.push_back(std::move(doc));
    }
    return docs;
}

std::vector<Document> load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open corpus file: " + path.string());
    }
    return load_corpus(in, path.filename().string());
}

} // namespace georag::corpus
