#include "markovhull/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace markovhull {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

json word_set_to_json(const TransitionMatrix& T, LetterSet X) {
    json arr = json::array();
    for (Letter a : X.letters()) arr.push_back(T.letter_name(a));
    return arr;
}

LetterSet letter_set_from_json(const TransitionMatrix& T, const json& arr) {
    if (!arr.is_array()) throw input_error("letter set must be a JSON array of letter names");
    LetterSet X;
    for (const auto& item : arr) {
        if (!item.is_string()) throw input_error("letter set entries must be letter names");
        X.insert(T.letter_index(item.get<std::string>()));
    }
    return X;
}

json matrix_to_json(const TransitionMatrix& T) {
    json out;
    out["alphabet"] = T.alphabet();
    json rows = json::array();
    for (std::size_t i = 0; i < T.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < T.size(); ++j)
            row.push_back(T.entry(static_cast<Letter>(i), static_cast<Letter>(j)) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    out["matrix"] = std::move(rows);
    return out;
}

MatrixRef matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("alphabet") || !j.contains("matrix"))
        throw input_error("a matrix needs \"alphabet\" and \"matrix\" fields");
    std::vector<std::string> alphabet;
    if (!j["alphabet"].is_array())
        throw input_error("\"alphabet\" must be an array of letter names");
    for (const auto& item : j["alphabet"]) {
        if (!item.is_string()) throw input_error("letter names must be strings");
        alphabet.push_back(item.get<std::string>());
    }
    std::vector<std::vector<int>> entries;
    if (!j["matrix"].is_array()) throw input_error("\"matrix\" must be an array of rows");
    for (const auto& row : j["matrix"]) {
        if (!row.is_array()) throw input_error("matrix rows must be arrays");
        std::vector<int> r;
        for (const auto& cell : row) {
            if (!cell.is_number_integer()) throw input_error("matrix entries must be integers");
            r.push_back(cell.get<int>());
        }
        entries.push_back(std::move(r));
    }
    return make_matrix(std::move(alphabet), entries);
}

json oset_to_json(const std::vector<CanonicalElement>& O) {
    json arr = json::array();
    for (const auto& e : O) {
        const TransitionMatrix& T = *e.matrix();
        json item;
        item["s"] = word_to_string(T, e.left());
        item["X"] = word_set_to_json(T, e.middle());
        arr.push_back(std::move(item));
    }
    return arr;
}

std::vector<CanonicalElement> oset_from_json(const MatrixRef& T, const json& j) {
    if (!j.is_array()) throw input_error("an O-set file must hold a JSON array");
    std::vector<CanonicalElement> out;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("s") || !item.contains("X"))
            throw input_error("each O-set entry needs \"s\" and \"X\" fields");
        if (!item["s"].is_string()) throw input_error("\"s\" must be a word string");
        const Word s = parse_word(*T, item["s"].get<std::string>());
        const LetterSet X = letter_set_from_json(*T, item["X"]);
        out.push_back(CanonicalElement::make(T, s, X, s));
    }
    return out;
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file \"" + path + "\"");
    out << text;
}

MatrixRef matrix_from_json_text(const std::string& text) {
    return matrix_from_json(parse_json(text));
}

MatrixRef load_matrix(const std::string& path) {
    return matrix_from_json_text(read_text_file(path));
}

std::string matrix_to_json_text(const TransitionMatrix& T) {
    return matrix_to_json(T).dump(2) + "\n";
}

std::vector<CanonicalElement> oset_from_json_text(const MatrixRef& T, const std::string& text) {
    if (!T) throw usage_error("null transition matrix");
    return oset_from_json(T, parse_json(text));
}

std::vector<CanonicalElement> load_oset(const MatrixRef& T, const std::string& path) {
    return oset_from_json_text(T, read_text_file(path));
}

std::string oset_to_json_text(const std::vector<CanonicalElement>& O) {
    return oset_to_json(O).dump(2) + "\n";
}

std::string fingerprint_to_json_text(const std::map<int, long>& hist) {
    json out;
    for (const auto& [k, count] : hist) out[std::to_string(k)] = count;
    return out.dump(2) + "\n";
}

std::string certificate_to_json_text(const Certificate& cert) {
    json out;
    out["matrix"] = matrix_to_json(*cert.matrix);
    out["oset"] = oset_to_json(cert.oset);
    json axioms = json::array();
    for (const auto& a : cert.axioms)
        axioms.push_back({{"axiom", a.axiom}, {"pass", a.pass}, {"notes", a.notes}});
    out["axioms"] = std::move(axioms);
    json alphabet = json::array();
    for (const auto& entry : cert.alphabet) {
        const TransitionMatrix& T = *cert.matrix;
        json e;
        e["name"] = entry.name;
        e["element"] = entry.element.to_literal();
        e["s"] = word_to_string(T, entry.element.left());
        e["X"] = word_set_to_json(T, entry.element.middle());
        e["w"] = word_to_string(T, entry.element.right());
        alphabet.push_back(std::move(e));
    }
    out["alphabet"] = std::move(alphabet);
    out["induced_matrix"] = cert.induced ? matrix_to_json(*cert.induced) : json(nullptr);
    json gen;
    gen["bound"] = cert.generation.bound;
    gen["complete"] = cert.generation.complete;
    gen["closure_size"] = cert.generation.closure_size;
    json witnesses = json::array();
    for (const auto& w : cert.generation.witnesses)
        witnesses.push_back({{"target", w.target_name}, {"product", w.expression}});
    gen["witnesses"] = std::move(witnesses);
    out["generation"] = std::move(gen);
    out["verdict"] = cert.verdict;
    out["note"] = cert.note;
    return out.dump(2) + "\n";
}

bool replay_certificate_text(const std::string& text, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    json j;
    MatrixRef T;
    std::vector<CanonicalElement> O;
    try {
        j = parse_json(text);
        if (!j.is_object()) throw input_error("a certificate must be a JSON object");
        T = matrix_from_json(j.at("matrix"));
        O = oset_from_json(T, j.at("oset"));
    } catch (const std::exception& e) {
        return fail(std::string("cannot parse certificate: ") + e.what());
    }

    try {
        const int bound = j.at("generation").at("bound").get<int>();
        const Certificate fresh = build_certificate(T, O, bound);

        if (fresh.verdict != j.at("verdict").get<std::string>())
            return fail("stored verdict " + j.at("verdict").get<std::string>() +
                        " does not reproduce (got " + fresh.verdict + ")");

        const auto& stored_alpha = j.at("alphabet");
        if (stored_alpha.size() != fresh.alphabet.size())
            return fail("stored alphabet has a different size than the reproduced one");
        std::map<std::string, CanonicalElement> lookup;
        for (std::size_t i = 0; i < fresh.alphabet.size(); ++i) {
            const auto& entry = stored_alpha.at(i);
            const std::string name = entry.at("name").get<std::string>();
            const Word s = parse_word(*T, entry.at("s").get<std::string>());
            const Word w = parse_word(*T, entry.at("w").get<std::string>());
            const LetterSet X = letter_set_from_json(*T, entry.at("X"));
            const CanonicalElement el = CanonicalElement::make(T, s, X, w);
            if (el.to_literal() != entry.at("element").get<std::string>())
                return fail("alphabet entry " + name + " disagrees with its own literal");
            if (name != fresh.alphabet[i].name || !(el == fresh.alphabet[i].element))
                return fail("alphabet entry " + name + " does not reproduce");
            lookup.emplace(name, el);
            lookup.emplace(name + "^-1", el.inverse());
        }

        const auto& stored_induced = j.at("induced_matrix");
        if (stored_induced.is_null() != !fresh.induced)
            return fail("stored induced matrix presence does not reproduce");
        if (!stored_induced.is_null()) {
            MatrixRef ind = matrix_from_json(stored_induced);
            if (!(*ind == *fresh.induced)) return fail("induced matrix does not reproduce");
        }

        for (const auto& w : j.at("generation").at("witnesses")) {
            const std::string target_name = w.at("target").get<std::string>();
            const CanonicalElement target =
                CanonicalElement::generator(T, parse_word(*T, target_name));
            const auto& product = w.at("product");
            if (!product.is_array() || product.empty())
                return fail("witness for " + target_name + " has no factors");
            CanonicalElement acc = CanonicalElement::zero(T);
            bool first = true;
            for (const auto& tok : product) {
                auto it = lookup.find(tok.get<std::string>());
                if (it == lookup.end())
                    return fail("witness for " + target_name + " names an unknown generator");
                acc = first ? it->second : multiply(acc, it->second);
                first = false;
            }
            if (!(acc == target))
                return fail("witness product for " + target_name +
                            " does not equal the letter map");
        }
    } catch (const std::exception& e) {
        return fail(std::string("certificate replay failed: ") + e.what());
    }
    if (why) why->clear();
    return true;
}

} // namespace markovhull
