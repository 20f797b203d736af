#include "krqt/json_io.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace krqt {

Json to_json(const YMonomial& m) {
    Json arr = Json::array();
    for (const auto& [v, e] : m.exponents()) arr.push_back({v.node, v.spectral, e});
    return arr;
}

Json to_json(const TLaurent& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.coeffs()) arr.push_back({e, c});
    return arr;
}

Json to_json(const QtCharacter& chi, const KrLabel* label) {
    Json j;
    j["schema"] = kSchemaVersion;
    if (label != nullptr)
        j["label"] = {{"rank", label->rank},
                      {"i", label->node},
                      {"j", label->spectral},
                      {"k", label->width}};
    j["dominant"] = to_json(chi.dominant());
    Json terms = Json::array();
    for (const auto& [m, c] : chi.terms()) terms.push_back({to_json(m), to_json(c)});
    j["terms"] = terms;
    return j;
}

Json to_json(const GeneralTableau& t, const KrLabel& label) {
    Json j;
    j["shape"] = {label.node, label.spectral, label.width};
    Json cols = Json::array();
    for (const auto& col : t.columns()) cols.push_back(col.values());
    j["columns"] = cols;
    return j;
}

Json to_json(const MatrixWindow& w) {
    Json j;
    Json idx = Json::array();
    for (const auto& ci : w.index) idx.push_back({ci.node, ci.width});
    j["index"] = idx;
    j["entries"] = w.entries;
    return j;
}

Json to_json(const A1Tables& t) {
    Json j;
    j["n"] = t.n;
    j["b"] = t.b;
    j["epsilon"] = t.eps;
    j["b_closed_form"] = t.b_closed_form;
    j["epsilon_closed_form"] = t.eps_closed_form;
    j["closed_forms_match"] = t.closed_forms_match;
    return j;
}

Json to_json(const CompatReport& r) {
    Json j;
    j["check"] = "compat";
    j["params"] = {{"rank", r.rank}, {"kmax", r.k_max}};
    j["pass"] = r.pass;
    j["diagonal"] = r.diagonal;
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back({{"row", {x.row.node, x.row.width}},
                     {"col", {x.col.node, x.col.width}},
                     {"value", x.value},
                     {"expected", x.expected}});
    j["violations"] = v;
    return j;
}

Json to_json(const IdentityReport& r) {
    Json j;
    j["check"] = r.check;
    j["params"] = {{"rank", r.rank}, {"i", r.node}, {"k", r.width}, {"j", r.spectral}};
    j["pass"] = r.pass;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

Json to_json(const CounterexampleReport& r) {
    Json j;
    j["check"] = "counterexample";
    j["params"] = Json::object();
    j["pass"] = r.pass;
    j["witness"] = {{"forward_constant", to_json(r.forward_constant)},
                    {"reversed_constant", to_json(r.reversed_constant)},
                    {"alpha_absent", r.alpha_absent},
                    {"detail", r.witness}};
    return j;
}

Json to_json(const SigmaPartition& p) {
    Json j;
    j["check"] = "thm31";
    j["params"] = {{"rank", p.label1.rank},
                   {"i1", p.label1.node},
                   {"k1", p.label1.width},
                   {"j1", p.label1.spectral},
                   {"i2", p.label2.node},
                   {"k2", p.label2.width},
                   {"j2", p.label2.spectral}};
    j["pass"] = p.pass;
    j["sizes"] = {{"p0", p.p0.size()},
                  {"paired", p.pairings.size()},
                  {"failures", p.pairing_failures.size()},
                  {"total", p.left.size() * p.right.size()}};
    Json v = Json::array();
    for (const auto& x : p.violations) v.push_back({{"pair", x.pair_index}, {"what", x.what}});
    j["violations"] = v;
    return j;
}

YMonomial monomial_from_json(const Json& j) {
    YMonomial m;
    for (const auto& entry : j)
        m.multiply_by(entry.at(0).get<int>(), entry.at(1).get<int>(), entry.at(2).get<int>());
    return m;
}

TLaurent tlaurent_from_json(const Json& j) {
    TLaurent p;
    for (const auto& entry : j) p.add_term(entry.at(0).get<int>(), entry.at(1).get<long long>());
    return p;
}

std::optional<QtCharacter> character_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchemaVersion) return std::nullopt;
    QtCharacter chi{monomial_from_json(j.at("dominant"))};
    for (const auto& term : j.at("terms"))
        chi.add_term(monomial_from_json(term.at(0)), tlaurent_from_json(term.at(1)));
    return chi;
}

std::string content_hash(const Json& j) {
    const std::string dump = j.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

CharacterCache CharacterCache::from_environment() {
    if (const char* env = std::getenv("KRQT_CACHE_DIR"); env != nullptr && *env != '\0')
        return CharacterCache(env);
    if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0')
        return CharacterCache(std::string(home) + "/.cache/krqt");
    return CharacterCache(".krqt-cache");
}

std::string CharacterCache::path_for(const KrLabel& label) const {
    std::ostringstream os;
    os << root_ << "/" << kSchemaVersion << "/char_r" << label.rank << "_i" << label.node << "_j"
       << label.spectral << "_k" << label.width << ".json";
    return os.str();
}

std::optional<QtCharacter> CharacterCache::load(const KrLabel& label) const {
    std::ifstream in(path_for(label));
    if (!in) return std::nullopt;
    Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) return std::nullopt;
    return character_from_json(j);
}

void CharacterCache::store(const KrLabel& label, const QtCharacter& chi) const {
    const std::string path = path_for(label);
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    std::ofstream out(path);
    out << to_json(chi, &label).dump(2) << "\n";
}

}  // namespace krqt
