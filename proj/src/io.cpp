#include "orb/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orb/constructors.hpp"

namespace orb {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON");
    if (!j.is_object()) throw InputError("top-level JSON object expected");
    return j;
}

int int_param(const json& params, const std::string& key) {
    if (!params.contains(key) || !params[key].is_number_integer())
        throw InputError("missing integer parameter \"" + key + "\"");
    return params[key].get<int>();
}

std::vector<std::vector<int>> int_arrays(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw InputError(what + ": nonempty array expected");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw InputError(what + ": array of arrays expected");
        out.push_back(row.get<std::vector<int>>());
    }
    return out;
}

FiniteGroup from_family(const std::string& kind, const json& params) {
    if (kind == "cyclic") return cyclic(int_param(params, "n"));
    if (kind == "elementary_abelian")
        return elementary_abelian(int_param(params, "p"), int_param(params, "k"));
    if (kind == "dihedral") return dihedral(int_param(params, "order"));
    if (kind == "quaternion8") return quaternion8();
    if (kind == "dicyclic12") return dicyclic12();
    if (kind == "extraspecial") return extraspecial_p3_exp_p(int_param(params, "p"));
    if (kind == "sym") return sym(int_param(params, "n")).group;
    if (kind == "alt") return alt(int_param(params, "n")).group;
    if (kind == "sl2") return sl2(int_param(params, "q")).group;
    if (kind == "psl2") return psl2(int_param(params, "q"));
    throw InputError("unknown group family \"" + kind + "\"");
}

FiniteGroup from_generators(const json& gens) {
    if (!gens.is_object()) throw InputError("\"generators\" must be an object");
    if (gens.contains("perms")) {
        if (!gens.contains("degree")) throw InputError("permutation generators need \"degree\"");
        int degree = gens["degree"].get<int>();
        return permutation_group(degree, int_arrays(gens["perms"], "perms"), "input-perm").group;
    }
    if (gens.contains("matrices")) {
        if (!gens.contains("field")) throw InputError("matrix generators need \"field\"");
        const json& fj = gens["field"];
        GaloisField f = GaloisField::make(int_param(fj, "p"),
                                          fj.contains("k") ? int_param(fj, "k") : 1);
        std::vector<Matrix> ms;
        for (const auto& mj : gens["matrices"]) {
            std::vector<std::vector<int>> rows;
            for (const auto& row : mj) rows.push_back(row.get<std::vector<int>>());
            ms.push_back(Matrix::from_int_rows(f, rows));
        }
        if (ms.empty()) throw InputError("empty matrix generator list");
        return matrix_group(f, ms, "input-mat").group;
    }
    throw InputError("\"generators\" needs either \"perms\" or \"matrices\"");
}

} // namespace

FiniteGroup parse_group(const std::string& text) {
    json j = parse_json(text);
    try {
        if (j.contains("kind"))
            return from_family(j["kind"].get<std::string>(),
                               j.contains("params") ? j["params"] : json::object());
        if (j.contains("generators")) return from_generators(j["generators"]);
    } catch (const json::exception& e) {
        throw InputError(std::string("group input: ") + e.what());
    } catch (const OutOfRange& e) {
        throw InputError(std::string("group input: ") + e.what());
    }
    throw InputError("group input needs \"kind\" or \"generators\"");
}

ActionSpec parse_action(const FiniteGroup& g, const std::string& text, long long aut_budget) {
    json j = parse_json(text);
    try {
        if (j.contains("action")) {
            std::string a = j["action"].get<std::string>();
            if (a == "inner") return inner_action(g);
            if (a == "full_aut") return full_aut(g, aut_budget);
            throw InputError("unknown action \"" + a + "\"");
        }
        std::string key = j.contains("maps") ? "maps" : j.contains("overgroup") ? "overgroup" : "";
        if (key.empty()) throw InputError("action input needs \"action\", \"maps\" or \"overgroup\"");
        ActionSpec spec;
        spec.kind = key == "maps" ? ActionKind::Explicit : ActionKind::Overgroup;
        spec.name = key;
        for (auto& image : int_arrays(j[key], key)) {
            validate_automorphism(g, image);
            spec.generators.push_back(Automorphism{std::move(image)});
        }
        return spec;
    } catch (const json::exception& e) {
        throw InputError(std::string("action input: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace orb
