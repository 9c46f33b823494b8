// SPDX-License-Identifier: Apache-2.0
#pragma once

// Small JSON Schema checker covering the keyword subset used by
// docs/report_schema_v1.json: type (single or list), const, enum, required,
// properties, additionalProperties (boolean), items (single schema), anyOf,
// and local $ref into #/$defs. Collects every violation with its path.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace schema_check {

using Json = nlohmann::ordered_json;

inline bool type_matches(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer();  // signed or unsigned
    if (t == "number") return v.is_number();
    return false;
}

inline const Json& resolve_ref(const Json& root, const std::string& ref) {
    if (ref == "#") return root;
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref: " + ref);
    return root.at("$defs").at(ref.substr(prefix.size()));
}

inline void check(const Json& root, const Json& schema, const Json& v, const std::string& path,
                  std::vector<std::string>& errors) {
    if (schema.contains("$ref")) {
        check(root, resolve_ref(root, schema["$ref"].get<std::string>()), v, path, errors);
        return;
    }

    if (schema.contains("type")) {
        const Json& t = schema["type"];
        bool ok = false;
        if (t.is_array()) {
            for (const auto& one : t) ok = ok || type_matches(v, one.get<std::string>());
        } else {
            ok = type_matches(v, t.get<std::string>());
        }
        if (!ok) errors.push_back(path + ": type mismatch, got " + std::string(v.type_name()));
    }

    if (schema.contains("const") && v != schema["const"])
        errors.push_back(path + ": expected const " + schema["const"].dump());

    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& e : schema["enum"]) ok = ok || (v == e);
        if (!ok) errors.push_back(path + ": value " + v.dump() + " not in enum");
    }

    if (schema.contains("anyOf")) {
        bool ok = false;
        for (const auto& alt : schema["anyOf"]) {
            std::vector<std::string> sub;
            check(root, alt, v, path, sub);
            if (sub.empty()) {
                ok = true;
                break;
            }
        }
        if (!ok) errors.push_back(path + ": no anyOf branch matched");
    }

    if (v.is_object()) {
        if (schema.contains("required"))
            for (const auto& name : schema["required"])
                if (!v.contains(name.get<std::string>()))
                    errors.push_back(path + ": missing required key " + name.get<std::string>());
        const Json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
        bool closed = schema.contains("additionalProperties")
                      && schema["additionalProperties"].is_boolean()
                      && !schema["additionalProperties"].get<bool>();
        for (const auto& [key, val] : v.items()) {
            if (props && props->contains(key)) {
                check(root, (*props)[key], val, path + "/" + key, errors);
            } else if (closed) {
                errors.push_back(path + ": unexpected key " + key);
            }
        }
    }

    if (v.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const auto& item : v) {
            check(root, schema["items"], item, path + "/" + std::to_string(i), errors);
            ++i;
        }
    }
}

// All violations of `instance` against the root schema; empty means valid.
inline std::vector<std::string> validate(const Json& schema, const Json& instance) {
    std::vector<std::string> errors;
    check(schema, schema, instance, "", errors);
    return errors;
}

// Same, but against one named entry of the schema's $defs.
inline std::vector<std::string> validate_def(const Json& schema, const std::string& def,
                                             const Json& instance) {
    std::vector<std::string> errors;
    check(schema, schema.at("$defs").at(def), instance, "", errors);
    return errors;
}

}  // namespace schema_check
