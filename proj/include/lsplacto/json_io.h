#pragma once

#include "lsplacto/crystal.h"
#include "lsplacto/plactic.h"
#include "lsplacto/typea_oracle.h"

#include "json.hpp"

#include <string>

namespace lsplacto {

using Json = nlohmann::ordered_json;

/// Array of breakpoint coordinate arrays; rationals as "p/q" strings.
Json path_to_json(const Path &path);
Path path_from_json(const Json &j);

Json weight_to_json(const RationalWeight &v);
Json weight_to_json(const Weight &w);

/// {"factors":[{"shape":[...], "breakpoints":[...]}, ...]}
Json monomial_to_json(const Monomial &m);
Monomial monomial_from_json(const Json &j);

/// {vertices:[{id, shape, breakpoints, weight}], edges:[[u,i,v]]}
Json crystal_to_json(const CrystalGraph &graph);
std::string crystal_to_dot(const CrystalGraph &graph);

/// {system:{type,rank}, generators:[...], rules:[...]}
Json rules_to_json(const RootSystem &rs, const RewriteSystem &system);
Json generators_to_json(const GeneratorTable &table);

/// {termination:{pass,failures}, confluence:{pass,triples_checked,failures}}
Json audit_to_json(const RewriteSystem &system,
                   const TerminationReport &termination,
                   const ConfluenceReport &confluence);

/// {n, max_len, words, classes_path_model, classes_knuth, mismatches}
Json oracle_to_json(const OracleReport &report);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json &j);

} // namespace lsplacto
