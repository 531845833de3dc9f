#pragma once

// Name-based access to the series functions, shared by sweeps and the
// command line.

#include <map>
#include <string>
#include <vector>

#include "wright/series.hpp"

namespace wright {

struct FunctionInfo {
    std::string name;                 // canonical identifier, e.g. dW_dalpha
    std::vector<std::string> params;  // parameter names, the argument t last
    std::string domain;               // human-readable parameter domain
};

const std::vector<FunctionInfo>& function_catalog();

// Canonical name for an identifier: '-' and '/' read as '_', so
// "mittag-leffler" and "dW/dalpha" are accepted. DomainError when unknown.
const FunctionInfo& find_function(const std::string& name);

// Evaluates the named function; params must hold exactly its parameters.
// Domain violations raise DomainError from the function itself.
SeriesEval evaluate_function(const std::string& name, const std::map<std::string, double>& params);

}  // namespace wright
