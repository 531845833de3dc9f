#include "wright/functions.hpp"

#include <algorithm>

#include "wright/errors.hpp"
#include "wright/param_deriv.hpp"
#include "wright/wright.hpp"

namespace wright {

namespace {

const std::string kFirstKindDomain = "alpha >= 0, beta >= 0, t real";
const std::string kSigmaDomain = "0 < sigma < 1, t >= 0";

std::string canonical(std::string name)
{
    std::replace(name.begin(), name.end(), '-', '_');
    std::replace(name.begin(), name.end(), '/', '_');
    return name;
}

}  // namespace

const std::vector<FunctionInfo>& function_catalog()
{
    static const std::vector<FunctionInfo> catalog = {
        {"wright", {"alpha", "beta", "t"}, "alpha > -1, beta >= 0, t real (second kind for alpha < 0)"},
        {"mittag_leffler", {"alpha", "beta", "t"}, "alpha > 0, beta real, t real"},
        {"mainardi_m", {"sigma", "t"}, kSigmaDomain},
        {"mainardi_f", {"sigma", "t"}, kSigmaDomain},
        {"dW_dalpha", {"alpha", "beta", "t"}, kFirstKindDomain},
        {"dW_dbeta", {"alpha", "beta", "t"}, kFirstKindDomain},
        {"d2W_dalpha2", {"alpha", "beta", "t"}, kFirstKindDomain},
        {"d2W_dbeta2", {"alpha", "beta", "t"}, kFirstKindDomain},
        {"dE_dalpha", {"alpha", "beta", "t"}, "alpha > 0, beta >= 0, t real"},
        {"dE_dbeta", {"alpha", "beta", "t"}, "alpha > 0, beta >= 0, t real"},
        {"dF_dsigma", {"sigma", "t"}, kSigmaDomain},
        {"dM_dsigma", {"sigma", "t"}, kSigmaDomain},
        {"d2F_dsigma2", {"sigma", "t"}, kSigmaDomain},
        {"d2M_dsigma2", {"sigma", "t"}, kSigmaDomain},
    };
    return catalog;
}

const FunctionInfo& find_function(const std::string& name)
{
    const std::string key = canonical(name);
    for (const FunctionInfo& f : function_catalog()) {
        if (f.name == key) {
            return f;
        }
    }
    throw DomainError("unknown function '" + name + "'");
}

SeriesEval evaluate_function(const std::string& name, const std::map<std::string, double>& params)
{
    const FunctionInfo& info = find_function(name);
    for (const std::string& p : info.params) {
        if (params.count(p) == 0) {
            throw DomainError(info.name + ": missing parameter '" + p + "'");
        }
    }
    for (const auto& [key, value] : params) {
        if (std::find(info.params.begin(), info.params.end(), key) == info.params.end()) {
            throw DomainError(info.name + ": takes no parameter '" + key + "'");
        }
    }
    const double t = params.at("t");
    const std::string& n = info.name;
    if (info.params.front() == "sigma") {
        const SigmaParam s(params.at("sigma"));
        if (n == "mainardi_m") {
            return mainardi_m(s, t);
        }
        if (n == "mainardi_f") {
            return mainardi_f(s, t);
        }
        if (n == "dF_dsigma") {
            return dF_dsigma(s, t);
        }
        if (n == "dM_dsigma") {
            return dM_dsigma(s, t);
        }
        if (n == "d2F_dsigma2") {
            return d2F_dsigma2(s, t);
        }
        return d2M_dsigma2(s, t);
    }
    const double a = params.at("alpha");
    const double b = params.at("beta");
    if (n == "mittag_leffler") {
        return mittag_leffler(a, b, t);
    }
    if (n == "dE_dalpha") {
        return dE_dalpha(a, b, t);
    }
    if (n == "dE_dbeta") {
        return dE_dbeta(a, b, t);
    }
    const WrightParams p(a, b);
    if (n == "wright") {
        return wright_eval(p, t);
    }
    if (n == "dW_dalpha") {
        return dW_dalpha(p, t);
    }
    if (n == "dW_dbeta") {
        return dW_dbeta(p, t);
    }
    if (n == "d2W_dalpha2") {
        return d2W_dalpha2(p, t);
    }
    return d2W_dbeta2(p, t);
}

}  // namespace wright
