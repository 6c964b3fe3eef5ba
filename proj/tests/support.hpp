#ifndef HNET_TESTS_SUPPORT_HPP
#define HNET_TESTS_SUPPORT_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "hnet/notation.hpp"

namespace hnet::test {

inline std::string data_path(const std::string& name) { return std::string(HNET_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& name) {
    std::ifstream f(data_path(name), std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Builds `.hn` text; throws if the document does not validate.
inline Hypernetwork hn(const std::string& text) {
    BuildResult r = load(text);
    if (!r.report.ok())
        throw std::runtime_error("test model does not validate: " + r.report.violations.front().detail);
    return std::move(r.network);
}

inline Hypernetwork data(const std::string& name) { return hn(slurp(name)); }

inline const Hypersimplex& hs_of(const Hypernetwork& h, const char* id) {
    return std::get<Hypersimplex>(*h.find(ElementId(id)));
}

} // namespace hnet::test

#endif // HNET_TESTS_SUPPORT_HPP
