#include "lsft/examples.hpp"

#include <map>
#include <sstream>

namespace lsft {

namespace {

const std::map<std::string, std::string>& table() {
    static const std::map<std::string, std::string> t = {
        {"trefoil",
         "front v1\n"
         "# right-handed trefoil, tb 1, rot 0\n"
         "lcusp 1\nlcusp 3\ncross 2\ndivide\ncross 2\ncross 2\nrcusp 1\nrcusp 1\n"},
        {"trefoil-closed",
         "front v1\n"
         "lcusp 1\nlcusp 3\ncross 2\nmark 1\ncross 2\ncross 2\nrcusp 1\nrcusp 1\n"},
        {"trefoil-middle", "middle v1\nn 4\npairL 1 3\npairL 2 4\npairR 1 2\npairR 3 4\nmu 1 0\nmu 2 -1\nmu 3 -1\nmu 4 -2\n"},
        {"unknot", "front v1\nlcusp 1\ndivide\nrcusp 1\n"},
        {"unknot-closed", "front v1\nlcusp 1\nmark 1\nrcusp 1\n"},
    };
    return t;
}

}  // namespace

std::vector<std::string> example_names() {
    std::vector<std::string> out;
    for (auto& [k, v] : table()) out.push_back(k);
    return out;
}

std::string example_source(const std::string& name) {
    auto it = table().find(name);
    if (it == table().end()) throw DiagramError("UnknownExample", name);
    return it->second;
}

std::string middle_text(const MiddleData& m) {
    std::ostringstream os;
    os << "middle v1\nn " << m.n << "\n";
    for (int i = 1; i <= m.n; ++i)
        if (i < m.betaL[i]) os << "pairL " << i << " " << m.betaL[i] << "\n";
    for (int i = 1; i <= m.n; ++i)
        if (i < m.betaR[i]) os << "pairR " << i << " " << m.betaR[i] << "\n";
    for (int i = 1; i <= m.n; ++i) os << "mu " << i << " " << m.mu[i] << "\n";
    return os.str();
}

}  // namespace lsft
