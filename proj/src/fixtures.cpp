#include "topoqec/fixtures.hpp"

#include <stdexcept>

#include "topoqec/css.hpp"

namespace topoqec {

namespace {

PauliProduct pp(const std::string& s) { return PauliProduct::parse(s); }

CodeFixture from_strings(std::string name, std::vector<std::string> gens,
                         std::vector<std::string> lx, std::vector<std::string> lz) {
    CodeFixture f;
    f.name = std::move(name);
    for (const auto& s : gens) f.generators.push_back(pp(s));
    for (const auto& s : lx) f.logical_x.push_back(pp(s));
    for (const auto& s : lz) f.logical_z.push_back(pp(s));
    f.n = f.generators.front().num_qubits();
    return f;
}

CodeFixture reed_muller_fixture() {
    const CssCode code = build_css(reed_muller15_hx(), reed_muller15_hz(), 15);
    CodeFixture f;
    f.name = "reed_muller15";
    f.n = 15;
    for (auto& g : code.x_generators()) f.generators.push_back(g);
    for (auto& g : code.z_generators()) f.generators.push_back(g);
    f.logical_x.push_back(pp("+XXXXXXXXXXXXXXX"));
    f.logical_z.push_back(pp("+ZZZZZZZZZZZZZZZ"));
    return f;
}

} // namespace

CodeFixture code_fixture(const std::string& name) {
    if (name == "bitflip3")
        return from_strings("bitflip3", {"+ZZI", "+IZZ"}, {"+XXX"}, {"+ZII"});
    if (name == "phaseflip3")
        return from_strings("phaseflip3", {"+XXI", "+IXX"}, {"+ZZZ"}, {"+XXX"});
    if (name == "shor9")
        return from_strings("shor9",
                            {"+XXXXXXIII", "+IIIXXXXXX", "+ZZIIIIIII", "+IZZIIIIII",
                             "+IIIZZIIII", "+IIIIZZIII", "+IIIIIIZZI", "+IIIIIIIZZ"},
                            {"+XXXXXXXXX"}, {"+ZZZZZZZZZ"});
    if (name == "five_qubit")
        return from_strings("five_qubit", {"+XZZXI", "+IXZZX", "+XIXZZ", "+ZXIXZ"},
                            {"+XXXXX"}, {"+ZZZZZ"});
    if (name == "steane7")
        return from_strings("steane7",
                            {"+IIIXXXX", "+IXXIIXX", "+XIXIXIX",
                             "+IIIZZZZ", "+IZZIIZZ", "+ZIZIZIZ"},
                            {"+XXXXXXX"}, {"+ZZZZZZZ"});
    if (name == "reed_muller15") return reed_muller_fixture();
    throw std::invalid_argument("unknown code fixture: " + name);
}

std::vector<std::string> code_fixture_names() {
    return {"bitflip3", "phaseflip3", "shor9", "five_qubit", "steane7", "reed_muller15"};
}

} // namespace topoqec
