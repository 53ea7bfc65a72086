#include "pdm/cli/output.hpp"

#include <cstdio>
#include <fstream>

namespace pdm::cli {

std::string format_g12(real v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12Lg", v == 0 ? real{0} : v);  // no "-0"
    return buf;
}

std::string potential_csv(const LadderSystem& system) {
    std::string out = "x,m,F,V_R,V_I\n";
    for (std::size_t i = 0; i < system.grid().size(); ++i) {
        out += format_g12(system.grid().x(i)) + ',' + format_g12(system.mass()[i]) + ',' + format_g12(system.F()[i]) +
               ',' + format_g12(system.v_real()[i]) + ',' + format_g12(system.v_imag()[i]) + '\n';
    }
    return out;
}

std::string states_csv(const StateSet& states) {
    std::string out = "x";
    for (std::size_t n = 0; n < states.size(); ++n) {
        out += ",re_psi_" + std::to_string(n) + ",im_psi_" + std::to_string(n);
    }
    out += '\n';
    const Grid& g = states.psi(0).grid();
    for (std::size_t i = 0; i < g.size(); ++i) {
        out += format_g12(g.x(i));
        for (std::size_t n = 0; n < states.size(); ++n) {
            out += ',' + format_g12(states.psi(n)[i].real()) + ',' + format_g12(states.psi(n)[i].imag());
        }
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "lambda,node_count_re,node_count_im,E0\n";
    for (const SweepRow& r : rows) {
        out += format_g12(r.lambda) + ',' + std::to_string(r.re.count) + ',' + std::to_string(r.im.count) + ',' +
               format_g12(r.e0) + '\n';
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace pdm::cli
