#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdm/states.hpp"
#include "pdm/validation.hpp"

namespace pdm::cli {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 12 significant digits, the precision of every CSV field.
std::string format_g12(real v);

/// Header `x,m,F,V_R,V_I`, one LF-terminated row per node.
std::string potential_csv(const LadderSystem& system);

/// Header `x,re_psi_0,im_psi_0,...`.
std::string states_csv(const StateSet& states);

struct SweepRow {
    real lambda;
    NodeCount re;
    NodeCount im;
    real e0;
    GridFunction psi0;
};

/// Header `lambda,node_count_re,node_count_im,E0`.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Creates parent directories as needed. Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace pdm::cli
