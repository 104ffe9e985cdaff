#pragma once

#include <string>

#include "config.hpp"

namespace fwcli {

// Exit codes: 0 success, 1 failure, 2 invalid config, 3 strong stability
// violated (spectrum refuses to scan at an exceptional coupling).
int cmd_spectrum(const Config& cfg, const std::string& out_dir);
int cmd_simulate(const Config& cfg, const std::string& out_dir);
int cmd_verify(const Config& cfg, const std::string& out_dir);
int cmd_sweep(const Config& cfg, const std::string& out_dir);

}  // namespace fwcli
