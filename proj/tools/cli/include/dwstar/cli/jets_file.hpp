#ifndef DWSTAR_CLI_JETS_FILE_HPP
#define DWSTAR_CLI_JETS_FILE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <dwstar/jets.hpp>

namespace dwstar::cli
{

struct JetsFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"point": [x0_num, x0_den, p0_num, p0_den], "m": M, "n": N,
//  "values": [[point, i, j, [re_num, re_den], [im_num, im_den]], ...]}
// Integers may also be given as decimal strings.
JetData jets_from_json(std::string_view text);
std::string jets_to_json(const JetData &data);

} // namespace dwstar::cli

#endif
