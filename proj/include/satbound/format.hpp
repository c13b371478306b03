// format.hpp
#pragma once

#include <iomanip>
#include <locale>
#include <sstream>
#include <string>

namespace satbound {

/// Fixed-point rendering with `decimals` digits, independent of the global locale.
inline std::string fixed(double value, int decimals) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::fixed << std::setprecision(decimals) << value;
    return os.str();
}

}  // namespace satbound
