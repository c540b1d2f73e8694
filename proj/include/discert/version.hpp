#ifndef DISCERT_VERSION_HPP
#define DISCERT_VERSION_HPP

namespace discert {

inline constexpr const char* kToolVersion = "0.1.0";

}

#endif
