#ifndef EULERINT_VERSION_HPP
#define EULERINT_VERSION_HPP

namespace eulerint {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace eulerint

#endif
