#ifndef MISANNEAL_VERSION_HPP
#define MISANNEAL_VERSION_HPP

namespace misanneal {

inline constexpr const char* kProjectName = "misanneal";
inline constexpr const char* kProjectVersion = "0.1.0";

}  // namespace misanneal

#endif
