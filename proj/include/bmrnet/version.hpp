#ifndef BMRNET_VERSION_HPP
#define BMRNET_VERSION_HPP

namespace bmrnet {

inline constexpr const char* kVersion = "bmrnet 0.1.0";

}  // namespace bmrnet

#endif  // BMRNET_VERSION_HPP
