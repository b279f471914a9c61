#ifndef EXWAVE_VERSION_HPP
#define EXWAVE_VERSION_HPP

#define EXWAVE_VERSION_MAJOR 0
#define EXWAVE_VERSION_MINOR 1
#define EXWAVE_VERSION_PATCH 0
#define EXWAVE_VERSION_STRING "0.1.0"

#endif
