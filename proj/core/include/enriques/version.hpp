#ifndef ENRIQUES_VERSION_HPP
#define ENRIQUES_VERSION_HPP

#define ENRIQUES_VERSION "0.1.0"

#endif
