#pragma once

#define KNNAD_VERSION_MAJOR 0
#define KNNAD_VERSION_MINOR 1
#define KNNAD_VERSION_PATCH 0
#define KNNAD_VERSION_STRING "0.1.0"
