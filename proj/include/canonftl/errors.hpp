// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace canonftl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// nand layer
struct IndexOutOfRange : Error { using Error::Error; };
struct BadBlockError : Error { using Error::Error; };
struct WriteWithoutErase : Error { using Error::Error; };

// ubi layer
struct UnmappedLeb : Error { using Error::Error; };
struct DeviceFull : Error { using Error::Error; };
struct NotAtEpochBoundary : Error { using Error::Error; };
struct CorruptAnchor : Error { using Error::Error; };

// ftl layer
struct VirtualBlockOutOfRange : Error { using Error::Error; };

// leakage
struct DomainTooLarge : Error { using Error::Error; };

// workload
struct MalformedLine : Error { using Error::Error; };

// metrics
struct NoHostWrites : Error { using Error::Error; };

// config / cli
struct ConfigError : Error { using Error::Error; };

}  // namespace canonftl
