#pragma once

namespace szp
{
    /// Selects between the OpenMP kernel and the serial reference path. Both
    /// produce identical results; the serial path is kept for testing and
    /// benchmarking.
    enum class ExecPolicy
    {
        serial,
        parallel
    };
}
