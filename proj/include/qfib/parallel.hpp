#pragma once

namespace qfib {

/// Worker-count knob shared by the parallel kernels (multiplication,
/// elimination, grid fan-out). Defaults to 1: every code path is serial
/// unless a caller raises it.
int max_workers();
void set_max_workers(int n);

/// Reads QFIB_WORKERS (>= 1); returns 1 when unset or malformed.
int workers_from_env();

} // namespace qfib
