#pragma once

// Runs the oracle-equivalence property suites (region algebra, kd-tree range
// query, persistent index query, visibility-violation filter) against
// independent brute-force references. Returns 0 when every suite passes.
int run_selftest();
