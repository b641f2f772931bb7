//! Benchmarks for the algebra kernel.
