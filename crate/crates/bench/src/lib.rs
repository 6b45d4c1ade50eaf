//! Criterion benchmarks for `delpezzo-core`: elimination and validation of
//! sample triplets, and bounded enumeration with and without pruning. Run
//! them with `cargo bench -p delpezzo-bench`.
