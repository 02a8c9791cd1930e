//! Inputs shared by the benchmarks in `benches/`.

use wfs_core::finrel::homs;
use wfs_core::{corpus, Flavor, RelMap, RelObject};

/// Every map between graphs with at most `n` vertices, up to isomorphism
/// of the ends.
pub fn graph_maps(n: usize) -> Vec<RelMap> {
    let objs: Vec<RelObject> = corpus::classes_up_to(Flavor::Graph, n).expect("graph classes");
    let mut out = Vec::new();
    for x in &objs {
        for y in &objs {
            out.extend(homs(x, y, u64::MAX).expect("hom enumeration"));
        }
    }
    out
}
