//! Maximal independent set over a DCC: selecting a vertex marks every member
//! of every clique containing it ineligible, which is exactly its
//! neighborhood.

use crate::cover::DccRepresentation;

/// Greedy over ascending covered vertices. The result contains no covered
/// edge and every covered vertex outside it has a neighbor inside.
pub fn maximal_independent_set(dcc: &DccRepresentation) -> Vec<u32> {
    let mut ineligible = vec![false; dcc.n()];
    let mut out = Vec::new();
    for v in dcc.cover.universe() {
        if ineligible[v as usize] {
            continue;
        }
        out.push(v);
        for &l in dcc.dual.labels(v) {
            for &u in dcc.cover.clique(l as usize) {
                ineligible[u as usize] = true;
            }
        }
    }
    out
}
