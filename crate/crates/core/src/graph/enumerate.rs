//! One representative per isomorphism class of connected graphs, n <= 7.
//!
//! Every connected graph on `k` vertices has a non-cut vertex (a leaf of any
//! spanning tree); deleting it leaves a connected graph on `k - 1` vertices.
//! So the classes on `k` vertices are exactly the canonical codes reached by
//! attaching a new vertex to a nonempty neighbourhood in each class on
//! `k - 1` vertices.

use std::collections::BTreeSet;

use super::canonical::{canonical_from_masks, Masks, MAX_CANONICAL_ORDER};
use super::{decode_code, Graph, GraphError};

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Class counts of connected graphs for n = 1..=7.
pub const CONNECTED_CLASS_COUNTS: [usize; MAX_ENUMERATION_ORDER] = [1, 1, 2, 6, 21, 112, 853];

fn masks_from_code(n: usize, code: u64) -> Masks {
    let mut masks = [0u16; MAX_CANONICAL_ORDER];
    let total = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                masks[i] |= 1 << j;
                masks[j] |= 1 << i;
            }
            k += 1;
        }
    }
    masks
}

fn connected_codes(n: usize) -> BTreeSet<u64> {
    let mut level = BTreeSet::from([0u64]);
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = masks_from_code(k - 1, code);
            for nbhd in 1u16..(1 << (k - 1)) {
                let mut masks = base;
                masks[k - 1] = nbhd;
                for (u, mask) in masks.iter_mut().enumerate().take(k - 1) {
                    if nbhd & (1 << u) != 0 {
                        *mask |= 1 << (k - 1);
                    }
                }
                next.insert(canonical_from_masks(k, &masks));
            }
        }
        level = next;
    }
    level
}

/// Connected graphs on `n` vertices, one per isomorphism class, in
/// increasing canonical-code order. Each is returned in its canonical
/// labeling.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(GraphError::Argument(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    Ok(connected_codes(n)
        .into_iter()
        .map(move |code| decode_code(n, code).expect("enumerated codes decode")))
}
