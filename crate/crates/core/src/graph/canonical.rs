//! Canonical codes for small graphs.
//!
//! The code of a labeling is its adjacency bit-string over the pairs
//! `(0,1), (0,2), (1,2), (0,3), ...` (first pair most significant). The
//! canonical code is the minimum over all relabelings that list vertices in
//! nondecreasing degree order. That family of relabelings is carried onto
//! itself by any isomorphism, so two graphs share a code iff they are
//! isomorphic. Restricting to degree-ordered labelings is what keeps the
//! search small compared to all `n!` permutations.

use super::{Graph, GraphError};

/// Largest order whose `n(n-1)/2` code bits fit in a `u64`.
pub const MAX_CANONICAL_ORDER: usize = 11;

pub(crate) type Masks = [u16; MAX_CANONICAL_ORDER];

pub(crate) fn masks_of(g: &Graph) -> Masks {
    let mut masks = [0u16; MAX_CANONICAL_ORDER];
    for &(u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    masks
}

/// Canonical code of `g`; `g.n()` must not exceed [`MAX_CANONICAL_ORDER`].
pub fn canonical_code(g: &Graph) -> Result<u64, GraphError> {
    if g.n() > MAX_CANONICAL_ORDER {
        return Err(GraphError::Argument(format!(
            "canonical code supports n <= {MAX_CANONICAL_ORDER}, got {}",
            g.n()
        )));
    }
    Ok(canonical_from_masks(g.n(), &masks_of(g)))
}

pub(crate) fn canonical_from_masks(n: usize, masks: &Masks) -> u64 {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| masks[v].count_ones());
    let slot_degree: Vec<u32> = order.iter().map(|&v| masks[v].count_ones()).collect();
    let total_bits = (n * n.saturating_sub(1) / 2) as u32;

    let mut search = Search {
        n,
        masks,
        slot_degree: &slot_degree,
        total_bits,
        placed: Vec::with_capacity(n),
        used: 0,
        best: u64::MAX,
    };
    search.descend(0, 0);
    if n <= 1 {
        0
    } else {
        search.best
    }
}

struct Search<'a> {
    n: usize,
    masks: &'a Masks,
    slot_degree: &'a [u32],
    total_bits: u32,
    placed: Vec<usize>,
    used: u16,
    best: u64,
}

impl Search<'_> {
    /// `prefix` holds the code bits of columns `1..slot`.
    fn descend(&mut self, slot: usize, prefix: u64) {
        if slot == self.n {
            self.best = self.best.min(prefix);
            return;
        }
        let bits_so_far = (slot * slot.saturating_sub(1) / 2) as u32;
        let bits_after = bits_so_far + slot as u32;
        let remaining = self.total_bits - bits_after;
        for v in 0..self.n {
            if self.used & (1 << v) != 0 || self.masks[v].count_ones() != self.slot_degree[slot] {
                continue;
            }
            let mut column = 0u64;
            for &w in &self.placed {
                column = (column << 1) | u64::from(self.masks[v] & (1 << w) != 0);
            }
            let next = (prefix << slot) | column;
            // prune when this prefix already exceeds the best code's prefix
            if self.best != u64::MAX && next > self.best >> remaining {
                continue;
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.descend(slot + 1, next);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}

/// Graph whose labeling realizes `code` on `n` vertices.
pub fn decode_code(n: usize, code: u64) -> Result<Graph, GraphError> {
    if n == 0 || n > MAX_CANONICAL_ORDER {
        return Err(GraphError::Argument(format!(
            "code order must be in 1..={MAX_CANONICAL_ORDER}, got {n}"
        )));
    }
    let total = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}
