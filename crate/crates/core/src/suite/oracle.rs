//! Deliberately naive reference computations used to cross-check the
//! optimized searches.

use num_rational::Rational64;

use crate::graph::Graph;

/// Cycle lengths by testing every vertex subset for a Hamiltonian cycle
/// with plain backtracking. Intended for `n <= 12`.
pub fn brute_force_spectrum(g: &Graph) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 16, "brute-force spectrum is limited to 16 vertices");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut present = vec![false; n + 1];
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size < 3 || present[size] {
            continue;
        }
        let start = mask.trailing_zeros() as usize;
        if hamiltonian_from(&adj, mask, start, start, 1 << start) {
            present[size] = true;
        }
    }
    (3..=n).filter(|&l| present[l]).collect()
}

fn hamiltonian_from(adj: &[u32], mask: u32, start: usize, at: usize, used: u32) -> bool {
    if used == mask {
        return adj[at] >> start & 1 == 1;
    }
    let mut next = adj[at] & mask & !used;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        if hamiltonian_from(adj, mask, start, w, used | 1 << w) {
            return true;
        }
    }
    false
}

/// Every independent set of `g` (including those containing `exempt`
/// unless it is given) has `|∂I| > k|I|`. Plain subset enumeration.
pub fn independent_sets_expand(g: &Graph, k: Rational64, exempt: Option<usize>) -> bool {
    let n = g.n();
    assert!(n <= 20, "brute-force expansion is limited to 20 vertices");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    for mask in 1u32..(1u32 << n) {
        if exempt.is_some_and(|v| mask >> v & 1 == 1) {
            continue;
        }
        let mut nb = 0u32;
        let mut independent = true;
        for v in (0..n).filter(|&v| mask >> v & 1 == 1) {
            if adj[v] & mask != 0 {
                independent = false;
                break;
            }
            nb |= adj[v];
        }
        if !independent {
            continue;
        }
        let boundary = (nb & !mask).count_ones() as i64;
        if Rational64::from_integer(boundary) <= k * mask.count_ones() as i64 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    #[test]
    fn reference_spectra() {
        assert_eq!(brute_force_spectrum(&named::petersen()), vec![5, 6, 8, 9]);
        assert_eq!(brute_force_spectrum(&named::complete(5)), vec![3, 4, 5]);
        assert!(brute_force_spectrum(&named::path(6)).is_empty());
    }

    #[test]
    fn reference_expansion() {
        // K_4: every independent set is a single vertex with boundary 3.
        assert!(independent_sets_expand(&named::complete(4), Rational64::new(5, 2), None));
        assert!(!independent_sets_expand(&named::complete(4), Rational64::from_integer(3), None));
        // The star's centre has boundary 3 but the leaves together have boundary 1.
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!independent_sets_expand(&star, Rational64::from_integer(1), None));
    }
}
