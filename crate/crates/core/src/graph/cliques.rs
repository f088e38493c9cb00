use serde::Serialize;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueFreeness {
    pub clique_free: bool,
    /// A clique of the forbidden order when one exists.
    pub witness: Option<Vec<usize>>,
}

/// Lexicographically first clique on `size` vertices.
pub fn find_clique(g: &Graph, size: usize) -> Option<Vec<usize>> {
    if size == 0 {
        return Some(Vec::new());
    }
    let mut clique = Vec::with_capacity(size);
    extend(g, &mut clique, g.vertex_set(), size).then_some(clique)
}

fn extend(g: &Graph, clique: &mut Vec<usize>, cand: VertexSet, size: usize) -> bool {
    if clique.len() == size {
        return true;
    }
    if clique.len() + cand.len() < size {
        return false;
    }
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if clique.len() + rest.len() < size {
            return false;
        }
        rest.remove(v);
        clique.push(v);
        if extend(g, clique, rest.intersection(g.neighbor_set(v)), size) {
            return true;
        }
        clique.pop();
    }
    false
}

/// Whether `g` has no clique on `order` vertices (`order = 3` is triangle-freeness).
pub fn is_clique_free(g: &Graph, order: usize) -> Result<CliqueFreeness> {
    if order < 2 {
        return Err(Error::domain("clique order must be at least 2"));
    }
    let witness = find_clique(g, order);
    Ok(CliqueFreeness {
        clique_free: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    #[test]
    fn examples() {
        assert!(is_clique_free(&named::cycle(5), 3).unwrap().clique_free);
        let k4 = is_clique_free(&named::complete(4), 4).unwrap();
        assert_eq!(k4.witness, Some(vec![0, 1, 2, 3]));
        assert!(is_clique_free(&named::petersen(), 3).unwrap().clique_free);
        assert!(!is_clique_free(&named::path(3), 2).unwrap().clique_free);
        assert!(is_clique_free(&named::cycle(4), 1).is_err());
    }

    #[test]
    fn matches_exhaustive_triple_check_on_petersen() {
        let g = named::petersen();
        let mut triangles = 0;
        for a in 0..10 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        triangles += 1;
                    }
                }
            }
        }
        assert_eq!(triangles, 0);
    }
}
