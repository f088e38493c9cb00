use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

/// A path given by its vertex sequence; its length is counted in edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PathCertificate {
    vertices: Vec<usize>,
}

impl PathCertificate {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let p = PathCertificate { vertices };
        p.validate(g)?;
        Ok(p)
    }

    /// Wraps a sequence already known to be a path. Debug builds still check.
    pub(crate) fn trusted(g: &Graph, vertices: Vec<usize>) -> Self {
        let p = PathCertificate { vertices };
        debug_assert!(p.validate(g).is_ok(), "invalid path {:?}", p.vertices);
        p
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::Validation("empty path".into()));
        }
        check_distinct(g, &self.vertices)?;
        for w in self.vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::Validation(format!(
                    "path step {}-{} is not an edge",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("paths are non-empty")
    }
}

/// A cycle given by its cyclic vertex order. Length equals the number of vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CycleCertificate {
    vertices: Vec<usize>,
}

impl CycleCertificate {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let c = CycleCertificate { vertices };
        c.validate(g)?;
        Ok(c)
    }

    pub(crate) fn trusted(g: &Graph, vertices: Vec<usize>) -> Self {
        let c = CycleCertificate { vertices };
        debug_assert!(c.validate(g).is_ok(), "invalid cycle {:?}", c.vertices);
        c
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let k = self.vertices.len();
        if k < 3 {
            return Err(Error::Validation(format!("cycle of length {k}")));
        }
        check_distinct(g, &self.vertices)?;
        for i in 0..k {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
            if !g.has_edge(a, b) {
                return Err(Error::Validation(format!("cycle step {a}-{b} is not an edge")));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    /// Whether `a` and `b` are neighbors in the cyclic order.
    pub fn consecutive(&self, a: usize, b: usize) -> bool {
        match (self.position(a), self.position(b)) {
            (Some(i), Some(j)) => {
                let k = self.len();
                (i + 1) % k == j || (j + 1) % k == i
            }
            _ => false,
        }
    }

    /// Maps vertex ids through `map` (e.g. subgraph ids to host ids).
    pub fn mapped(&self, map: &[usize]) -> CycleCertificate {
        CycleCertificate {
            vertices: self.vertices.iter().map(|&v| map[v]).collect(),
        }
    }
}

impl PathCertificate {
    pub fn mapped(&self, map: &[usize]) -> PathCertificate {
        PathCertificate {
            vertices: self.vertices.iter().map(|&v| map[v]).collect(),
        }
    }
}

fn check_distinct(g: &Graph, vs: &[usize]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for &v in vs {
        g.check_vertex(v)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Validation(format!("vertex {v} repeated")));
        }
    }
    Ok(())
}
