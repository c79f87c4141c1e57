use std::collections::HashMap;

use super::category::OmegaCategory;
use crate::error::{Error, Result};

/// An omega-category given by explicit tables. Compositions with an identity
/// (`n >= dim`) are implicit; all others must be listed.
#[derive(Debug, Clone)]
pub struct TableCategory {
    labels: Vec<String>,
    dims: Vec<usize>,
    sources: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
    table: HashMap<(usize, usize, usize), usize>,
}

impl TableCategory {
    /// `sources[x][p]` / `targets[x][p]` for `p < dims[x]`; `compositions`
    /// lists `(x, y, p, x *_p y)` for `p < min(dim x, dim y)`.
    pub fn new(
        labels: Vec<String>,
        dims: Vec<usize>,
        sources: Vec<Vec<usize>>,
        targets: Vec<Vec<usize>>,
        compositions: Vec<(usize, usize, usize, usize)>,
    ) -> Result<TableCategory> {
        let n = labels.len();
        if dims.len() != n || sources.len() != n || targets.len() != n {
            return Err(Error::input("table sizes disagree"));
        }
        for x in 0..n {
            if sources[x].len() != dims[x] || targets[x].len() != dims[x] {
                return Err(Error::input(format!("boundary table of {} has wrong length", labels[x])));
            }
            for (p, (&s, &t)) in sources[x].iter().zip(&targets[x]).enumerate() {
                if s >= n || t >= n || dims[s] > p || dims[t] > p {
                    return Err(Error::input(format!("bad {p}-boundary of {}", labels[x])));
                }
            }
        }
        let mut table = HashMap::new();
        for (x, y, p, z) in compositions {
            if x >= n || y >= n || z >= n {
                return Err(Error::input("composition refers to unknown morphism"));
            }
            table.insert((x, y, p), z);
        }
        Ok(TableCategory { labels, dims, sources, targets, table })
    }

    /// Materializes every defined composition of a finite category.
    pub fn from_category(c: &dyn OmegaCategory) -> TableCategory {
        let n = c.size();
        let dims: Vec<usize> = (0..n).map(|x| c.dim(x)).collect();
        let sources = (0..n).map(|x| (0..dims[x]).map(|p| c.source(x, p)).collect()).collect();
        let targets = (0..n).map(|x| (0..dims[x]).map(|p| c.target(x, p)).collect()).collect();
        let mut table = HashMap::new();
        let mut by_source: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for y in 0..n {
            for p in 0..dims[y] {
                by_source.entry((p, c.source(y, p))).or_default().push(y);
            }
        }
        for x in 0..n {
            for p in 0..dims[x] {
                if let Some(ys) = by_source.get(&(p, c.target(x, p))) {
                    for &y in ys {
                        if let Some(z) = c.compose(x, y, p) {
                            table.insert((x, y, p), z);
                        }
                    }
                }
            }
        }
        TableCategory {
            labels: (0..n).map(|x| c.label(x)).collect(),
            dims,
            sources,
            targets,
            table,
        }
    }
}

impl OmegaCategory for TableCategory {
    fn size(&self) -> usize {
        self.labels.len()
    }

    fn dim(&self, x: usize) -> usize {
        self.dims[x]
    }

    fn source(&self, x: usize, n: usize) -> usize {
        self.sources[x].get(n).copied().unwrap_or(x)
    }

    fn target(&self, x: usize, n: usize) -> usize {
        self.targets[x].get(n).copied().unwrap_or(x)
    }

    fn compose(&self, x: usize, y: usize, n: usize) -> Option<usize> {
        if self.target(x, n) != self.source(y, n) {
            return None;
        }
        if n >= self.dims[x] {
            return Some(y);
        }
        if n >= self.dims[y] {
            return Some(x);
        }
        self.table.get(&(x, y, n)).copied()
    }

    fn label(&self, x: usize) -> String {
        self.labels[x].clone()
    }
}
