use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::Serialize;

use super::functor::Shape;
use crate::omega_complex::OmegaCategory;

/// Graded finite sets `F_{-1}, F_0, ..., F_top` with face maps, degeneracies
/// and the augmentation `F_0 -> F_{-1}`.
#[derive(Debug, Clone, Default)]
pub struct AugSimplicialSet {
    pub base: usize,
    pub counts: Vec<usize>,
    /// `faces[n][x][i] = d_i x` for `n >= 1`; `faces[0]` is empty.
    pub faces: Vec<Vec<Vec<usize>>>,
    pub augmentation: Vec<usize>,
    /// `degeneracies[n][x][i] = e_i x` for the levels where `F_{n+1}` is known.
    pub degeneracies: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct IdentityReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }
}

impl AugSimplicialSet {
    /// Highest level with simplices computed; `None` when only `F_{-1}` exists.
    pub fn top(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    pub fn face(&self, n: usize, x: usize, i: usize) -> usize {
        self.faces[n][x][i]
    }

    pub fn degeneracy(&self, n: usize, x: usize, i: usize) -> Option<usize> {
        self.degeneracies.get(n).and_then(|l| l.get(x)).map(|v| v[i])
    }

    /// Simplicial and augmentation identities over every computed level.
    pub fn check_identities(&self) -> IdentityReport {
        let mut r = IdentityReport::default();
        let top = match self.top() {
            Some(t) => t,
            None => return r,
        };
        if top >= 1 {
            for x in 0..self.counts[1] {
                let (a, b) = (self.augmentation[self.face(1, x, 0)], self.augmentation[self.face(1, x, 1)]);
                r.expect(a == b, || format!("augmentation: d_-1 d_0 != d_-1 d_1 on F_1[{x}]"));
            }
        }
        for n in 2..=top {
            for x in 0..self.counts[n] {
                for j in 1..=n {
                    for i in 0..j {
                        let l = self.face(n - 1, self.face(n, x, j), i);
                        let rr = self.face(n - 1, self.face(n, x, i), j - 1);
                        r.expect(l == rr, || format!("d_{i} d_{j} != d_{} d_{i} on F_{n}[{x}]", j - 1));
                    }
                }
            }
        }
        for n in 0..top.min(self.degeneracies.len()) {
            if self.degeneracies[n].is_empty() && self.counts[n] > 0 {
                continue;
            }
            for x in 0..self.counts[n] {
                for j in 0..=n {
                    let y = self.degeneracies[n][x][j];
                    for i in 0..=n + 1 {
                        let got = self.face(n + 1, y, i);
                        let want = if i == j || i == j + 1 {
                            Some(x)
                        } else if i < j {
                            self.degeneracy(n - 1, self.face(n, x, i), j - 1)
                        } else {
                            self.degeneracy(n - 1, self.face(n, x, i - 1), j)
                        };
                        if let Some(w) = want {
                            r.expect(got == w, || format!("d_{i} e_{j} on F_{n}[{x}]"));
                        }
                    }
                    if n + 1 < self.degeneracies.len() && !self.degeneracies[n + 1].is_empty() {
                        for i in 0..=j {
                            let l = self.degeneracies[n + 1][y][i];
                            let rr = self.degeneracies[n + 1][self.degeneracies[n][x][i]][j + 1];
                            r.expect(l == rr, || format!("e_{i} e_{j} != e_{} e_{i} on F_{n}[{x}]", j + 1));
                        }
                    }
                }
            }
        }
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NerveKind {
    Branching,
    Merging,
    Globular,
    SemiGlobularBranching,
    SemiGlobularMerging,
}

impl NerveKind {
    pub fn name(self) -> &'static str {
        match self {
            NerveKind::Branching => "br",
            NerveKind::Merging => "mg",
            NerveKind::Globular => "gl",
            NerveKind::SemiGlobularBranching => "gl-",
            NerveKind::SemiGlobularMerging => "gl+",
        }
    }

    /// Cubical nerves use `I^{n+1}` as the shape of `F_n`, the others `Delta^n`.
    pub fn is_cubical(self) -> bool {
        matches!(self, NerveKind::Branching | NerveKind::Merging)
    }
}

/// One summand of a nerve: the category functors land in and the path-level
/// category `ev` lands in.
#[derive(Clone)]
pub struct Component {
    pub label: String,
    /// Base object in the underlying category, for graded nerves.
    pub vertex: Option<usize>,
    pub target: Arc<dyn OmegaCategory>,
    pub ev_cat: Arc<dyn OmegaCategory>,
    /// `ev_index[z]`: the `ev_cat` index of a `target` element, when defined.
    pub ev_index: Vec<Option<usize>>,
    /// `h^-` from the underlying category, for graded nerves.
    pub h_minus: HashMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    pub component: usize,
    pub assignment: Vec<usize>,
}

/// An augmented simplicial set with evaluation into path-level categories.
#[derive(Clone)]
pub struct Cut {
    pub kind: NerveKind,
    pub set: AugSimplicialSet,
    pub base_labels: Vec<String>,
    pub shapes: Vec<Arc<Shape>>,
    pub components: Vec<Component>,
    pub simplices: Vec<Vec<Simplex>>,
    /// `ev[n][x]`: index in the component's `ev_cat`.
    pub ev: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SimplexDump {
    pub component: String,
    pub atoms: BTreeMap<String, String>,
    pub ev: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct NerveDump {
    pub nerve: &'static str,
    pub base: Vec<String>,
    pub levels: Vec<Vec<SimplexDump>>,
    pub augmentation: Vec<usize>,
    pub faces: Vec<Vec<Vec<usize>>>,
    pub degeneracies: Vec<Vec<Vec<usize>>>,
}

impl Cut {
    pub fn top(&self) -> Option<usize> {
        self.set.top()
    }

    pub fn count(&self, n: usize) -> usize {
        self.set.counts.get(n).copied().unwrap_or(0)
    }

    pub fn ev_cat(&self, n: usize, x: usize) -> &Arc<dyn OmegaCategory> {
        &self.components[self.simplices[n][x].component].ev_cat
    }

    /// Path-level dimension of `ev x` for `x` in `F_n`.
    pub fn ev_dim(&self, n: usize, x: usize) -> usize {
        self.ev_cat(n, x).dim(self.ev[n][x])
    }

    /// `x` in `F_n` with `n >= 1` is thin when `ev x` has dimension below `n`.
    pub fn is_thin(&self, n: usize, x: usize) -> bool {
        n >= 1 && self.ev_dim(n, x) < n
    }

    /// `ev e_i = ev` wherever degeneracies are known.
    pub fn check_ev_degeneracies(&self) -> IdentityReport {
        let mut r = IdentityReport::default();
        for (n, level) in self.set.degeneracies.iter().enumerate() {
            for (x, ds) in level.iter().enumerate() {
                for (i, &y) in ds.iter().enumerate() {
                    let same = self.simplices[n][x].component == self.simplices[n + 1][y].component
                        && self.ev[n][x] == self.ev[n + 1][y];
                    r.expect(same, || format!("ev e_{i} != ev on F_{n}[{x}]"));
                }
            }
        }
        r
    }

    pub fn index_of(&self, n: usize, s: &Simplex) -> Option<usize> {
        self.simplices.get(n)?.binary_search(s).ok()
    }

    pub fn dump(&self) -> NerveDump {
        let levels = self
            .simplices
            .iter()
            .enumerate()
            .map(|(n, level)| {
                let poset = self.shapes[n].poset();
                level
                    .iter()
                    .enumerate()
                    .map(|(x, s)| {
                        let comp = &self.components[s.component];
                        SimplexDump {
                            component: comp.label.clone(),
                            atoms: s
                                .assignment
                                .iter()
                                .enumerate()
                                .map(|(a, &z)| (poset.label(a).to_string(), comp.target.label(z)))
                                .collect(),
                            ev: comp.ev_cat.label(self.ev[n][x]),
                        }
                    })
                    .collect()
            })
            .collect();
        NerveDump {
            nerve: self.kind.name(),
            base: self.base_labels.clone(),
            levels,
            augmentation: self.set.augmentation.clone(),
            faces: self.set.faces.clone(),
            degeneracies: self.set.degeneracies.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Nerve of the arrow category through level 1: vertices a, b; edges 1_a, 1_b, f.
    fn arrow() -> AugSimplicialSet {
        AugSimplicialSet {
            base: 1,
            counts: vec![2, 3],
            faces: vec![vec![vec![]; 2], vec![vec![0, 0], vec![1, 1], vec![1, 0]]],
            augmentation: vec![0, 0],
            degeneracies: vec![vec![vec![0], vec![1]]],
        }
    }

    #[test]
    fn arrow_identities_hold() {
        let r = arrow().check_identities();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.checked > 0);
    }

    #[test]
    fn broken_degeneracy_is_reported() {
        let mut s = arrow();
        s.degeneracies[0][0][0] = 2;
        assert!(!s.check_identities().passed());
    }
}
