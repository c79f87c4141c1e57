use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::face::Sign;
use super::faceset::FaceSet;
use super::poset::FacePoset;
use crate::error::{Error, Result};

pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// A finite strict omega-category with indexed morphisms.
///
/// `source(x, n)` and `target(x, n)` return `x` itself when `n >= dim(x)`;
/// `compose(x, y, n)` is defined exactly when `target(x, n) == source(y, n)`.
pub trait OmegaCategory: Send + Sync {
    fn size(&self) -> usize;
    fn dim(&self, x: usize) -> usize;
    fn source(&self, x: usize, n: usize) -> usize;
    fn target(&self, x: usize, n: usize) -> usize;
    fn compose(&self, x: usize, y: usize, n: usize) -> Option<usize>;
    fn label(&self, x: usize) -> String;

    fn boundary(&self, x: usize, n: usize, s: Sign) -> usize {
        match s {
            Sign::Minus => self.source(x, n),
            Sign::Plus => self.target(x, n),
        }
    }

    fn max_dim(&self) -> usize {
        (0..self.size()).map(|x| self.dim(x)).max().unwrap_or(0)
    }

    fn of_dim(&self, d: usize) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.dim(x) == d).collect()
    }

    /// `s_1` and `t_1` of every morphism of dim >= 1 are 1-dimensional.
    fn is_non_contracting(&self) -> bool {
        (0..self.size()).all(|x| {
            self.dim(x) == 0
                || (self.dim(self.source(x, 1)) == 1 && self.dim(self.target(x, 1)) == 1)
        })
    }
}

/// How an enumerated element was first reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Atom(usize),
    Composite { left: usize, right: usize, p: usize },
}

/// All elements of the omega-complex category generated by a poset's atoms.
#[derive(Debug, Clone)]
pub struct Category {
    poset: Arc<FacePoset>,
    elements: Vec<FaceSet>,
    dims: Vec<usize>,
    index: HashMap<FaceSet, usize>,
    provenance: Vec<Provenance>,
    sources: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
    atom_index: Vec<usize>,
}

struct Worklist<'a> {
    poset: &'a FacePoset,
    cap: usize,
    elems: Vec<FaceSet>,
    dims: Vec<usize>,
    prov: Vec<Provenance>,
    bnds: Vec<Vec<(FaceSet, FaceSet)>>,
    index: HashMap<FaceSet, usize>,
    // by_source[p][s_p x], by_target[p][t_p x] over elements with dim > p
    by_source: Vec<HashMap<FaceSet, Vec<usize>>>,
    by_target: Vec<HashMap<FaceSet, Vec<usize>>>,
    queue: VecDeque<usize>,
}

impl<'a> Worklist<'a> {
    fn new(poset: &'a FacePoset, cap: usize) -> Self {
        let m = poset.max_dim();
        Worklist {
            poset,
            cap,
            elems: Vec::new(),
            dims: Vec::new(),
            prov: Vec::new(),
            bnds: Vec::new(),
            index: HashMap::new(),
            by_source: vec![HashMap::new(); m],
            by_target: vec![HashMap::new(); m],
            queue: VecDeque::new(),
        }
    }

    fn add(&mut self, x: FaceSet, pv: Provenance) -> Result<()> {
        if self.index.contains_key(&x) {
            return Ok(());
        }
        if self.elems.len() >= self.cap {
            return Err(Error::resource("omega-complex elements", self.cap));
        }
        let i = self.elems.len();
        let d = self.poset.set_dim(&x);
        let b: Vec<(FaceSet, FaceSet)> =
            (0..d).map(|p| (self.poset.source(&x, p), self.poset.target(&x, p))).collect();
        for (p, (s, t)) in b.iter().enumerate() {
            self.by_source[p].entry(s.clone()).or_default().push(i);
            self.by_target[p].entry(t.clone()).or_default().push(i);
        }
        self.index.insert(x.clone(), i);
        self.elems.push(x);
        self.dims.push(d);
        self.prov.push(pv);
        self.bnds.push(b);
        self.queue.push_back(i);
        Ok(())
    }
}

impl Category {
    /// Worklist fixpoint of the atoms under all compositions; elements sorted
    /// by (dim, face set).
    pub fn enumerate(poset: Arc<FacePoset>, cap: usize) -> Result<Category> {
        let n = poset.len();
        let mut w = Worklist::new(&poset, cap);
        for f in 0..n {
            w.add(poset.atom(f), Provenance::Atom(f))?;
        }
        while let Some(i) = w.queue.pop_front() {
            for p in 0..w.dims[i] {
                let (s, t) = w.bnds[i][p].clone();
                let mut pairs: Vec<(usize, usize)> = Vec::new();
                if let Some(rs) = w.by_source[p].get(&t) {
                    pairs.extend(rs.iter().map(|&j| (i, j)));
                }
                if let Some(ls) = w.by_target[p].get(&s) {
                    pairs.extend(ls.iter().map(|&j| (j, i)));
                }
                for (a, b) in pairs {
                    let (x, y) = (&w.elems[a], &w.elems[b]);
                    if x.intersection(y) != w.bnds[a][p].1 {
                        return Err(Error::internal(format!(
                            "intersection rule fails for {} *{p} {}",
                            poset.render(x),
                            poset.render(y)
                        )));
                    }
                    let u = x.union(y);
                    w.add(u, Provenance::Composite { left: a, right: b, p })?;
                }
            }
        }
        let Worklist { elems, dims, prov, bnds, .. } = w;

        // Deterministic order: (dim, face set).
        let mut order: Vec<usize> = (0..elems.len()).collect();
        order.sort_by(|&a, &b| dims[a].cmp(&dims[b]).then_with(|| elems[a].cmp(&elems[b])));
        let mut rank = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let elements: Vec<FaceSet> = order.iter().map(|&o| elems[o].clone()).collect();
        let dims: Vec<usize> = order.iter().map(|&o| dims[o]).collect();
        let provenance: Vec<Provenance> = order
            .iter()
            .map(|&o| match prov[o] {
                Provenance::Atom(f) => Provenance::Atom(f),
                Provenance::Composite { left, right, p } => {
                    Provenance::Composite { left: rank[left], right: rank[right], p }
                }
            })
            .collect();
        let index: HashMap<FaceSet, usize> =
            elements.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        let mut sources = Vec::with_capacity(elements.len());
        let mut targets = Vec::with_capacity(elements.len());
        for &o in &order {
            let mut ss = Vec::new();
            let mut ts = Vec::new();
            for (s, t) in &bnds[o] {
                let lookup = |z: &FaceSet| {
                    index.get(z).copied().ok_or_else(|| {
                        Error::internal(format!("boundary {} is not an element", poset.render(z)))
                    })
                };
                ss.push(lookup(s)?);
                ts.push(lookup(t)?);
            }
            sources.push(ss);
            targets.push(ts);
        }
        let atom_index = (0..n).map(|f| index[poset.sub(f)]).collect();
        Ok(Category { poset, elements, dims, index, provenance, sources, targets, atom_index })
    }

    pub fn of_poset(poset: FacePoset) -> Result<Category> {
        Category::enumerate(Arc::new(poset), DEFAULT_ELEMENT_CAP)
    }

    pub fn poset(&self) -> &Arc<FacePoset> {
        &self.poset
    }

    pub fn element(&self, x: usize) -> &FaceSet {
        &self.elements[x]
    }

    pub fn elements(&self) -> &[FaceSet] {
        &self.elements
    }

    pub fn index_of(&self, x: &FaceSet) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Element index of the atom `R(f)`.
    pub fn atom(&self, face: usize) -> usize {
        self.atom_index[face]
    }

    pub fn atom_by_label(&self, label: &str) -> Result<usize> {
        Ok(self.atom(self.poset.id(label)?))
    }

    pub fn provenance(&self, x: usize) -> Provenance {
        self.provenance[x]
    }

    pub fn label_strings(&self, x: usize) -> Vec<String> {
        self.poset.label_strings(&self.elements[x])
    }

    /// Left-to-right leaf faces of the recorded decomposition.
    pub fn decomposition_leaves(&self, x: usize) -> Vec<usize> {
        match self.provenance[x] {
            Provenance::Atom(f) => vec![f],
            Provenance::Composite { left, right, .. } => {
                let mut v = self.decomposition_leaves(left);
                v.extend(self.decomposition_leaves(right));
                v
            }
        }
    }
}

impl OmegaCategory for Category {
    fn size(&self) -> usize {
        self.elements.len()
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
        self.index.get(&self.elements[x].union(&self.elements[y])).copied()
    }

    fn label(&self, x: usize) -> String {
        self.poset.render(&self.elements[x])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega_complex::{cube, simplex};

    #[test]
    fn interval_and_edge() {
        assert_eq!(Category::of_poset(cube(1)).unwrap().size(), 3);
        assert_eq!(Category::of_poset(simplex(1)).unwrap().size(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        let err = Category::enumerate(Arc::new(cube(2)), 5).unwrap_err();
        assert!(matches!(err, Error::Resource { .. }));
    }

    #[test]
    fn ordering_is_by_dim_then_set() {
        let c = Category::of_poset(cube(2)).unwrap();
        for w in 1..c.size() {
            assert!((c.dim(w - 1), c.element(w - 1)) <= (c.dim(w), c.element(w)));
        }
    }
}
