//! Atom-labelling functors out of cubes, simplexes and other free complexes.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::omega_complex::{
    cube, simplex, Category, FacePoset, OmegaCategory, Provenance, Sign, DEFAULT_ELEMENT_CAP,
};

pub const DEFAULT_FUNCTOR_CAP: usize = 200_000;

/// A free source complex prepared for functor search.
#[derive(Debug, Clone)]
pub struct Shape {
    pub cat: Category,
    bminus_elem: Vec<Option<usize>>,
    bplus_elem: Vec<Option<usize>>,
    order: Vec<usize>,
}

impl Shape {
    pub fn new(poset: FacePoset) -> Result<Shape> {
        let cat = Category::enumerate(Arc::new(poset), DEFAULT_ELEMENT_CAP)?;
        let p = cat.poset().clone();
        let n = p.len();
        let mut bminus_elem = vec![None; n];
        let mut bplus_elem = vec![None; n];
        for a in 0..n {
            if let Some(q) = p.dim(a).checked_sub(1) {
                let x = cat.atom(a);
                bminus_elem[a] = Some(cat.source(x, q));
                bplus_elem[a] = Some(cat.target(x, q));
            }
        }
        // Edges in breadth-first order so one endpoint is usually fixed,
        // then isolated vertices, then higher faces by (dim, id).
        let mut order = Vec::new();
        let edges: Vec<usize> = p.faces_of_dim(1).collect();
        let mut seen_v = vec![false; n];
        let mut used = vec![false; n];
        loop {
            let start = edges.iter().copied().find(|&e| !used[e]);
            let Some(start) = start else { break };
            let mut frontier = vec![start];
            while let Some(e) = frontier.pop() {
                if used[e] {
                    continue;
                }
                used[e] = true;
                order.push(e);
                for &v in p.bminus(e).iter().chain(p.bplus(e)) {
                    seen_v[v] = true;
                }
                for &f in &edges {
                    if !used[f] && p.bminus(f).iter().chain(p.bplus(f)).any(|&v| seen_v[v]) {
                        frontier.insert(0, f);
                    }
                }
            }
        }
        order.extend(p.faces_of_dim(0).filter(|&v| !seen_v[v]));
        for d in 2..=p.max_dim() {
            order.extend(p.faces_of_dim(d));
        }
        Ok(Shape { cat, bminus_elem, bplus_elem, order })
    }

    pub fn cube(n: usize) -> Result<Shape> {
        Shape::new(cube(n))
    }

    pub fn simplex(n: usize) -> Result<Shape> {
        Shape::new(simplex(n))
    }

    pub fn poset(&self) -> &Arc<FacePoset> {
        self.cat.poset()
    }

    pub fn len(&self) -> usize {
        self.poset().len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset().is_empty()
    }

    /// Element `d^s_{p-1} R(a)` of a face of dim `p >= 1`.
    pub fn boundary_element(&self, a: usize, s: Sign) -> Option<usize> {
        match s {
            Sign::Minus => self.bminus_elem[a],
            Sign::Plus => self.bplus_elem[a],
        }
    }
}

/// Extends an atom assignment along the recorded decomposition of `x`.
/// `None` when a composite is undefined in the target.
pub fn eval(shape: &Shape, target: &dyn OmegaCategory, assign: &[usize], x: usize) -> Option<usize> {
    match shape.cat.provenance(x) {
        Provenance::Atom(f) => Some(assign[f]),
        Provenance::Composite { left, right, p } => {
            let l = eval(shape, target, assign, left)?;
            let r = eval(shape, target, assign, right)?;
            target.compose(l, r, p)
        }
    }
}

fn eval_partial(
    shape: &Shape,
    target: &dyn OmegaCategory,
    assign: &[Option<usize>],
    x: usize,
) -> Option<usize> {
    match shape.cat.provenance(x) {
        Provenance::Atom(f) => assign[f],
        Provenance::Composite { left, right, p } => {
            let l = eval_partial(shape, target, assign, left)?;
            let r = eval_partial(shape, target, assign, right)?;
            target.compose(l, r, p)
        }
    }
}

/// Every atom respects its boundaries and every composable pair of the
/// source is sent to a composable pair with the evaluated composite.
pub fn is_functor(shape: &Shape, target: &dyn OmegaCategory, assign: &[usize]) -> bool {
    let p = shape.poset();
    let c = &shape.cat;
    let vals: Vec<Option<usize>> = (0..c.size()).map(|x| eval(shape, target, assign, x)).collect();
    if vals.iter().any(|v| v.is_none()) {
        return false;
    }
    let v = |x: usize| vals[x].unwrap();
    for a in 0..p.len() {
        if target.dim(assign[a]) > p.dim(a) {
            return false;
        }
    }
    for x in 0..c.size() {
        for q in 0..c.dim(x) {
            if target.source(v(x), q) != v(c.source(x, q)) || target.target(v(x), q) != v(c.target(x, q)) {
                return false;
            }
        }
    }
    for x in 0..c.size() {
        for y in 0..c.size() {
            for q in 0..c.dim(x).min(c.dim(y)) {
                if let Some(z) = c.compose(x, y, q) {
                    if target.compose(v(x), v(y), q) != Some(v(z)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

struct Index {
    // by_bnd[p][(s_{p-1} z, t_{p-1} z)] over dim z <= p, p >= 1
    by_bnd: Vec<HashMap<(usize, usize), Vec<usize>>>,
    by_s0: HashMap<usize, Vec<usize>>,
    by_t0: HashMap<usize, Vec<usize>>,
    low1: Vec<usize>,
    objects: Vec<usize>,
}

impl Index {
    fn new(t: &dyn OmegaCategory, top: usize) -> Index {
        let mut by_bnd = vec![HashMap::new(); top + 1];
        let mut by_s0: HashMap<usize, Vec<usize>> = HashMap::new();
        let mut by_t0: HashMap<usize, Vec<usize>> = HashMap::new();
        let mut low1 = Vec::new();
        let mut objects = Vec::new();
        for z in 0..t.size() {
            let d = t.dim(z);
            if d == 0 {
                objects.push(z);
            }
            if d <= 1 {
                low1.push(z);
                by_s0.entry(t.source(z, 0)).or_default().push(z);
                by_t0.entry(t.target(z, 0)).or_default().push(z);
            }
            for (p, m) in by_bnd.iter_mut().enumerate().skip(1.max(d)) {
                m.entry((t.source(z, p - 1), t.target(z, p - 1))).or_insert_with(Vec::new).push(z);
            }
        }
        Index { by_bnd, by_s0, by_t0, low1, objects }
    }
}

struct Search<'a> {
    shape: &'a Shape,
    target: &'a dyn OmegaCategory,
    exact: &'a [bool],
    index: Index,
    assign: Vec<Option<usize>>,
    out: Vec<Vec<usize>>,
    cap: usize,
}

impl Search<'_> {
    fn ok_dim(&self, a: usize, z: usize) -> bool {
        let (d, pd) = (self.target.dim(z), self.shape.poset().dim(a));
        d <= pd && (!self.exact[a] || d == pd)
    }

    fn go(&mut self, k: usize) -> Result<()> {
        if k == self.shape.order.len() {
            if self.out.len() >= self.cap {
                return Err(Error::resource("functors", self.cap));
            }
            self.out.push(self.assign.iter().map(|v| v.expect("complete assignment")).collect());
            return Ok(());
        }
        let p = self.shape.poset().clone();
        let a = self.shape.order[k];
        match p.dim(a) {
            0 => {
                for z in self.index.objects.clone() {
                    self.assign[a] = Some(z);
                    self.go(k + 1)?;
                }
                self.assign[a] = None;
            }
            1 => {
                let (u, v) = (p.bminus(a)[0], p.bplus(a)[0]);
                let cands: Vec<usize> = match (self.assign[u], self.assign[v]) {
                    (Some(x), Some(y)) => self.index.by_bnd[1].get(&(x, y)).cloned().unwrap_or_default(),
                    (Some(x), None) => self.index.by_s0.get(&x).cloned().unwrap_or_default(),
                    (None, Some(y)) => self.index.by_t0.get(&y).cloned().unwrap_or_default(),
                    (None, None) => self.index.low1.clone(),
                };
                let (fu, fv) = (self.assign[u].is_none(), self.assign[v].is_none());
                for z in cands {
                    if !self.ok_dim(a, z) {
                        continue;
                    }
                    self.assign[a] = Some(z);
                    if fu {
                        self.assign[u] = Some(self.target.source(z, 0));
                    }
                    if fv {
                        self.assign[v] = Some(self.target.target(z, 0));
                    }
                    self.go(k + 1)?;
                }
                self.assign[a] = None;
                if fu {
                    self.assign[u] = None;
                }
                if fv {
                    self.assign[v] = None;
                }
            }
            d => {
                let s = eval_partial(self.shape, self.target, &self.assign, self.shape.bminus_elem[a].unwrap());
                let t = eval_partial(self.shape, self.target, &self.assign, self.shape.bplus_elem[a].unwrap());
                let (Some(s), Some(t)) = (s, t) else { return Ok(()) };
                let cands = self.index.by_bnd[d].get(&(s, t)).cloned().unwrap_or_default();
                for z in cands {
                    if !self.ok_dim(a, z) {
                        continue;
                    }
                    self.assign[a] = Some(z);
                    self.go(k + 1)?;
                }
                self.assign[a] = None;
            }
        }
        Ok(())
    }
}

/// All functors `shape -> target`, as sorted atom assignments. Faces with
/// `exact[a]` must keep their dimension.
pub fn enumerate_functors(
    shape: &Shape,
    target: &dyn OmegaCategory,
    exact: &[bool],
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    if exact.len() != shape.len() {
        return Err(Error::input("constraint vector has the wrong length"));
    }
    let mut s = Search {
        shape,
        target,
        exact,
        index: Index::new(target, shape.poset().max_dim().max(1)),
        assign: vec![None; shape.len()],
        out: Vec::new(),
        cap,
    };
    s.go(0)?;
    let mut out = s.out;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega_complex::Category;

    // Every dimension-respecting atom assignment, filtered by `is_functor`.
    fn brute_force(shape: &Shape, target: &dyn OmegaCategory) -> usize {
        let p = shape.poset();
        let cands: Vec<Vec<usize>> = (0..p.len())
            .map(|a| (0..target.size()).filter(|&z| target.dim(z) <= p.dim(a)).collect())
            .collect();
        let mut pos = vec![0; p.len()];
        let mut count = 0;
        loop {
            let a: Vec<usize> = pos.iter().enumerate().map(|(i, &k)| cands[i][k]).collect();
            if is_functor(shape, target, &a) {
                count += 1;
            }
            let mut i = 0;
            while i < pos.len() {
                pos[i] += 1;
                if pos[i] < cands[i].len() {
                    break;
                }
                pos[i] = 0;
                i += 1;
            }
            if i == pos.len() {
                return count;
            }
        }
    }

    #[test]
    fn interval_to_interval() {
        let s = Shape::cube(1).unwrap();
        let t = Category::of_poset(cube(1)).unwrap();
        let fs = enumerate_functors(&s, &t, &[false; 3], 100).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(fs.len(), brute_force(&s, &t));
    }

    #[test]
    fn square_into_interval_matches_brute_force() {
        let s = Shape::cube(2).unwrap();
        let t = Category::of_poset(cube(1)).unwrap();
        let fs = enumerate_functors(&s, &t, &vec![false; 9], 10_000).unwrap();
        assert_eq!(fs.len(), brute_force(&s, &t));
        for f in &fs {
            assert!(is_functor(&s, &t, f));
        }
    }

    #[test]
    fn triangle_into_simplex_matches_brute_force() {
        let s = Shape::simplex(2).unwrap();
        let t = Category::of_poset(simplex(2)).unwrap();
        let fs = enumerate_functors(&s, &t, &[false; 7], 10_000).unwrap();
        assert_eq!(fs.len(), brute_force(&s, &t));
        let e = Shape::cube(1).unwrap();
        let sq = Category::of_poset(cube(2)).unwrap();
        assert_eq!(enumerate_functors(&e, &sq, &[false; 3], 100).unwrap().len(), brute_force(&e, &sq));
    }

    #[test]
    fn exact_constraint_filters() {
        let s = Shape::cube(1).unwrap();
        let t = Category::of_poset(cube(1)).unwrap();
        let e = s.poset().id("0").unwrap();
        let mut exact = vec![false; 3];
        exact[e] = true;
        assert_eq!(enumerate_functors(&s, &t, &exact, 100).unwrap().len(), 1);
    }
}
