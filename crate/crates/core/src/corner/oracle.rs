//! Germ classes computed straight from the quotient `x ~ x *_0 y`, used as an
//! independent check of the corner complexes.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::category::CornerCategory;
use crate::error::{Error, Result};
use crate::omega_complex::{
    check_associativity, check_exchange, check_globularity, check_units, Category, FaceLabel, FacePoset, FaceSet, FaceSpec, OmegaCategory, TableCategory,
};

/// Classes of `P C` at a base vertex under the closure of `x ~ x *_0 y`,
/// with class-level boundaries in path-category indexing.
#[derive(Debug, Clone)]
pub struct GermClasses {
    pub vertex: usize,
    /// Sorted members; the first is the canonical representative.
    pub members: Vec<Vec<usize>>,
    pub class_of: HashMap<usize, usize>,
    pub pdim: Vec<usize>,
    /// `sources[k][p]` is the class of `s_{p+1} x` for `p < pdim[k]`.
    pub sources: Vec<Vec<usize>>,
    pub targets: Vec<Vec<usize>>,
}

impl GermClasses {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn rep(&self, k: usize) -> usize {
        self.members[k][0]
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// `vertex` is the index of a 0-dimensional morphism of `c`.
pub fn germ_classes(c: &dyn OmegaCategory, vertex: usize) -> Result<GermClasses> {
    if c.dim(vertex) != 0 {
        return Err(Error::input("germ classes need a 0-dimensional base"));
    }
    if !c.is_non_contracting() {
        return Err(Error::input("germ classes need a non-contracting category"));
    }
    let pc: Vec<usize> = (0..c.size()).filter(|&x| c.dim(x) >= 1 && c.source(x, 0) == vertex).collect();
    let pos: HashMap<usize, usize> = pc.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut starting: HashMap<usize, Vec<usize>> = HashMap::new();
    for y in (0..c.size()).filter(|&y| c.dim(y) >= 1) {
        starting.entry(c.source(y, 0)).or_default().push(y);
    }
    let mut parent: Vec<usize> = (0..pc.len()).collect();
    for (i, &x) in pc.iter().enumerate() {
        for &y in starting.get(&c.target(x, 0)).map(|v| v.as_slice()).unwrap_or(&[]) {
            let z = c.compose(x, y, 0).ok_or_else(|| {
                Error::internal(format!("composite {} *0 {} missing", c.label(x), c.label(y)))
            })?;
            let j = pos[&z];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..pc.len() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(pc[i]);
    }
    let mut members: Vec<Vec<usize>> = groups.into_values().collect();
    for m in &mut members {
        m.sort_unstable();
    }
    members.sort();
    let mut class_of: HashMap<usize, usize> = HashMap::new();
    for (k, m) in members.iter().enumerate() {
        for &x in m {
            class_of.insert(x, k);
        }
    }
    let top = c.max_dim();
    let mut profile: Vec<Vec<(usize, usize)>> = Vec::with_capacity(members.len());
    for (k, m) in members.iter().enumerate() {
        let seq = |x: usize| -> Vec<(usize, usize)> {
            (1..=top).map(|p| (class_of[&c.source(x, p)], class_of[&c.target(x, p)])).collect()
        };
        let first = seq(m[0]);
        for &x in &m[1..] {
            if seq(x) != first {
                return Err(Error::internal(format!(
                    "class boundaries differ between {} and {}",
                    c.label(m[0]),
                    c.label(x)
                )));
            }
        }
        let pdim = first.iter().position(|&(s, t)| s == k && t == k).unwrap_or(top);
        if first[pdim..].iter().any(|&(s, t)| s != k || t != k) {
            return Err(Error::internal(format!("class of {} is not globular", c.label(m[0]))));
        }
        profile.push(first);
    }
    let mut pdim = Vec::with_capacity(members.len());
    let mut sources = Vec::with_capacity(members.len());
    let mut targets = Vec::with_capacity(members.len());
    for (k, seq) in profile.iter().enumerate() {
        let d = seq.iter().position(|&(s, t)| s == k && t == k).unwrap_or(top);
        pdim.push(d);
        sources.push(seq[..d].iter().map(|&(s, _)| s).collect());
        targets.push(seq[..d].iter().map(|&(_, t)| t).collect());
    }
    Ok(GermClasses { vertex, members, class_of, pdim, sources, targets })
}

/// The quotient as a category when classes are closed under composition:
/// whenever `t_p K = s_p L`, some members of `K` and `L` compose in `c`.
/// `None` when some class-composable pair has no composable members or the
/// resulting table fails an axiom.
pub fn germ_quotient(c: &dyn OmegaCategory, g: &GermClasses) -> Result<Option<TableCategory>> {
    let n = g.len();
    let mut comps = Vec::new();
    for k in 0..n {
        for l in 0..n {
            for p in 0..g.pdim[k].min(g.pdim[l]) {
                if g.targets[k][p] != g.sources[l][p] {
                    continue;
                }
                let mut result: Option<usize> = None;
                for &x in &g.members[k] {
                    for &y in &g.members[l] {
                        if let Some(z) = c.compose(x, y, p + 1) {
                            let cz = g.class_of[&z];
                            if result.is_some_and(|r| r != cz) {
                                return Err(Error::internal("germ composition is not well defined"));
                            }
                            result = Some(cz);
                        }
                    }
                }
                match result {
                    Some(z) => comps.push((k, l, p, z)),
                    None => return Ok(None),
                }
            }
        }
    }
    let labels = (0..n).map(|k| c.label(g.rep(k))).collect();
    let t = TableCategory::new(labels, g.pdim.clone(), g.sources.clone(), g.targets.clone(), comps)?;
    let mut r = check_globularity(&t);
    r.merge(check_units(&t));
    r.merge(check_associativity(&t));
    r.merge(check_exchange(&t));
    Ok(r.passed().then_some(t))
}

/// Germ classes, their irreducible generators, and the omega-complex the
/// generators span.
#[derive(Debug, Clone)]
pub struct GermOracle {
    pub classes: GermClasses,
    pub irreducible: Vec<bool>,
    /// Irreducible classes below each class, sorted.
    pub support: Vec<Vec<usize>>,
    pub generators: Arc<FacePoset>,
    /// Face of the generator poset for each irreducible class.
    pub gen_face: Vec<Option<usize>>,
    pub category: Category,
    pub class_element: Vec<usize>,
    /// Elements of `category` that are not the image of any class.
    pub new_composites: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    Fresh,
    Active,
    Done,
}

struct Supports<'a> {
    g: &'a GermClasses,
    irreducible: &'a [bool],
    decomps: &'a [Vec<(usize, usize)>],
    mark: Vec<Mark>,
    memo: Vec<BTreeSet<usize>>,
}

impl Supports<'_> {
    fn get(&mut self, k: usize) -> Result<BTreeSet<usize>> {
        match self.mark[k] {
            Mark::Done => return Ok(self.memo[k].clone()),
            Mark::Active => return Err(Error::internal("cyclic germ decomposition")),
            Mark::Fresh => {}
        }
        self.mark[k] = Mark::Active;
        let s = if self.irreducible[k] {
            let mut s = BTreeSet::from([k]);
            if let Some(p) = self.g.pdim[k].checked_sub(1) {
                s.extend(self.get(self.g.sources[k][p])?);
                s.extend(self.get(self.g.targets[k][p])?);
            }
            s
        } else {
            let mut out: Option<BTreeSet<usize>> = None;
            for &(a, b) in &self.decomps[k] {
                let mut s = self.get(a)?;
                s.extend(self.get(b)?);
                if out.as_ref().is_some_and(|o| *o != s) {
                    return Err(Error::internal("germ decompositions disagree on support"));
                }
                out = Some(s);
            }
            out.unwrap()
        };
        self.mark[k] = Mark::Done;
        self.memo[k] = s.clone();
        Ok(s)
    }
}

/// `vertex` is the ambient face id of the base vertex.
pub fn germ_oracle(c: &Category, vertex: usize, cap: usize) -> Result<GermOracle> {
    let g = germ_classes(c, c.atom(vertex))?;
    let n = g.len();
    // Proper decompositions z = x *_p y, p >= 1, with [x], [y] != [z].
    let mut decomps: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let pc: Vec<usize> = g.class_of.keys().copied().collect();
    let mut by_source: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for &y in &pc {
        for p in 1..c.dim(y) {
            by_source.entry((p, c.source(y, p))).or_default().push(y);
        }
    }
    for &x in &pc {
        for p in 1..c.dim(x) {
            for &y in by_source.get(&(p, c.target(x, p))).map(|v| v.as_slice()).unwrap_or(&[]) {
                let z = c.compose(x, y, p).ok_or_else(|| Error::internal("composite missing"))?;
                let (kx, ky, kz) = (g.class_of[&x], g.class_of[&y], g.class_of[&z]);
                if kx != kz && ky != kz {
                    decomps[kz].push((kx, ky));
                }
            }
        }
    }
    for d in &mut decomps {
        d.sort_unstable();
        d.dedup();
    }
    let irreducible: Vec<bool> = decomps.iter().map(|d| d.is_empty()).collect();
    let mut sup = Supports {
        g: &g,
        irreducible: &irreducible,
        decomps: &decomps,
        mark: vec![Mark::Fresh; n],
        memo: vec![BTreeSet::new(); n],
    };
    let support: Vec<BTreeSet<usize>> = (0..n).map(|k| sup.get(k)).collect::<Result<_>>()?;

    let width = n.to_string().len();
    let name = |k: usize| FaceLabel::Cell(format!("k{k:0width$}"));
    let top_part = |k: usize, d: usize| -> Vec<FaceLabel> {
        support[k].iter().filter(|&&l| g.pdim[l] == d).map(|&l| name(l)).collect()
    };
    let specs: Vec<FaceSpec> = (0..n)
        .filter(|&k| irreducible[k])
        .map(|k| {
            let d = g.pdim[k];
            let (bm, bp) = match d.checked_sub(1) {
                Some(p) => (top_part(g.sources[k][p], p), top_part(g.targets[k][p], p)),
                None => (vec![], vec![]),
            };
            FaceSpec { label: name(k), dim: d, bminus: bm, bplus: bp }
        })
        .collect();
    let generators = Arc::new(FacePoset::new(specs)?);
    let gen_face: Vec<Option<usize>> =
        (0..n).map(|k| if irreducible[k] { generators.id_of(&name(k)) } else { None }).collect();
    let as_set = |s: &BTreeSet<usize>| -> FaceSet {
        FaceSet::from_ids(generators.len(), s.iter().map(|&l| gen_face[l].unwrap()))
    };
    for k in (0..n).filter(|&k| irreducible[k]) {
        let f = gen_face[k].unwrap();
        if *generators.sub(f) != as_set(&support[k]) {
            return Err(Error::internal(format!("generator {} does not span its support", name(k))));
        }
        if let Some(p) = g.pdim[k].checked_sub(1) {
            if *generators.bclosure(f, crate::omega_complex::Sign::Minus) != as_set(&support[g.sources[k][p]])
                || *generators.bclosure(f, crate::omega_complex::Sign::Plus) != as_set(&support[g.targets[k][p]])
            {
                return Err(Error::internal(format!("generator {} boundary mismatch", name(k))));
            }
        }
    }
    let category = Category::enumerate(generators.clone(), cap)?;
    let mut class_element = Vec::with_capacity(n);
    for k in 0..n {
        let e = category.index_of(&as_set(&support[k])).ok_or_else(|| {
            Error::internal(format!("support of class {k} is not an element of the closure"))
        })?;
        class_element.push(e);
    }
    for k in 0..n {
        for p in 0..g.pdim[k] {
            let e = class_element[k];
            if category.source(e, p) != class_element[g.sources[k][p]]
                || category.target(e, p) != class_element[g.targets[k][p]]
            {
                return Err(Error::internal(format!("class {k} boundary disagrees with closure")));
            }
        }
        // Raw classes can carry parts outside the corner, so the germ may be
        // lower-dimensional than the class profile suggests.
        if category.dim(class_element[k]) > g.pdim[k] {
            return Err(Error::internal(format!("class {k} dimension exceeds its profile")));
        }
    }
    let hit: BTreeSet<usize> = class_element.iter().copied().collect();
    let new_composites = (0..category.size()).filter(|e| !hit.contains(e)).collect();
    Ok(GermOracle {
        classes: g,
        irreducible,
        support: support.into_iter().map(|s| s.into_iter().collect()).collect(),
        generators,
        gen_face,
        category,
        class_element,
        new_composites,
    })
}

impl GermOracle {
    /// Checks that the corner complex at the same vertex is isomorphic to the
    /// generator complex, with every class sent to its corner restriction.
    pub fn cross_check(&self, c: &Category, corner: &CornerCategory) -> Result<()> {
        let cp = &corner.poset;
        let gens: Vec<usize> = (0..self.classes.len()).filter(|&k| self.irreducible[k]).collect();
        if gens.len() != cp.len() {
            return Err(Error::internal(format!(
                "{} irreducible germs but {} corner faces",
                gens.len(),
                cp.len()
            )));
        }
        // generator face -> corner face
        let mut to_corner = vec![usize::MAX; self.generators.len()];
        let mut used = vec![false; cp.len()];
        for &k in &gens {
            let h = corner.germ(c.element(self.classes.rep(k)));
            let tops = cp.generators(&h);
            if tops.len() != 1 || *cp.sub(tops[0]) != h {
                return Err(Error::internal(format!(
                    "germ of {} is not a corner atom",
                    c.label(self.classes.rep(k))
                )));
            }
            if used[tops[0]] {
                return Err(Error::internal("two germs share a corner face"));
            }
            used[tops[0]] = true;
            to_corner[self.gen_face[k].unwrap()] = tops[0];
        }
        let image = |fs: &[usize]| -> BTreeSet<usize> { fs.iter().map(|&f| to_corner[f]).collect() };
        for f in 0..self.generators.len() {
            let t = to_corner[f];
            if self.generators.dim(f) != cp.dim(t)
                || image(self.generators.bminus(f)) != cp.bminus(t).iter().copied().collect()
                || image(self.generators.bplus(f)) != cp.bplus(t).iter().copied().collect()
            {
                return Err(Error::internal(format!("face {} is not preserved", cp.label(t))));
            }
        }
        for k in 0..self.classes.len() {
            let want = FaceSet::from_ids(
                cp.len(),
                self.support[k].iter().map(|&l| to_corner[self.gen_face[l].unwrap()]),
            );
            for &x in &self.classes.members[k] {
                if corner.germ(c.element(x)) != want {
                    return Err(Error::internal(format!("germ of {} disagrees", c.label(x))));
                }
            }
        }
        let enumerated = Category::enumerate(cp.clone(), self.category.size().max(1) * 2 + 16)?;
        if enumerated.size() != self.category.size() {
            return Err(Error::internal("corner and germ closures differ in size"));
        }
        Ok(())
    }
}
