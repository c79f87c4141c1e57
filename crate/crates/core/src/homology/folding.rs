use std::sync::Arc;

use serde::Serialize;

use super::chain::ChainComplex;
use super::int::normalize;
use crate::error::{Error, Result};
use crate::nerves::{corner_edges, degeneracy_maps, enumerate_functors, Cut, IdentityReport, NerveKind, Shape, Simplex};
use crate::omega_complex::{
    globe, globe_source_name, globe_target_name, Category, FaceLabel, OmegaCategory, PathView, Sign, GLOBE_TOP,
};

/// A cell of the `n`-globe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GlobeSym {
    Source(usize),
    Target(usize),
    Top,
}

impl GlobeSym {
    fn collapse(self, n: usize) -> GlobeSym {
        match self {
            GlobeSym::Source(j) | GlobeSym::Target(j) if j + 1 == n => GlobeSym::Top,
            s => s,
        }
    }
}

/// `templates[n]` is the folding of the generic `n`-morphism: a simplex of
/// `F_{n-1}` over the `n`-globe, as globe cells per atom of the shape.
#[derive(Debug, Clone)]
pub struct Folding {
    pub kind: NerveKind,
    pub templates: Vec<Vec<GlobeSym>>,
}

fn globe_symbols(c: &Category, n: usize) -> Result<Vec<GlobeSym>> {
    let p = c.poset();
    if c.size() != p.len() {
        return Err(Error::internal("globe has composite elements"));
    }
    let mut out = vec![GlobeSym::Top; c.size()];
    for a in 0..p.len() {
        let name = match p.label(a) {
            FaceLabel::Cell(s) => s.clone(),
            other => return Err(Error::internal(format!("unexpected globe label {other}"))),
        };
        out[c.atom(a)] = if name == GLOBE_TOP {
            GlobeSym::Top
        } else if let Some(j) = (0..n).find(|&j| globe_source_name(j) == name) {
            GlobeSym::Source(j)
        } else if let Some(j) = (0..n).find(|&j| globe_target_name(j) == name) {
            GlobeSym::Target(j)
        } else {
            return Err(Error::internal(format!("unexpected globe cell {name}")));
        };
    }
    Ok(out)
}

fn top_atom(shape: &Shape) -> usize {
    let p = shape.poset();
    p.faces_of_dim(p.max_dim()).next().expect("shape has a top face")
}

/// Templates for `n = 1..=n_max`, each the unique functor with top value the
/// generic cell whose collapse `G_n -> G_{n-1}` is `e_{n-2}` of the previous one.
pub fn folding_templates(kind: NerveKind, n_max: usize, cap: usize) -> Result<Folding> {
    let cubical = kind.is_cubical();
    let mut templates = vec![Vec::new()];
    for n in 1..=n_max {
        let g = Category::of_poset(globe(n))?;
        let syms = globe_symbols(&g, n)?;
        let (shape, target, sym_of): (Shape, Arc<dyn OmegaCategory>, Vec<GlobeSym>) = if cubical {
            (Shape::cube(n)?, Arc::new(g), syms)
        } else {
            let pv = PathView::new(Arc::new(g))?;
            let s = (0..pv.size()).map(|x| syms[pv.to_base(x)]).collect();
            (Shape::simplex(n - 1)?, Arc::new(pv), s)
        };
        let exact = if cubical { corner_edges(&shape) } else { vec![false; shape.len()] };
        let top = top_atom(&shape);
        let pulled: Option<Vec<GlobeSym>> = if n >= 2 {
            let e = &degeneracy_maps(cubical, n - 2)?[n - 2];
            Some(e.faces().iter().map(|&b| templates[n - 1][b]).collect())
        } else {
            None
        };
        let found: Vec<Vec<GlobeSym>> = enumerate_functors(&shape, target.as_ref(), &exact, cap)?
            .into_iter()
            .map(|f| f.iter().map(|&z| sym_of[z]).collect::<Vec<_>>())
            .filter(|t: &Vec<GlobeSym>| t[top] == GlobeSym::Top)
            .filter(|t| pulled.as_ref().is_none_or(|p| t.iter().map(|s| s.collapse(n)).eq(p.iter().copied())))
            .collect();
        if found.len() != 1 {
            return Err(Error::internal(format!(
                "{} folding template in degree {n}: {} candidates",
                kind.name(),
                found.len()
            )));
        }
        templates.push(found.into_iter().next().expect("one template"));
    }
    Ok(Folding { kind, templates })
}

/// The folding operators of one cut.
pub struct Folder<'a> {
    pub cut: &'a Cut,
    pub folding: Folding,
    ev_to_target: Vec<Vec<usize>>,
}

impl<'a> Folder<'a> {
    /// Templates for every level of the cut plus one.
    pub fn new(cut: &'a Cut, cap: usize) -> Result<Folder<'a>> {
        let levels = cut.top().map_or(0, |t| t + 1);
        let folding = folding_templates(cut.kind, levels, cap)?;
        let ev_to_target = cut
            .components
            .iter()
            .map(|c| {
                let mut back = vec![usize::MAX; c.ev_cat.size()];
                for (z, e) in c.ev_index.iter().enumerate() {
                    if let Some(e) = e {
                        back[*e] = z;
                    }
                }
                back
            })
            .collect();
        Ok(Folder { cut, folding, ev_to_target })
    }

    /// `box_n g` in `F_{n-1}` for `g` in the component's path-level category
    /// with dimension at most `n - 1`.
    pub fn fold(&self, comp: usize, g: usize, n: usize) -> Result<usize> {
        let c = &self.cut.components[comp];
        if n == 0 || n >= self.folding.templates.len() {
            return Err(Error::input(format!("no folding operator in degree {n}")));
        }
        if c.ev_cat.dim(g) + 1 > n {
            return Err(Error::input(format!("{} has dimension above {}", c.ev_cat.label(g), n - 1)));
        }
        let cubical = self.cut.kind.is_cubical();
        let u = self.ev_to_target[comp][g];
        let value = |s: GlobeSym| -> Result<usize> {
            match (cubical, s) {
                (true, GlobeSym::Source(j)) => Ok(c.target.source(u, j)),
                (true, GlobeSym::Target(j)) => Ok(c.target.target(u, j)),
                (true, GlobeSym::Top) => Ok(u),
                (false, GlobeSym::Source(j)) if j >= 1 => Ok(c.target.source(g, j - 1)),
                (false, GlobeSym::Target(j)) if j >= 1 => Ok(c.target.target(g, j - 1)),
                (false, GlobeSym::Top) => Ok(g),
                _ => Err(Error::internal("simplicial template uses a globe object")),
            }
        };
        let assignment = self.folding.templates[n].iter().map(|&s| value(s)).collect::<Result<Vec<_>>>()?;
        let s = Simplex { component: comp, assignment };
        self.cut.index_of(n - 1, &s).ok_or_else(|| {
            Error::internal(format!("folding of {} in degree {n} is not a simplex", c.ev_cat.label(g)))
        })
    }

    /// `Phi_n = box_n . ev` on `F_{n-1}`.
    pub fn phi(&self, n: usize, x: usize) -> Result<usize> {
        let comp = self.cut.simplices[n - 1][x].component;
        self.fold(comp, self.cut.ev[n - 1][x], n)
    }

    fn elements_up_to(&self, comp: usize, d: usize) -> Vec<usize> {
        let q = &self.cut.components[comp].ev_cat;
        (0..q.size()).filter(|&g| q.dim(g) <= d).collect()
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct FoldReport {
    /// `ev box_n = id`.
    pub ev_section: IdentityReport,
    /// `ev e_i = ev`.
    pub ev_degeneracies: IdentityReport,
    /// The last two faces of `box_n u` evaluate to `{s_{n-1} u, t_{n-1} u}`.
    pub boundary_faces: IdentityReport,
    /// A face evaluating to a boundary of `u` only depends on that boundary.
    pub boundary_naturality: IdentityReport,
    /// `d box_{n+1} u = box_n s_n u - box_n t_n u` in the reduced complex.
    pub differential: IdentityReport,
    /// `Phi_n x = x` in the reduced complex.
    pub phi_identity: IdentityReport,
}

impl FoldReport {
    pub fn passed(&self) -> bool {
        [
            &self.ev_section,
            &self.ev_degeneracies,
            &self.boundary_faces,
            &self.boundary_naturality,
            &self.differential,
            &self.phi_identity,
        ]
        .iter()
        .all(|r| r.passed())
    }

    pub fn checked(&self) -> usize {
        [
            &self.ev_section,
            &self.ev_degeneracies,
            &self.boundary_faces,
            &self.boundary_naturality,
            &self.differential,
            &self.phi_identity,
        ]
        .iter()
        .map(|r| r.checked)
        .sum()
    }
}

fn expect(r: &mut IdentityReport, ok: bool, msg: impl FnOnce() -> String) {
    r.checked += 1;
    if !ok && r.failures.len() < 20 {
        r.failures.push(msg());
    }
}

/// Every folding postcondition on the computed levels of a cut; `reduced` is
/// its reduced complex.
pub fn check_folding(f: &Folder<'_>, reduced: &ChainComplex) -> Result<FoldReport> {
    let cut = f.cut;
    let levels = cut.top().map_or(0, |t| t + 1);
    let mut rep = FoldReport { ev_degeneracies: cut.check_ev_degeneracies(), ..Default::default() };
    for n in 1..=levels {
        for comp in 0..cut.components.len() {
            let q = &cut.components[comp].ev_cat;
            for g in f.elements_up_to(comp, n - 1) {
                let x = f.fold(comp, g, n)?;
                let same = cut.simplices[n - 1][x].component == comp && cut.ev[n - 1][x] == g;
                expect(&mut rep.ev_section, same, || format!("ev box_{n} {} != id", q.label(g)));
                if n < 2 {
                    continue;
                }
                let ev_face = |i: usize| cut.ev[n - 2][cut.set.face(n - 1, x, i)];
                let mut got = [ev_face(n - 2), ev_face(n - 1)];
                let mut want = [q.source(g, n - 2), q.target(g, n - 2)];
                got.sort_unstable();
                want.sort_unstable();
                expect(&mut rep.boundary_faces, got == want, || {
                    format!("last faces of box_{n} {} miss its boundary", q.label(g))
                });
                for i in 0..n {
                    let e = ev_face(i);
                    for p in 0..q.dim(g) {
                        for s in [Sign::Minus, Sign::Plus] {
                            let d = q.boundary(g, p, s);
                            if e == d {
                                let y = f.fold(comp, d, n)?;
                                let ok = cut.set.face(n - 1, x, i) == cut.set.face(n - 1, y, i);
                                expect(&mut rep.boundary_naturality, ok, || {
                                    format!("d_{i} box_{n} {} != d_{i} box_{n} of its boundary", q.label(g))
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    // Reduced-complex identities in the degrees it fully presents.
    for n in 1..=reduced.exact_through.min(levels.saturating_sub(1)) {
        let zero = reduced.zero_test(n);
        for x in 0..cut.count(n - 1) {
            let y = f.phi(n, x)?;
            let ok = zero.is_zero(&normalize(vec![(y, 1), (x, -1)]));
            expect(&mut rep.phi_identity, ok, || format!("Phi_{n} moves F_{}[{x}] in the reduced complex", n - 1));
        }
        for comp in 0..cut.components.len() {
            let q = &cut.components[comp].ev_cat;
            for g in (0..q.size()).filter(|&g| q.dim(g) == n) {
                let x = f.fold(comp, g, n + 1)?;
                let s = f.fold(comp, q.source(g, n - 1), n)?;
                let t = f.fold(comp, q.target(g, n - 1), n)?;
                let mut v = reduced.diff[n + 1][x].clone();
                v.push((s, -1));
                v.push((t, 1));
                let ok = zero.is_zero(&normalize(v));
                expect(&mut rep.differential, ok, || format!("d box_{} {} != box s - box t", n + 1, q.label(g)));
            }
        }
    }
    Ok(rep)
}
