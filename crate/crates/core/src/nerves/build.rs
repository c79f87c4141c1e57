use std::collections::HashMap;
use std::sync::Arc;

use super::functor::{enumerate_functors, Shape, DEFAULT_FUNCTOR_CAP};
use super::model::Model;
use super::simplicial::{AugSimplicialSet, Component, Cut, NerveKind, Simplex};
use crate::corner::{delta_epsilon, delta_eta, delta_minus, gamma_minus, FaceMap};
use crate::error::{Error, Result};
use crate::omega_complex::{FaceLabel, Letter, OmegaCategory, PathView};

#[derive(Debug, Clone, Copy)]
pub struct NerveOptions {
    pub n_max: usize,
    pub functor_cap: usize,
}

impl Default for NerveOptions {
    fn default() -> Self {
        NerveOptions { n_max: 2, functor_cap: DEFAULT_FUNCTOR_CAP }
    }
}

impl NerveOptions {
    pub fn up_to(n_max: usize) -> NerveOptions {
        NerveOptions { n_max, ..Default::default() }
    }
}

fn shape_of(cubical: bool, n: usize) -> Result<Shape> {
    if cubical {
        Shape::cube(n + 1)
    } else {
        Shape::simplex(n)
    }
}

/// Maps `F_n -> F_{n-1}` (`i = 0..=n`) as face maps between shapes.
fn face_maps(cubical: bool, n: usize) -> Result<Vec<FaceMap>> {
    (0..=n).map(|i| if cubical { delta_minus(n, i) } else { delta_epsilon(n, i) }).collect()
}

/// Maps `F_n -> F_{n+1}` (`i = 0..=n`).
pub(crate) fn degeneracy_maps(cubical: bool, n: usize) -> Result<Vec<FaceMap>> {
    (0..=n).map(|i| if cubical { gamma_minus(n, i) } else { delta_eta(n, i) }).collect()
}

fn pull(map: &FaceMap, s: &Simplex) -> Simplex {
    Simplex { component: s.component, assignment: map.faces().iter().map(|&b| s.assignment[b]).collect() }
}

fn top_face(shape: &Shape) -> usize {
    let p = shape.poset();
    p.faces_of_dim(p.max_dim()).next().expect("shape has a top face")
}

struct Assembly<'a> {
    kind: NerveKind,
    base_labels: Vec<String>,
    components: Vec<Component>,
    exact: &'a dyn Fn(&Shape) -> Vec<bool>,
    augment: &'a dyn Fn(&Shape, &Simplex) -> usize,
}

fn assemble(a: Assembly<'_>, opts: NerveOptions) -> Result<Cut> {
    let cubical = a.kind.is_cubical();
    let mut shapes = Vec::new();
    let mut simplices: Vec<Vec<Simplex>> = Vec::new();
    for n in 0..=opts.n_max {
        let shape = Arc::new(shape_of(cubical, n)?);
        let exact = (a.exact)(&shape);
        let mut level = Vec::new();
        for (k, comp) in a.components.iter().enumerate() {
            let remaining = opts.functor_cap.saturating_sub(level.len());
            for f in enumerate_functors(&shape, comp.target.as_ref(), &exact, remaining)? {
                level.push(Simplex { component: k, assignment: f });
            }
        }
        shapes.push(shape);
        simplices.push(level);
    }
    let lookup = |n: usize, s: &Simplex, what: &str| -> Result<usize> {
        simplices[n]
            .binary_search(s)
            .map_err(|_| Error::internal(format!("{what} of a level-{} simplex is not a simplex", n)))
    };
    let mut faces = vec![vec![Vec::new(); simplices[0].len()]];
    for n in 1..=opts.n_max {
        let maps = face_maps(cubical, n)?;
        let mut lv = Vec::with_capacity(simplices[n].len());
        for s in &simplices[n] {
            lv.push(maps.iter().map(|m| lookup(n - 1, &pull(m, s), "face")).collect::<Result<Vec<_>>>()?);
        }
        faces.push(lv);
    }
    let mut degeneracies = Vec::new();
    for n in 0..opts.n_max {
        let maps = degeneracy_maps(cubical, n)?;
        let mut lv = Vec::with_capacity(simplices[n].len());
        for s in &simplices[n] {
            lv.push(maps.iter().map(|m| lookup(n + 1, &pull(m, s), "degeneracy")).collect::<Result<Vec<_>>>()?);
        }
        degeneracies.push(lv);
    }
    let augmentation = simplices[0].iter().map(|s| (a.augment)(&shapes[0], s)).collect();
    let mut ev = Vec::new();
    for (n, level) in simplices.iter().enumerate() {
        let top = top_face(&shapes[n]);
        let mut lv = Vec::with_capacity(level.len());
        for s in level {
            let comp = &a.components[s.component];
            let z = s.assignment[top];
            lv.push(comp.ev_index[z].ok_or_else(|| {
                Error::internal(format!("evaluation {} is not a path", comp.target.label(z)))
            })?);
        }
        ev.push(lv);
    }
    let set = AugSimplicialSet {
        base: a.base_labels.len(),
        counts: simplices.iter().map(|l| l.len()).collect(),
        faces,
        augmentation,
        degeneracies,
    };
    Ok(Cut { kind: a.kind, set, base_labels: a.base_labels, shapes, components: a.components, simplices, ev })
}

fn objects_labels(m: &Model) -> (Vec<usize>, Vec<String>) {
    let obj = m.objects();
    let labels = obj.iter().map(|&o| m.cat.label(o)).collect();
    (obj, labels)
}

fn position(obj: &[usize], x: usize) -> usize {
    obj.binary_search(&x).expect("object index")
}

/// Edges of a cube leaving its initial vertex; branching functors keep them 1-dimensional.
pub fn corner_edges(shape: &Shape) -> Vec<bool> {
    let p = shape.poset();
    let init = p.id_of(&FaceLabel::Cube(vec![Letter::Minus; p.max_dim()]));
    (0..p.len()).map(|a| p.dim(a) == 1 && p.initial_vertex(a) == init).collect()
}

/// Corner-constrained functors `I^{n+1} -> C`, with `d_{-1} = s_0` and
/// `ev x = x(0...0)`.
pub fn branching_nerve(m: &Model, opts: NerveOptions) -> Result<Cut> {
    cubical(m, opts, NerveKind::Branching)
}

/// The branching nerve of the dual category.
pub fn merging_nerve(m: &Model, opts: NerveOptions) -> Result<Cut> {
    cubical(&m.dual()?, opts, NerveKind::Merging)
}

fn cubical(m: &Model, opts: NerveOptions, kind: NerveKind) -> Result<Cut> {
    m.check_non_contracting()?;
    let pv = PathView::new(m.cat.clone())?;
    let ev_index = (0..m.cat.size()).map(|z| pv.from_base(z)).collect();
    let comp = Component {
        label: "P".into(),
        vertex: None,
        target: m.cat.clone(),
        ev_cat: Arc::new(pv),
        ev_index,
        h_minus: HashMap::new(),
    };
    let (obj, base_labels) = objects_labels(m);
    let exact = corner_edges;
    let cat = m.cat.clone();
    let augment = move |shape: &Shape, s: &Simplex| -> usize {
        position(&obj, cat.source(s.assignment[top_face(shape)], 0))
    };
    assemble(Assembly { kind, base_labels, components: vec![comp], exact: &exact, augment: &augment }, opts)
}

/// Functors `Delta^n -> P C`; `F_{-1}` is `C_0 x C_0` with `d_{-1} = (s_0, t_0)`.
pub fn globular_nerve(m: &Model, opts: NerveOptions) -> Result<Cut> {
    m.check_non_contracting()?;
    let view = Arc::new(PathView::new(m.cat.clone())?);
    let pv: Arc<dyn OmegaCategory> = view.clone();
    let comp = Component {
        label: "P".into(),
        vertex: None,
        target: pv.clone(),
        ev_cat: pv.clone(),
        ev_index: (0..pv.size()).map(Some).collect(),
        h_minus: HashMap::new(),
    };
    let (obj, labels) = objects_labels(m);
    let mut base_labels = Vec::new();
    for a in &labels {
        for b in &labels {
            base_labels.push(format!("({a},{b})"));
        }
    }
    let exact = |shape: &Shape| vec![false; shape.len()];
    let k = obj.len();
    let augment = move |shape: &Shape, s: &Simplex| -> usize {
        let u = view.to_base(s.assignment[top_face(shape)]);
        let base = view.base();
        position(&obj, base.source(u, 0)) * k + position(&obj, base.target(u, 0))
    };
    assemble(
        Assembly { kind: NerveKind::Globular, base_labels, components: vec![comp], exact: &exact, augment: &augment },
        opts,
    )
}

/// Disjoint union over objects `a` of functors `Delta^n -> P^-_a C`.
pub fn semi_globular_nerve(m: &Model, opts: NerveOptions) -> Result<Cut> {
    semi(m, opts, NerveKind::SemiGlobularBranching)
}

pub fn semi_globular_merging_nerve(m: &Model, opts: NerveOptions) -> Result<Cut> {
    semi(&m.dual()?, opts, NerveKind::SemiGlobularMerging)
}

fn semi(m: &Model, opts: NerveOptions, kind: NerveKind) -> Result<Cut> {
    let (obj, base_labels) = objects_labels(m);
    let components: Vec<Component> = m
        .germ_components()?
        .into_iter()
        .map(|g| Component {
            label: m.cat.label(g.vertex),
            vertex: Some(g.vertex),
            ev_index: (0..g.cat.size()).map(Some).collect(),
            target: g.cat.clone(),
            ev_cat: g.cat,
            h_minus: g.h_minus,
        })
        .collect();
    let vertices: Vec<usize> = components.iter().map(|c| position(&obj, c.vertex.unwrap())).collect();
    let exact = |shape: &Shape| vec![false; shape.len()];
    let augment = move |_: &Shape, s: &Simplex| vertices[s.component];
    assemble(Assembly { kind, base_labels, components, exact: &exact, augment: &augment }, opts)
}

/// Dispatch by nerve kind.
pub fn nerve(m: &Model, kind: NerveKind, opts: NerveOptions) -> Result<Cut> {
    match kind {
        NerveKind::Branching => branching_nerve(m, opts),
        NerveKind::Merging => merging_nerve(m, opts),
        NerveKind::Globular => globular_nerve(m, opts),
        NerveKind::SemiGlobularBranching => semi_globular_nerve(m, opts),
        NerveKind::SemiGlobularMerging => semi_globular_merging_nerve(m, opts),
    }
}
