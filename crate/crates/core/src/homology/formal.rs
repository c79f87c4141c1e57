use std::collections::HashMap;

use serde::Serialize;

use super::chain::ChainComplex;
use super::int::normalize;
use crate::error::Result;
use crate::nerves::Model;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormalKind {
    Globular,
    Branching,
    Merging,
}

impl FormalKind {
    pub fn name(self) -> &'static str {
        match self {
            FormalKind::Globular => "formal-gl",
            FormalKind::Branching => "formal-br",
            FormalKind::Merging => "formal-mg",
        }
    }
}

/// A formal complex with the morphism behind each generator of degree `n >= 1`.
#[derive(Clone)]
pub struct FormalComplex {
    pub kind: FormalKind,
    /// The category generators are taken in; the dual one for merging.
    pub model: Model,
    pub complex: ChainComplex,
    /// `elements[n][i]`: the morphism of generator `i`; `elements[0]` lists objects.
    pub elements: Vec<Vec<usize>>,
}

/// The category the formal complex of `kind` is taken over.
pub fn formal_model(m: &Model, kind: FormalKind) -> Result<Model> {
    match kind {
        FormalKind::Merging => m.dual(),
        _ => Ok(m.clone()),
    }
}

/// Free groups on morphisms of exact dimension `n`, modulo
/// `x *_r y = x + y` for `1 <= r < n` (and `x *_0 y = x` on the branching
/// side, from degree 1 on) with lower-dimensional terms dropped; the boundary
/// is `s_{n-1} - t_{n-1}`. Degree 0 is `Z(C_0 x C_0)` with `s_0 (x) t_0` in
/// the globular case and `Z C_0` with `s_0` otherwise.
pub fn formal_complex(m: &Model, kind: FormalKind, max_degree: usize) -> Result<FormalComplex> {
    formal_complex_from(m, kind, max_degree, 1)
}

/// As [`formal_complex`], imposing relations only from degree `first` on.
/// With `first = 2` the branching boundary is not defined on the quotient:
/// `s_1 - t_1` of `x *_0 y`, for `x` a path, is `x *_0 s_1 y - x *_0 t_1 y`.
pub fn formal_complex_from(m: &Model, kind: FormalKind, max_degree: usize, first: usize) -> Result<FormalComplex> {
    m.check_non_contracting()?;
    let base = formal_model(m, kind)?;
    let c = base.cat.as_ref();
    let globular = kind == FormalKind::Globular;
    let top = max_degree + 1;
    let mut elements: Vec<Vec<usize>> = (0..=top).map(|n| c.of_dim(n)).collect();
    let objects = elements[0].clone();
    let mut pos = vec![usize::MAX; c.size()];
    for level in &elements {
        for (i, &x) in level.iter().enumerate() {
            pos[x] = i;
        }
    }
    let k = objects.len();
    let mut gens: Vec<usize> = elements.iter().map(|l| l.len()).collect();
    let mut labels: Vec<Vec<String>> = elements.iter().map(|l| l.iter().map(|&x| c.label(x)).collect()).collect();
    if globular {
        gens[0] = k * k;
        labels[0] = objects
            .iter()
            .flat_map(|&a| objects.iter().map(move |&b| (a, b)))
            .map(|(a, b)| format!("({},{})", c.label(a), c.label(b)))
            .collect();
        elements[0] = Vec::new();
    }
    let mut cx = ChainComplex::new(kind.name(), gens);
    cx.labels = labels;
    let term = |x: usize, n: usize, coef: i64| (c.dim(x) == n).then_some((pos[x], coef));
    for n in 1..=top {
        cx.diff[n] = elements[n]
            .iter()
            .map(|&x| {
                if n == 1 {
                    let s = pos[c.source(x, 0)];
                    if globular {
                        vec![(s * k + pos[c.target(x, 0)], 1)]
                    } else {
                        vec![(s, 1)]
                    }
                } else {
                    let v = [term(c.source(x, n - 1), n - 1, 1), term(c.target(x, n - 1), n - 1, -1)];
                    normalize(v.into_iter().flatten().collect())
                }
            })
            .collect();
    }
    for n in first.max(1)..=top {
        let low = if globular { 1 } else { 0 };
        let mut rels = Vec::new();
        for r in low..n {
            // Pair x with every y whose r-source is the r-target of x.
            let mut by_source: HashMap<usize, Vec<usize>> = HashMap::new();
            for y in (0..c.size()).filter(|&y| c.dim(y) > r && c.dim(y) <= n) {
                by_source.entry(c.source(y, r)).or_default().push(y);
            }
            for x in (0..c.size()).filter(|&x| c.dim(x) > r && c.dim(x) <= n) {
                for &y in by_source.get(&c.target(x, r)).into_iter().flatten() {
                    let Some(z) = c.compose(x, y, r) else { continue };
                    if c.dim(z) != n {
                        continue;
                    }
                    let mut v = vec![term(z, n, 1), term(x, n, -1)];
                    if r >= 1 {
                        v.push(term(y, n, -1));
                    }
                    let v = normalize(v.into_iter().flatten().collect());
                    if !v.is_empty() {
                        rels.push(v);
                    }
                }
            }
        }
        rels.sort();
        rels.dedup();
        cx.relations[n] = rels;
    }
    cx.exact_through = if c.max_dim() <= top { top } else { max_degree };
    Ok(FormalComplex { kind, model: base, complex: cx, elements })
}
