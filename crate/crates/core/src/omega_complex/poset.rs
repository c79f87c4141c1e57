use std::collections::HashMap;

use super::face::{FaceLabel, Letter, Sign};
use super::faceset::FaceSet;
use crate::error::{Error, Result};

/// Input description of one face; boundary faces are given by label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSpec {
    pub label: FaceLabel,
    pub dim: usize,
    pub bminus: Vec<FaceLabel>,
    pub bplus: Vec<FaceLabel>,
}

/// A finite atom-indexed complex. Face ids follow label order.
#[derive(Debug, Clone)]
pub struct FacePoset {
    labels: Vec<FaceLabel>,
    dims: Vec<usize>,
    bminus: Vec<Vec<usize>>,
    bplus: Vec<Vec<usize>>,
    sub: Vec<FaceSet>,
    /// `R(bminus x)` and `R(bplus x)`.
    bclosure: [Vec<FaceSet>; 2],
    /// Faces of dimension at most n, indexed by n.
    upto_dim: Vec<FaceSet>,
    lookup: HashMap<FaceLabel, usize>,
}

fn side(s: Sign) -> usize {
    match s {
        Sign::Minus => 0,
        Sign::Plus => 1,
    }
}

impl FacePoset {
    pub fn new(mut specs: Vec<FaceSpec>) -> Result<FacePoset> {
        specs.sort_by(|a, b| a.label.cmp(&b.label));
        let n = specs.len();
        let mut lookup = HashMap::with_capacity(n);
        for (i, f) in specs.iter().enumerate() {
            if lookup.insert(f.label.clone(), i).is_some() {
                return Err(Error::input(format!("duplicate face {}", f.label)));
            }
        }
        let dims: Vec<usize> = specs.iter().map(|f| f.dim).collect();
        let resolve = |f: &FaceSpec, ls: &[FaceLabel]| -> Result<Vec<usize>> {
            let mut out = Vec::with_capacity(ls.len());
            for l in ls {
                let j = *lookup
                    .get(l)
                    .ok_or_else(|| Error::input(format!("face {} refers to unknown face {l}", f.label)))?;
                if dims[j] + 1 != f.dim {
                    return Err(Error::input(format!(
                        "boundary face {l} of {} has dim {}, expected {}",
                        f.label,
                        dims[j],
                        f.dim as isize - 1
                    )));
                }
                out.push(j);
            }
            out.sort_unstable();
            out.dedup();
            Ok(out)
        };
        let mut bminus = Vec::with_capacity(n);
        let mut bplus = Vec::with_capacity(n);
        for f in &specs {
            let m = resolve(f, &f.bminus)?;
            let p = resolve(f, &f.bplus)?;
            if (f.dim == 0) != m.is_empty() || (f.dim == 0) != p.is_empty() {
                return Err(Error::input(format!(
                    "face {} of dim {} must have {} boundary",
                    f.label,
                    f.dim,
                    if f.dim == 0 { "empty" } else { "non-empty" }
                )));
            }
            bminus.push(m);
            bplus.push(p);
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| dims[i]);
        let mut sub = vec![FaceSet::empty(n); n];
        for &i in &order {
            let mut s = FaceSet::empty(n);
            s.insert(i);
            for &j in bminus[i].iter().chain(&bplus[i]) {
                s.union_with(&sub[j]);
            }
            sub[i] = s;
        }
        let close = |bs: &[Vec<usize>]| -> Vec<FaceSet> {
            bs.iter()
                .map(|b| {
                    let mut s = FaceSet::empty(n);
                    for &j in b {
                        s.union_with(&sub[j]);
                    }
                    s
                })
                .collect()
        };
        let bclosure = [close(&bminus), close(&bplus)];
        let max_dim = dims.iter().copied().max().unwrap_or(0);
        let upto_dim = (0..=max_dim)
            .map(|d| FaceSet::from_ids(n, (0..n).filter(|&i| dims[i] <= d)))
            .collect();
        Ok(FacePoset {
            labels: specs.into_iter().map(|f| f.label).collect(),
            dims,
            bminus,
            bplus,
            sub,
            bclosure,
            upto_dim,
            lookup,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn max_dim(&self) -> usize {
        self.upto_dim.len().saturating_sub(1)
    }

    pub fn dim(&self, id: usize) -> usize {
        self.dims[id]
    }

    pub fn label(&self, id: usize) -> &FaceLabel {
        &self.labels[id]
    }

    pub fn labels(&self) -> &[FaceLabel] {
        &self.labels
    }

    pub fn id_of(&self, l: &FaceLabel) -> Option<usize> {
        self.lookup.get(l).copied()
    }

    pub fn id(&self, label: &str) -> Result<usize> {
        // Realized cells may carry names that also parse as words.
        self.id_of(&FaceLabel::parse(label))
            .or_else(|| self.id_of(&FaceLabel::Cell(label.trim().to_string())))
            .ok_or_else(|| Error::input(format!("unknown face {label}")))
    }

    pub fn faces_of_dim(&self, d: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.dims[i] == d)
    }

    pub fn bminus(&self, id: usize) -> &[usize] {
        &self.bminus[id]
    }

    pub fn bplus(&self, id: usize) -> &[usize] {
        &self.bplus[id]
    }

    pub fn bfaces(&self, id: usize, s: Sign) -> &[usize] {
        match s {
            Sign::Minus => &self.bminus[id],
            Sign::Plus => &self.bplus[id],
        }
    }

    /// `R(x)`.
    pub fn sub(&self, id: usize) -> &FaceSet {
        &self.sub[id]
    }

    /// `R(bminus x)` or `R(bplus x)`.
    pub fn bclosure(&self, id: usize, s: Sign) -> &FaceSet {
        &self.bclosure[side(s)][id]
    }

    pub fn atom(&self, id: usize) -> FaceSet {
        self.sub[id].clone()
    }

    pub fn empty_set(&self) -> FaceSet {
        FaceSet::empty(self.len())
    }

    /// `R(X)` for a list of face ids.
    pub fn closure(&self, ids: &[usize]) -> Result<FaceSet> {
        let mut r = self.empty_set();
        for &i in ids {
            if i >= self.len() {
                return Err(Error::input(format!("unknown face id {i}")));
            }
            r.union_with(&self.sub[i]);
        }
        Ok(r)
    }

    pub fn closure_of(&self, x: &FaceSet) -> FaceSet {
        let mut r = self.empty_set();
        for i in x.ids() {
            r.union_with(&self.sub[i]);
        }
        r
    }

    pub fn closure_of_labels(&self, labels: &[&str]) -> Result<FaceSet> {
        let ids: Result<Vec<usize>> = labels.iter().map(|l| self.id(l)).collect();
        self.closure(&ids?)
    }

    pub fn is_down_closed(&self, x: &FaceSet) -> bool {
        x.ids().all(|i| self.sub[i].is_subset(x))
    }

    /// Maximal dimension of a member; 0 for the empty set.
    pub fn set_dim(&self, x: &FaceSet) -> usize {
        x.ids().map(|i| self.dims[i]).max().unwrap_or(0)
    }

    /// `d_n^s X = (union of R(a), dim a <= n) minus (union of R(b) \ R(bfaces^s b), dim b = n+1)`.
    pub fn boundary(&self, x: &FaceSet, n: usize, s: Sign) -> FaceSet {
        if n >= self.set_dim(x) {
            return x.clone();
        }
        let mut keep = x.intersection(&self.upto_dim[n]);
        for b in x.ids() {
            if self.dims[b] == n + 1 {
                keep.difference_with(&self.sub[b].difference(&self.bclosure[side(s)][b]));
            }
        }
        keep
    }

    pub fn source(&self, x: &FaceSet, n: usize) -> FaceSet {
        self.boundary(x, n, Sign::Minus)
    }

    pub fn target(&self, x: &FaceSet, n: usize) -> FaceSet {
        self.boundary(x, n, Sign::Plus)
    }

    /// `X *_p Y = X u Y` when `t_p X = s_p Y`, which must then equal `X n Y`.
    pub fn compose(&self, x: &FaceSet, y: &FaceSet, p: usize) -> Result<FaceSet> {
        let t = self.target(x, p);
        let s = self.source(y, p);
        if t != s {
            return Err(Error::Compose { p, left_target: self.render(&t), right_source: self.render(&s) });
        }
        if x.intersection(y) != t {
            return Err(Error::internal(format!(
                "intersection rule fails for {} *{p} {}",
                self.render(x),
                self.render(y)
            )));
        }
        Ok(x.union(y))
    }

    pub fn label_strings(&self, x: &FaceSet) -> Vec<String> {
        x.ids().map(|i| self.labels[i].to_string()).collect()
    }

    pub fn render(&self, x: &FaceSet) -> String {
        format!("{{{}}}", self.label_strings(x).join(","))
    }

    /// Maximal members of `X`: the faces not strictly below another member.
    pub fn generators(&self, x: &FaceSet) -> Vec<usize> {
        x.ids()
            .filter(|&i| !x.ids().any(|j| j != i && self.sub[j].contains(i)))
            .collect()
    }

    /// Total dual: every boundary orientation reversed, cube letters reversed.
    pub fn dual(&self) -> FacePoset {
        let relabel = |l: &FaceLabel| match l {
            FaceLabel::Cube(w) => FaceLabel::Cube(w.iter().map(|c| c.dual()).collect()),
            other => other.clone(),
        };
        let specs = (0..self.len())
            .map(|i| FaceSpec {
                label: relabel(&self.labels[i]),
                dim: self.dims[i],
                bminus: self.bplus[i].iter().map(|&j| relabel(&self.labels[j])).collect(),
                bplus: self.bminus[i].iter().map(|&j| relabel(&self.labels[j])).collect(),
            })
            .collect();
        FacePoset::new(specs).expect("dual of a valid poset is valid")
    }

    pub fn specs(&self) -> Vec<FaceSpec> {
        (0..self.len())
            .map(|i| FaceSpec {
                label: self.labels[i].clone(),
                dim: self.dims[i],
                bminus: self.bminus[i].iter().map(|&j| self.labels[j].clone()).collect(),
                bplus: self.bplus[i].iter().map(|&j| self.labels[j].clone()).collect(),
            })
            .collect()
    }

    /// Initial vertex of a face: the single vertex of `d_0^- R(x)`.
    pub fn initial_vertex(&self, id: usize) -> Option<usize> {
        self.end_vertex(id, Sign::Minus)
    }

    pub fn end_vertex(&self, id: usize, s: Sign) -> Option<usize> {
        let b = self.boundary(&self.sub[id], 0, s);
        let v: Vec<usize> = b.ids().collect();
        (v.len() == 1).then(|| v[0])
    }
}

/// Sign-alternating replacement of the `i`-th zero (1-based) in a cube word.
pub fn cube_face_letter(i: usize, s: Sign) -> Letter {
    let odd = i % 2 == 1;
    match (s, odd) {
        (Sign::Minus, true) | (Sign::Plus, false) => Letter::Minus,
        _ => Letter::Plus,
    }
}
