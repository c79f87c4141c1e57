use std::sync::Arc;

use serde::Serialize;

use super::category::corner_components;
use super::maps::{delta_epsilon, delta_eta, delta_minus, gamma_minus};
use super::phi::CornerMap;
use crate::error::{Error, Result};
use crate::omega_complex::{cube, simplex, AxiomReport, Category, FaceLabel, FacePoset, FaceSet, Letter, OmegaCategory, Sign};

/// An element-level comparison of a cube corner with a simplex.
#[derive(Debug, Clone, Serialize)]
pub struct CornerIso {
    pub vertex: String,
    /// Number of outgoing slots; the corner should be `Delta^{p-1}`.
    pub slots: usize,
    pub elements: usize,
    /// Corner face label and its simplex face, per face.
    pub certificate: Vec<(String, String)>,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CornerIso {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn word(l: &FaceLabel) -> Result<&[Letter]> {
    l.as_cube().ok_or_else(|| Error::input("corner isomorphism needs a cube"))
}

/// Compares the corner of `I^m` at `vertex` with `Delta^{p-1}`, where the
/// corner face with word `w` goes to the zero slots of `w` among the `p`
/// slots where the vertex is `-`. At the initial vertex this is `perp`.
pub fn corner_simplex_iso(ambient: &FacePoset, vertex: usize, cap: usize) -> Result<CornerIso> {
    let v = word(ambient.label(vertex))?.to_vec();
    let slots: Vec<usize> = (0..v.len()).filter(|&i| v[i] == Letter::Minus).collect();
    let cc = super::category::corner_category(ambient, vertex)?;
    let mut rep = AxiomReport::default();
    let mut out = CornerIso {
        vertex: ambient.label(vertex).to_string(),
        slots: slots.len(),
        elements: 0,
        certificate: Vec::new(),
        checked: 0,
        failures: Vec::new(),
    };
    if slots.is_empty() {
        rep.record(cc.is_empty(), || "final vertex has a nonempty corner".into());
        out.checked = rep.checked;
        out.failures = rep.failures;
        return Ok(out);
    }
    let cp = cc.poset.clone();
    let sp = Arc::new(simplex(slots.len() - 1));
    let mut map = Vec::with_capacity(cp.len());
    for a in 0..cp.len() {
        let w = word(cp.label(a))?;
        let z: Vec<usize> = slots.iter().enumerate().filter(|(_, &j)| w[j] == Letter::Zero).map(|(k, _)| k).collect();
        let b = sp
            .id_of(&FaceLabel::Simplex(z))
            .ok_or_else(|| Error::internal(format!("corner face {} has no simplex face", cp.label(a))))?;
        out.certificate.push((cp.label(a).to_string(), sp.label(b).to_string()));
        map.push(b);
    }
    let mut hit = vec![false; sp.len()];
    for (a, &b) in map.iter().enumerate() {
        rep.record(!hit[b], || format!("{} is hit twice", sp.label(b)));
        hit[b] = true;
        rep.record(cp.dim(a) == sp.dim(b), || format!("{} changes dimension", cp.label(a)));
        for s in Sign::both() {
            let mut img: Vec<usize> = cp.bfaces(a, s).iter().map(|&f| map[f]).collect();
            let mut want = sp.bfaces(b, s).to_vec();
            img.sort_unstable();
            want.sort_unstable();
            rep.record(img == want, || format!("boundary {} of {} is not preserved", s.symbol(), cp.label(a)));
        }
    }
    rep.record(hit.iter().all(|&h| h), || "face map is not onto".into());
    let image = |x: &FaceSet| FaceSet::from_ids(sp.len(), x.ids().map(|a| map[a]));
    let cat = Category::enumerate(cp.clone(), cap)?;
    let target = Category::enumerate(sp.clone(), cap)?;
    out.elements = cat.size();
    rep.record(cat.size() == target.size(), || format!("{} corner elements against {}", cat.size(), target.size()));
    let mut f = Vec::with_capacity(cat.size());
    for x in 0..cat.size() {
        let y = target.index_of(&image(cat.element(x)));
        rep.record(y.is_some(), || format!("image of {} is not an element", cat.label(x)));
        f.push(y);
    }
    if rep.passed() {
        let f: Vec<usize> = f.into_iter().map(|y| y.expect("checked")).collect();
        for x in 0..cat.size() {
            for r in 0..cat.dim(x) {
                rep.record(f[cat.source(x, r)] == target.source(f[x], r), || format!("s_{r} of {}", cat.label(x)));
                rep.record(f[cat.target(x, r)] == target.target(f[x], r), || format!("t_{r} of {}", cat.label(x)));
            }
        }
        for x in 0..cat.size() {
            for y in 0..cat.size() {
                for r in 0..cat.dim(x).max(cat.dim(y)) {
                    let a = cat.compose(x, y, r).map(|z| f[z]);
                    let b = target.compose(f[x], f[y], r);
                    rep.record(a == b, || format!("{} *{r} {}", cat.label(x), cat.label(y)));
                }
            }
        }
    }
    out.checked = rep.checked;
    out.failures = rep.failures;
    Ok(out)
}

/// Corners of `I^{n+1}` at every vertex: counts by slot number and one
/// isomorphism check per vertex.
#[derive(Debug, Clone, Serialize)]
pub struct Decomposition {
    pub n: usize,
    pub nonempty: usize,
    /// `by_slots[p]`: corners isomorphic to `Delta^{p-1}`.
    pub by_slots: Vec<usize>,
    pub isos: Vec<CornerIso>,
}

impl Decomposition {
    pub fn passed(&self) -> bool {
        let n1 = self.n + 1;
        let binom = |p: usize| (0..p).fold(1usize, |acc, i| acc * (n1 - i) / (i + 1));
        self.nonempty + 1 == 1 << n1
            && (1..=n1).all(|p| self.by_slots[p] == binom(p))
            && self.isos.iter().all(|i| i.passed())
    }
}

pub fn cube_corner_decomposition(n: usize, cap: usize) -> Result<Decomposition> {
    let p = cube(n + 1);
    let comps = corner_components(&p)?;
    let mut by_slots = vec![0; n + 2];
    let mut isos = Vec::new();
    for c in &comps {
        let iso = corner_simplex_iso(&p, c.vertex, cap)?;
        if !c.is_empty() {
            by_slots[iso.slots] += 1;
        }
        isos.push(iso);
    }
    Ok(Decomposition { n, nonempty: comps.iter().filter(|c| !c.is_empty()).count(), by_slots, isos })
}

/// `perp` of `R(d^a x)` against `R(d^a x^perp)` for every face `x` of `I^{n+1}`
/// and both signs; faces outside the image of `phi` must give the empty set.
pub fn check_boundary_transport(n: usize) -> AxiomReport {
    let m = CornerMap::new(n);
    let mut rep = AxiomReport::default();
    for a in 0..m.cube.len() {
        for s in Sign::both() {
            let lhs = m.perp_set(m.cube.bclosure(a, s));
            let rhs = match m.perp(a) {
                Some(b) => m.simplex.bclosure(b, s).clone(),
                None => m.simplex.empty_set(),
            };
            rep.record(lhs == rhs, || format!("boundary {} of {} is not transported", s.symbol(), m.cube.label(a)));
        }
    }
    rep
}

/// `phi_n . eps_i = delta_{i+1} . phi_{n-1}` and `phi_n . eta_i = gamma_{i+1} . phi_{n+1}`,
/// on faces and on every element of the simplex.
pub fn check_phi_diagrams(n: usize) -> Result<AxiomReport> {
    let mut rep = AxiomReport::default();
    let here = CornerMap::new(n);
    if n >= 1 {
        let below = CornerMap::new(n - 1);
        let cat = Category::of_poset(simplex(n - 1))?;
        for i in 0..=n {
            let eps = delta_epsilon(n, i)?;
            let del = delta_minus(n, i)?;
            for x in 0..cat.size() {
                let lhs = here.phi_set(&eps.apply(cat.element(x)));
                let rhs = del.apply(&below.phi_set(cat.element(x)));
                rep.record(lhs == rhs, || format!("eps_{i} square fails on {}", cat.label(x)));
            }
        }
    }
    let above = CornerMap::new(n + 1);
    let cat = Category::of_poset(simplex(n + 1))?;
    for i in 0..=n {
        let eta = delta_eta(n, i)?;
        let gam = gamma_minus(n, i)?;
        for x in 0..cat.size() {
            let lhs = here.phi_set(&eta.apply(cat.element(x)));
            let rhs = gam.apply(&above.phi_set(cat.element(x)));
            rep.record(lhs == rhs, || format!("eta_{i} square fails on {}", cat.label(x)));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_corners() {
        let d = cube_corner_decomposition(1, 1000).unwrap();
        assert_eq!(d.nonempty, 3);
        assert_eq!(d.by_slots, vec![0, 2, 1]);
        assert!(d.passed());
    }

    #[test]
    fn transport_small() {
        assert!(check_boundary_transport(2).passed());
        assert!(check_phi_diagrams(2).unwrap().passed());
    }
}
