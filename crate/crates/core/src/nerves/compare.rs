use std::collections::HashMap;

use super::functor::{eval, Shape};
use super::simplicial::{Cut, IdentityReport, NerveKind, Simplex};
use crate::corner::phi_word;
use crate::error::{Error, Result};
use crate::omega_complex::{simplex, FaceLabel, Letter, OmegaCategory, Sign};

/// `f -> f^-` from a cubical nerve to the semi-globular nerve of the same model.
#[derive(Debug, Clone)]
pub struct Comparison {
    /// `maps[n][x]`: index in the semi-globular `F_n`.
    pub maps: Vec<Vec<usize>>,
}

fn check_pair(br: &Cut, gl: &Cut) -> Result<()> {
    let ok = matches!(
        (br.kind, gl.kind),
        (NerveKind::Branching, NerveKind::SemiGlobularBranching)
            | (NerveKind::Merging, NerveKind::SemiGlobularMerging)
    );
    if !ok || br.base_labels != gl.base_labels {
        return Err(Error::input("comparison needs the cubical and semi-globular nerves of one model"));
    }
    Ok(())
}

/// On a simplex face `s` of `Delta^n`, `f^-(s)` is the germ of `f(R(phi(s)))`.
pub fn comparison_to_semiglobular(br: &Cut, gl: &Cut) -> Result<Comparison> {
    check_pair(br, gl)?;
    let comp_of: HashMap<usize, usize> =
        gl.components.iter().enumerate().map(|(k, c)| (c.vertex.expect("graded"), k)).collect();
    let top = br.top().unwrap_or(0).min(gl.top().unwrap_or(0));
    let mut maps = Vec::new();
    for n in 0..=top {
        let cube = br.shapes[n].poset();
        let simp = gl.shapes[n].poset();
        let init = cube
            .id_of(&FaceLabel::Cube(vec![Letter::Minus; n + 1]))
            .ok_or_else(|| Error::internal("cube without initial vertex"))?;
        let phi: Vec<usize> = (0..simp.len())
            .map(|a| {
                let v = simp.label(a).as_simplex().expect("simplex label");
                cube.id_of(&FaceLabel::Cube(phi_word(n, v))).expect("corner face")
            })
            .collect();
        let mut lv = Vec::with_capacity(br.count(n));
        for s in &br.simplices[n] {
            let alpha = s.assignment[init];
            let k = *comp_of
                .get(&alpha)
                .ok_or_else(|| Error::internal(format!("no germ component at object {alpha}")))?;
            let h = &gl.components[k].h_minus;
            let assignment = phi
                .iter()
                .map(|&c| {
                    let z = s.assignment[c];
                    h.get(&z).copied().ok_or_else(|| Error::internal(format!("no germ for element {z}")))
                })
                .collect::<Result<Vec<usize>>>()?;
            let img = Simplex { component: k, assignment };
            lv.push(gl.index_of(n, &img).ok_or_else(|| {
                Error::internal(format!("image of a level-{n} cubical simplex is not a functor"))
            })?);
        }
        maps.push(lv);
    }
    Ok(Comparison { maps })
}

impl Comparison {
    /// Commutation with faces, degeneracies, augmentation, and `ev` up to germ.
    pub fn check(&self, br: &Cut, gl: &Cut) -> IdentityReport {
        let mut r = IdentityReport::default();
        let mut expect = |ok: bool, msg: String| {
            r.checked += 1;
            if !ok && r.failures.len() < 20 {
                r.failures.push(msg);
            }
        };
        for (n, map) in self.maps.iter().enumerate() {
            let top = br.shapes[n].poset().faces_of_dim(n + 1).next().unwrap();
            for (x, &y) in map.iter().enumerate() {
                if n == 0 {
                    expect(
                        br.set.augmentation[x] == gl.set.augmentation[y],
                        format!("augmentation on F_0[{x}]"),
                    );
                } else {
                    for i in 0..=n {
                        let a = self.maps[n - 1][br.set.face(n, x, i)];
                        expect(a == gl.set.face(n, y, i), format!("d_{i} on F_{n}[{x}]"));
                    }
                }
                if n + 1 < self.maps.len() {
                    for i in 0..=n {
                        if let (Some(a), Some(b)) = (br.set.degeneracy(n, x, i), gl.set.degeneracy(n, y, i)) {
                            expect(self.maps[n + 1][a] == b, format!("e_{i} on F_{n}[{x}]"));
                        }
                    }
                }
                let s = &br.simplices[n][x];
                let comp = &gl.components[gl.simplices[n][y].component];
                let want = comp.h_minus.get(&s.assignment[top]).copied();
                expect(want == Some(gl.ev[n][y]), format!("ev on F_{n}[{x}]"));
            }
        }
        r
    }
}

/// A simplex of a `Delta^n`-shaped nerve is determined by its faces and its
/// value on the top face, for `n >= 1`. Cubical nerves are not covered: the
/// `+` faces of `I^{n+1}` are not faces of the simplex.
pub fn check_faces_and_ev_determine(cut: &Cut) -> IdentityReport {
    let mut r = IdentityReport::default();
    for n in 1..cut.simplices.len() {
        let mut seen: HashMap<(usize, Vec<usize>, usize), usize> = HashMap::new();
        for x in 0..cut.count(n) {
            r.checked += 1;
            let key = (cut.simplices[n][x].component, cut.set.faces[n][x].clone(), cut.ev[n][x]);
            if let Some(prev) = seen.insert(key, x) {
                r.failures.push(format!("F_{n}[{prev}] and F_{n}[{x}] share faces and ev"));
            }
        }
    }
    r
}

/// Fills an `n`-shell `(x_0, ..., x_{n+1})` of functors `Delta^n -> Q` with
/// top value `u`. `Ok(None)` when `u` has the wrong boundary; an error when
/// the family is not a shell.
pub fn fill_shell(
    target: &dyn OmegaCategory,
    shape: &Shape,
    shell: &[Vec<usize>],
    u: usize,
) -> Result<Option<Vec<usize>>> {
    let big = shape.poset();
    let m = big.max_dim();
    if shell.len() != m + 1 || m == 0 {
        return Err(Error::input(format!("a shell for Delta^{m} has {} members", m + 1)));
    }
    let small = simplex(m - 1);
    let top = big.faces_of_dim(m).next().unwrap();
    let mut assign = vec![usize::MAX; big.len()];
    for a in 0..big.len() {
        if a == top {
            continue;
        }
        let v = big.label(a).as_simplex().expect("simplex label");
        let mut value = None;
        for j in (0..=m).filter(|j| !v.contains(j)) {
            let pre: Vec<usize> = v.iter().map(|&w| if w < j { w } else { w - 1 }).collect();
            let id = small.id_of(&FaceLabel::Simplex(pre)).expect("face of the smaller simplex");
            let z = shell[j][id];
            if value.is_some_and(|p| p != z) {
                return Err(Error::input(format!("shell members disagree on {}", big.label(a))));
            }
            value = Some(z);
        }
        assign[a] = value.expect("proper face misses a vertex");
    }
    assign[top] = u;
    if target.dim(u) > m {
        return Ok(None);
    }
    let s = shape.boundary_element(top, Sign::Minus).and_then(|e| eval(shape, target, &assign, e));
    let t = shape.boundary_element(top, Sign::Plus).and_then(|e| eval(shape, target, &assign, e));
    if s != Some(target.source(u, m - 1)) || t != Some(target.target(u, m - 1)) {
        return Ok(None);
    }
    Ok(Some(assign))
}
