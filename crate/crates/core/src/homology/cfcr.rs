use std::collections::HashMap;

use serde::Serialize;

use super::chain::{ChainComplex, GroupRank};
use super::folding::Folder;
use super::formal::{FormalComplex, FormalKind};
use super::int::normalize;
use super::sparse::sparse_invariants;
use crate::error::{Error, Result};
use crate::nerves::{Comparison, Cut, IdentityReport, NerveKind};
use crate::omega_complex::PathView;

/// The formal theory whose folding lands in a nerve's reduced complex.
pub fn formal_kind_of(kind: NerveKind) -> FormalKind {
    match kind {
        NerveKind::Globular => FormalKind::Globular,
        NerveKind::Branching | NerveKind::SemiGlobularBranching => FormalKind::Branching,
        NerveKind::Merging | NerveKind::SemiGlobularMerging => FormalKind::Merging,
    }
}

/// Degree-wise images of formal generators: `maps[n][u]` is the reduced
/// generator `box_n u` (an `F_{n-1}` index), and the identity in degree 0.
#[derive(Debug, Clone)]
pub struct CfToCr {
    pub maps: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CfCrReport {
    pub chain_map: IdentityReport,
    pub relations: IdentityReport,
    /// Cokernel of the map per degree; zero when surjective.
    pub cokernel: Vec<GroupRank>,
    /// Rank over Q of the kernel per degree.
    pub kernel_rank: Vec<usize>,
}

impl CfCrReport {
    pub fn surjective(&self) -> bool {
        self.cokernel.iter().all(|g| g.betti == 0 && g.torsion.is_empty())
    }

    pub fn passed(&self) -> bool {
        self.chain_map.passed() && self.relations.passed() && self.surjective()
    }
}

fn expect(r: &mut IdentityReport, ok: bool, msg: impl FnOnce() -> String) {
    r.checked += 1;
    if !ok && r.failures.len() < 20 {
        r.failures.push(msg());
    }
}

/// Where a morphism `u` of dimension >= 1 sits in the cut: component and
/// path-level element.
fn locate(
    cf: &FormalComplex,
    cut: &Cut,
    pv: Option<&PathView>,
    comp_of: &HashMap<usize, usize>,
    u: usize,
) -> Result<(usize, usize)> {
    let missing = || Error::internal(format!("{} has no image in the nerve", cf.model.cat.label(u)));
    match cut.kind {
        NerveKind::Branching | NerveKind::Merging => Ok((0, cut.components[0].ev_index[u].ok_or_else(missing)?)),
        NerveKind::Globular => Ok((0, pv.and_then(|p| p.from_base(u)).ok_or_else(missing)?)),
        NerveKind::SemiGlobularBranching | NerveKind::SemiGlobularMerging => {
            let k = *comp_of.get(&cf.model.cat.source(u, 0)).ok_or_else(missing)?;
            Ok((k, cut.components[k].h_minus.get(&u).copied().ok_or_else(missing)?))
        }
    }
}

/// `u -> box_n u` from the formal complex to the reduced complex of `f.cut`.
pub fn cf_to_cr_map(cf: &FormalComplex, f: &Folder<'_>) -> Result<CfToCr> {
    let cut = f.cut;
    if formal_kind_of(cut.kind) != cf.kind {
        return Err(Error::input(format!("{} does not fold into {}", cf.kind.name(), cut.kind.name())));
    }
    if cf.complex.gens[0] != cut.set.base {
        return Err(Error::input("formal and nerve complexes have different degree-0 bases"));
    }
    let pv = match cut.kind {
        NerveKind::Globular => Some(PathView::new(cf.model.cat.clone())?),
        _ => None,
    };
    let comp_of: HashMap<usize, usize> =
        cut.components.iter().enumerate().filter_map(|(k, c)| c.vertex.map(|v| (v, k))).collect();
    let levels = cut.top().map_or(0, |t| t + 1);
    let mut maps = vec![(0..cut.set.base).collect::<Vec<_>>()];
    for n in 1..=levels.min(cf.complex.top()) {
        let mut lv = Vec::with_capacity(cf.elements[n].len());
        for &u in &cf.elements[n] {
            let (k, g) = locate(cf, cut, pv.as_ref(), &comp_of, u)?;
            lv.push(f.fold(k, g, n)?);
        }
        maps.push(lv);
    }
    Ok(CfToCr { maps })
}

impl CfToCr {
    fn image(&self, n: usize, v: &[(usize, i64)]) -> Vec<(usize, i64)> {
        normalize(v.iter().map(|&(i, c)| (self.maps[n][i], c)).collect())
    }

    /// Chain-map identity, relations sent to relations, cokernels and
    /// rational kernel ranks in every degree the reduced complex presents.
    pub fn check(&self, cf: &ChainComplex, cr: &ChainComplex) -> CfCrReport {
        let top = cr.exact_through.min(self.maps.len() - 1);
        let mut chain_map = IdentityReport::default();
        let mut relations = IdentityReport::default();
        let mut cokernel = Vec::new();
        let mut kernel_rank = Vec::new();
        for n in 0..=top {
            let zero = cr.zero_test(n);
            if n >= 1 {
                let below = cr.zero_test(n - 1);
                for u in 0..cf.gens[n] {
                    let mut v = cr.diff[n][self.maps[n][u]].clone();
                    v.extend(self.image(n - 1, &cf.diff[n][u]).into_iter().map(|(i, c)| (i, -c)));
                    let ok = below.is_zero(&normalize(v));
                    expect(&mut chain_map, ok, || format!("d f != f d on degree {n} generator {}", cf.labels[n][u]));
                }
            }
            for (j, r) in cf.relations[n].iter().enumerate() {
                let ok = zero.is_zero(&self.image(n, r));
                expect(&mut relations, ok, || format!("formal relation {j} of degree {n} is not sent to zero"));
            }
            let image: Vec<Vec<(usize, i64)>> = (0..cf.gens[n]).map(|u| vec![(self.maps[n][u], 1)]).collect();
            cokernel.push(cr.quotient_structure(n, &image));
            let rank = |rows: usize, cols: Vec<Vec<(usize, i64)>>| {
                sparse_invariants::<num_bigint::BigInt>(rows, cols.iter().map(|c| super::int::lift(c)).collect())
                    .map_or(0, |r| r.0)
            };
            let cf_rank = cf.gens[n] - rank(cf.gens[n], cf.relations[n].clone());
            let rel_rank = rank(cr.gens[n], cr.relations[n].clone());
            let mut both = cr.relations[n].clone();
            both.extend(image);
            let img_rank = rank(cr.gens[n], both) - rel_rank;
            kernel_rank.push(cf_rank - img_rank);
        }
        CfCrReport { chain_map, relations, cokernel, kernel_rank }
    }
}

/// `f^-` applied to `box^-_n u` agrees with the semi-globular folding of the
/// germ of `u` in the semi-globular reduced complex.
pub fn check_comparison_square(
    br: &Folder<'_>,
    gl: &Folder<'_>,
    cmp: &Comparison,
    cr_gl: &ChainComplex,
    cf: &FormalComplex,
) -> Result<IdentityReport> {
    let mut r = IdentityReport::default();
    let a = cf_to_cr_map(cf, br)?;
    let b = cf_to_cr_map(cf, gl)?;
    let top = cr_gl.exact_through.min(cmp.maps.len()).min(a.maps.len() - 1).min(b.maps.len() - 1);
    for n in 1..=top {
        let zero = cr_gl.zero_test(n);
        for u in 0..cf.complex.gens[n] {
            let left = cmp.maps[n - 1][a.maps[n][u]];
            let right = b.maps[n][u];
            let ok = zero.is_zero(&normalize(vec![(left, 1), (right, -1)]));
            expect(&mut r, ok, || format!("comparison square fails on {}", cf.complex.labels[n][u]));
        }
    }
    Ok(r)
}
