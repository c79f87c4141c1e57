use std::cell::OnceCell;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use super::dense::{column_echelon, invariant_factors, solve_echelon, Dense};
use super::int::{big_to_u64_or_string, lift, with_fallback, Int};
use super::sparse::{sparse_invariants, Lattice, Reduced, SparseVec};
use crate::error::{Error, Result};
use crate::nerves::IdentityReport;

/// A chain complex of finitely presented groups: degree `n` is
/// `Z^{gens[n]} / span(relations[n])`, and `diff[n][x]` is the boundary of
/// generator `x` of degree `n >= 1` on the generators of degree `n - 1`.
#[derive(Debug, Clone, Default)]
pub struct ChainComplex {
    pub name: String,
    pub gens: Vec<usize>,
    pub labels: Vec<Vec<String>>,
    pub relations: Vec<Vec<SparseVec<i64>>>,
    pub diff: Vec<Vec<SparseVec<i64>>>,
    /// Highest degree whose homology the stored degrees determine.
    pub exact_through: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coeff(pub BigInt);

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match big_to_u64_or_string(&self.0) {
            Ok(v) => s.serialize_u64(v),
            Err(t) => s.serialize_str(&t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupRank {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<Coeff>,
}

impl GroupRank {
    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion.iter().map(|c| big_to_u64_or_string(&c.0).unwrap_or(u64::MAX)).collect()
    }

    /// `Z^2 + Z/2` style rendering.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{}", t.0)));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub degrees: Vec<GroupRank>,
}

impl HomologyResult {
    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }
}

/// Membership in the relation lattice of one degree, in `i64` when possible.
pub struct ZeroTest {
    small: Option<Lattice<i64>>,
    big: OnceCell<Lattice<BigInt>>,
    gens: usize,
    rels: Vec<SparseVec<i64>>,
}

impl ZeroTest {
    pub fn is_zero(&self, v: &[(usize, i64)]) -> bool {
        if let Some(ans) = self.small.as_ref().and_then(|l| l.contains(v)) {
            return ans;
        }
        let big = self.big.get_or_init(|| {
            Lattice::new(self.gens, self.rels.iter().map(|r| lift(r)).collect()).expect("arbitrary precision")
        });
        big.contains(&lift(v)).expect("arbitrary precision")
    }
}

fn torsion_of<T: Int>(factors: &[T]) -> Vec<Coeff> {
    factors.iter().filter(|f| !f.is_unit()).map(|f| Coeff(f.to_big())).collect()
}

fn apply<T: Int>(cols: &[SparseVec<i64>], v: &[(usize, T)]) -> Option<SparseVec<T>> {
    let mut acc: BTreeMap<usize, T> = BTreeMap::new();
    for (x, c) in v {
        for (i, a) in &cols[*x] {
            let e = acc.entry(*i).or_insert_with(T::zero);
            *e = e.add(&c.mul(&T::from_i64(*a))?)?;
        }
    }
    Some(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

impl ChainComplex {
    pub fn top(&self) -> usize {
        self.gens.len().saturating_sub(1)
    }

    pub fn new(name: impl Into<String>, gens: Vec<usize>) -> ChainComplex {
        let d = gens.len();
        ChainComplex {
            name: name.into(),
            labels: vec![Vec::new(); d],
            relations: vec![Vec::new(); d],
            diff: gens.iter().enumerate().map(|(n, &g)| if n == 0 { Vec::new() } else { vec![Vec::new(); g] }).collect(),
            exact_through: d.saturating_sub(1),
            gens,
        }
    }

    fn reduced<T: Int>(&self, n: usize) -> Option<Reduced<T>> {
        Reduced::new(self.gens[n], self.relations[n].iter().map(|r| lift(r)).collect())
    }

    /// `D_n v`, for `v` on degree-`n` generators.
    pub fn boundary_of(&self, n: usize, v: &[(usize, i64)]) -> SparseVec<i64> {
        if n == 0 {
            return Vec::new();
        }
        with_fallback(
            || apply::<i64>(&self.diff[n], v),
            || apply::<BigInt>(&self.diff[n], &lift(v)).map(|w| {
                w.into_iter().map(|(i, c)| (i, i64::try_from(c).expect("boundary entry fits in i64"))).collect()
            }),
        )
    }

    /// Whether `v` is zero in the presented group of degree `n`.
    pub fn is_zero_in(&self, n: usize, v: &[(usize, i64)]) -> bool {
        self.zero_test(n).is_zero(v)
    }

    /// Reusable zero test for degree `n`.
    pub fn zero_test(&self, n: usize) -> ZeroTest {
        let rels: Vec<SparseVec<i64>> = self.relations.get(n).cloned().unwrap_or_default();
        let gens = self.gens.get(n).copied().unwrap_or(0);
        ZeroTest { small: Lattice::new(gens, rels.clone()), big: OnceCell::new(), gens, rels }
    }

    /// `Z^{gens[n]}` modulo relations plus `extra` columns: rank and torsion.
    pub fn quotient_structure(&self, n: usize, extra: &[SparseVec<i64>]) -> GroupRank {
        let cols = || self.relations[n].iter().chain(extra.iter());
        let (rank, f) = with_fallback(
            || sparse_invariants::<i64>(self.gens[n], cols().map(|r| lift(r)).collect()).map(|(r, f)| (r, torsion_of(&f))),
            || sparse_invariants::<BigInt>(self.gens[n], cols().map(|r| lift(r)).collect()).map(|(r, f)| (r, torsion_of(&f))),
        );
        GroupRank { degree: n, betti: self.gens[n] - rank, torsion: f }
    }

    /// `D D = 0` on generators and `D` maps relations into relations.
    pub fn check_boundaries(&self) -> IdentityReport {
        let mut r = IdentityReport::default();
        let tests: Vec<ZeroTest> = (0..self.gens.len()).map(|n| self.zero_test(n)).collect();
        let mut push = |ok: bool, msg: String| {
            r.checked += 1;
            if !ok && r.failures.len() < 20 {
                r.failures.push(msg);
            }
        };
        for n in 2..self.gens.len() {
            for x in 0..self.gens[n] {
                let dd = self.boundary_of(n - 1, &self.diff[n][x]);
                let ok = tests[n - 2].is_zero(&dd);
                push(ok, format!("{}: dd != 0 on degree {n} generator {x}", self.name));
            }
        }
        for n in 1..self.gens.len() {
            for (k, rel) in self.relations[n].iter().enumerate() {
                let d = self.boundary_of(n, rel);
                let ok = tests[n - 1].is_zero(&d);
                push(ok, format!("{}: boundary of relation {k} in degree {n} is not a relation", self.name));
            }
        }
        r
    }

    /// Homology in degrees `0..=min(max_degree, exact_through)`.
    pub fn homology(&self, max_degree: usize) -> Result<HomologyResult> {
        if self.gens.is_empty() {
            return Ok(HomologyResult { degrees: Vec::new() });
        }
        let top = max_degree.min(self.exact_through);
        let mut degrees = Vec::new();
        for n in 0..=top {
            let g = with_fallback(|| self.degree_homology::<i64>(n), || self.degree_homology::<BigInt>(n));
            degrees.push(g.map_err(Error::internal)?);
        }
        Ok(HomologyResult { degrees })
    }

    fn degree_homology<T: Int>(&self, n: usize) -> Option<std::result::Result<GroupRank, String>> {
        let here = self.reduced::<T>(n)?;
        let below = if n >= 1 { Some(self.reduced::<T>(n - 1)?) } else { None };
        let k = here.kept.len();
        // D_n restricted to kept generators, on kept generators below.
        let dn: Vec<SparseVec<T>> = match &below {
            Some(b) => here
                .kept
                .iter()
                .map(|&x| b.reduce(&lift(&self.diff[n][x])))
                .collect::<Option<_>>()?,
            None => Vec::new(),
        };
        let dn1: Vec<SparseVec<T>> = if n + 1 < self.gens.len() {
            self.diff[n + 1].iter().map(|c| here.reduce(&lift(c))).collect::<Option<_>>()?
        } else {
            Vec::new()
        };
        let free = here.rest.is_empty() && below.as_ref().is_none_or(|b| b.rest.is_empty());
        if free {
            let rank_dn = match &below {
                Some(b) => sparse_invariants(b.kept.len(), dn)?.0,
                None => 0,
            };
            let (rank_dn1, f) = sparse_invariants(k, dn1)?;
            let betti = k.checked_sub(rank_dn + rank_dn1);
            return Some(match betti {
                Some(betti) => Ok(GroupRank { degree: n, betti, torsion: torsion_of(&f) }),
                None => Err(format!("{}: boundaries exceed cycles in degree {n}", self.name)),
            });
        }
        // Cycles: x with D_n x in span(rest below).
        let cycles: Dense<T> = match &below {
            None => Dense::identity(k),
            Some(b) => {
                let mut cols = dn.clone();
                cols.extend(b.rest.iter().cloned());
                let (_, u, p) = column_echelon(Dense::from_columns(b.kept.len(), &cols))?;
                let mut z = Dense::zeros(k, u.cols - p);
                for (c, j) in (p..u.cols).enumerate() {
                    for i in 0..k {
                        z.a[i][c] = u.a[i][j].clone();
                    }
                }
                z
            }
        };
        let (basis, _, b) = column_echelon(cycles)?;
        let mut bounds: Vec<SparseVec<T>> = here.rest.clone();
        bounds.extend(dn1);
        let mut x = Dense::zeros(b, bounds.len());
        for (j, v) in bounds.iter().enumerate() {
            let mut dense = vec![T::zero(); k];
            for (i, c) in v {
                dense[*i] = c.clone();
            }
            match solve_echelon(&basis, b, &dense)? {
                Some(coef) => {
                    for (i, c) in coef.into_iter().enumerate() {
                        x.a[i][j] = c;
                    }
                }
                None => return Some(Err(format!("{}: a boundary in degree {n} is not a cycle", self.name))),
            }
        }
        let f = invariant_factors(x)?;
        Some(Ok(GroupRank { degree: n, betti: b - f.len(), torsion: torsion_of(&f) }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> ChainComplex {
        // Two vertices, two edges a -> b.
        let mut k = ChainComplex::new("circle", vec![2, 2]);
        k.diff[1] = vec![vec![(0, -1), (1, 1)], vec![(0, -1), (1, 1)]];
        k
    }

    #[test]
    fn circle_is_z_z() {
        let h = circle().homology(1).unwrap();
        assert_eq!(h.betti(), vec![1, 1]);
        assert!(h.degrees.iter().all(|d| d.torsion.is_empty()));
    }

    #[test]
    fn times_two_gives_z2() {
        let mut k = ChainComplex::new("x2", vec![1, 1]);
        k.diff[1] = vec![vec![(0, 2)]];
        let h = k.homology(1).unwrap();
        assert_eq!(h.degrees[0].render(), "Z/2");
        assert_eq!(h.degrees[1].render(), "0");
    }

    #[test]
    fn presented_degrees_use_the_general_route() {
        // Degree 0: Z^2 / (2 e0); degree 1: one generator with boundary e1.
        let mut k = ChainComplex::new("p", vec![2, 1]);
        k.relations[0] = vec![vec![(0, 2)]];
        k.diff[1] = vec![vec![(1, 1)]];
        let h = k.homology(1).unwrap();
        assert_eq!(h.degrees[0].render(), "Z/2");
        assert_eq!(h.degrees[1].render(), "0");
        // The same degree-0 group through a non-unit relation that survives
        // elimination: Z^2 / (2 e0 + 4 e1), boundary e0 + 2 e1.
        let mut k = ChainComplex::new("q", vec![2, 1]);
        k.relations[0] = vec![vec![(0, 2), (1, 4)]];
        k.diff[1] = vec![vec![(0, 1), (1, 2)]];
        let h = k.homology(1).unwrap();
        assert_eq!(h.degrees[0].render(), "Z");
        // 2 * generator is a cycle: its boundary is a relation.
        assert_eq!(h.degrees[1].render(), "Z");
        assert!(k.check_boundaries().passed());
    }

    #[test]
    fn broken_complex_is_caught() {
        let mut k = ChainComplex::new("bad", vec![1, 1, 1]);
        k.diff[1] = vec![vec![(0, 1)]];
        k.diff[2] = vec![vec![(0, 1)]];
        assert!(!k.check_boundaries().passed());
    }
}
