use std::collections::BTreeSet;

use super::dense::{column_echelon, invariant_factors, solve_echelon, Dense};
use super::int::{axpy, Int};

pub type SparseVec<T> = Vec<(usize, T)>;

/// `Z^rows / span(columns)` after eliminating every unit pivot.
///
/// Each elimination removes one generator `r` and one relation, recording a
/// substitution `w` with `w[r] = 1`; replaying the substitutions in order maps
/// any vector onto the kept generators.
#[derive(Debug, Clone)]
pub struct Reduced<T> {
    pub rows: usize,
    pub kept: Vec<usize>,
    pub pos: Vec<Option<usize>>,
    pub subs: Vec<(usize, SparseVec<T>)>,
    /// Relations left without a unit entry, in kept coordinates.
    pub rest: Vec<SparseVec<T>>,
}

impl<T: Int> Reduced<T> {
    pub fn new(rows: usize, cols: Vec<SparseVec<T>>) -> Option<Reduced<T>> {
        let mut cols: Vec<Option<SparseVec<T>>> = cols.into_iter().map(|c| (!c.is_empty()).then_some(c)).collect();
        let mut occ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); rows];
        for (j, c) in cols.iter().enumerate() {
            for (i, _) in c.iter().flatten() {
                occ[*i].insert(j);
            }
        }
        let mut alive = vec![true; rows];
        let mut subs = Vec::new();
        loop {
            let mut order: Vec<(usize, usize)> =
                cols.iter().enumerate().filter_map(|(j, c)| c.as_ref().map(|c| (c.len(), j))).collect();
            order.sort_unstable();
            let mut progress = false;
            for (_, j) in order {
                let Some(col) = cols[j].as_ref() else { continue };
                let pivot = col.iter().filter(|(_, x)| x.is_unit()).min_by_key(|(i, _)| (occ[*i].len(), *i));
                let Some((r, a)) = pivot.cloned() else { continue };
                let col = cols[j].take().expect("live column");
                for (i, _) in &col {
                    occ[*i].remove(&j);
                }
                let w: SparseVec<T> =
                    col.iter().map(|(i, x)| Some((*i, x.mul(&a)?))).collect::<Option<_>>()?;
                let users: Vec<usize> = occ[r].iter().copied().collect();
                for k in users {
                    let ck = cols[k].take().expect("indexed column");
                    let b = ck.iter().find(|(i, _)| *i == r).map(|(_, x)| x.clone()).expect("indexed entry");
                    let nk = axpy(&ck, &b, &w)?;
                    for (i, _) in &ck {
                        occ[*i].remove(&k);
                    }
                    for (i, _) in &nk {
                        occ[*i].insert(k);
                    }
                    cols[k] = (!nk.is_empty()).then_some(nk);
                }
                alive[r] = false;
                subs.push((r, w));
                progress = true;
            }
            if !progress {
                break;
            }
        }
        let kept: Vec<usize> = (0..rows).filter(|&i| alive[i]).collect();
        let mut pos = vec![None; rows];
        for (k, &i) in kept.iter().enumerate() {
            pos[i] = Some(k);
        }
        let rest = cols
            .into_iter()
            .flatten()
            .map(|c| c.into_iter().map(|(i, x)| (pos[i].expect("kept row"), x)).collect())
            .collect();
        Some(Reduced { rows, kept, pos, subs, rest })
    }

    pub fn pivots(&self) -> usize {
        self.subs.len()
    }

    /// `v` rewritten on the kept generators, equal to `v` in the quotient.
    pub fn reduce(&self, v: &[(usize, T)]) -> Option<SparseVec<T>> {
        let mut dense = vec![T::zero(); self.rows];
        for (i, x) in v {
            dense[*i] = dense[*i].add(x)?;
        }
        for (r, w) in &self.subs {
            if !dense[*r].is_zero() {
                let c = dense[*r].clone();
                for (i, x) in w {
                    dense[*i] = dense[*i].sub(&c.mul(x)?)?;
                }
            }
        }
        Some(
            self.kept
                .iter()
                .enumerate()
                .filter(|(_, &i)| !dense[i].is_zero())
                .map(|(k, &i)| (k, dense[i].clone()))
                .collect(),
        )
    }

    pub fn rest_dense(&self) -> Dense<T> {
        Dense::from_columns(self.kept.len(), &self.rest)
    }
}

/// Rank and invariant factors (including units) of a sparse matrix.
pub fn sparse_invariants<T: Int>(rows: usize, cols: Vec<SparseVec<T>>) -> Option<(usize, Vec<T>)> {
    let red = Reduced::new(rows, cols)?;
    let d = invariant_factors(red.rest_dense())?;
    let mut all = vec![T::from_i64(1); red.pivots()];
    all.extend(d);
    Some((all.len(), all))
}

/// Membership tests in the lattice spanned by some columns.
pub struct Lattice<T> {
    red: Reduced<T>,
    echelon: Option<(Dense<T>, usize)>,
}

impl<T: Int> Lattice<T> {
    pub fn new(rows: usize, cols: Vec<SparseVec<T>>) -> Option<Lattice<T>> {
        let red = Reduced::new(rows, cols)?;
        let echelon = if red.rest.is_empty() {
            None
        } else {
            let (e, _, p) = column_echelon(red.rest_dense())?;
            Some((e, p))
        };
        Some(Lattice { red, echelon })
    }

    pub fn contains(&self, v: &[(usize, T)]) -> Option<bool> {
        let r = self.red.reduce(v)?;
        if r.is_empty() {
            return Some(true);
        }
        match &self.echelon {
            None => Some(false),
            Some((e, p)) => {
                let mut dense = vec![T::zero(); self.red.kept.len()];
                for (i, x) in r {
                    dense[i] = x;
                }
                Some(solve_echelon(e, *p, &dense)?.is_some())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_relations_are_eliminated() {
        // Z^3 / (e0 - e1, e1 + 2 e2)  ~  Z^3 / (e1 - e0, e1 + 2 e2)  ~  Z
        let red = Reduced::<i64>::new(3, vec![vec![(0, 1), (1, -1)], vec![(1, 1), (2, 2)]]).unwrap();
        assert_eq!(red.pivots(), 2);
        assert_eq!(red.kept.len(), 1);
        assert!(red.rest.is_empty());
        // e0 = e1 = -2 e2
        let k = red.kept[0];
        let v = red.reduce(&[(0, 1)]).unwrap();
        assert_eq!(v, vec![(0, if k == 2 { -2 } else { 1 })]);
    }

    #[test]
    fn non_unit_relation_survives() {
        let (rank, f) = sparse_invariants::<i64>(2, vec![vec![(0, 2), (1, 4)]]).unwrap();
        assert_eq!((rank, f), (1, vec![2]));
    }

    #[test]
    fn lattice_membership() {
        let l = Lattice::<i64>::new(2, vec![vec![(0, 2)], vec![(1, 3)]]).unwrap();
        assert_eq!(l.contains(&[(0, 4), (1, -3)]), Some(true));
        assert_eq!(l.contains(&[(0, 1)]), Some(false));
        let u = Lattice::<i64>::new(2, vec![vec![(0, 1), (1, 1)]]).unwrap();
        assert_eq!(u.contains(&[(0, 2), (1, 2)]), Some(true));
        assert_eq!(u.contains(&[(1, 1)]), Some(false));
    }
}
