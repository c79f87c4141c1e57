use std::sync::Arc;

use crate::error::{Error, Result};
use crate::omega_complex::{cube, simplex, FaceLabel, FacePoset, FaceSet, Letter};

/// A face-level map between posets, extended to face sets by image and closure.
#[derive(Debug, Clone)]
pub struct FaceMap {
    pub source: Arc<FacePoset>,
    pub target: Arc<FacePoset>,
    map: Vec<usize>,
}

impl FaceMap {
    pub fn between(
        source: Arc<FacePoset>,
        target: Arc<FacePoset>,
        f: impl Fn(&FaceLabel) -> FaceLabel,
    ) -> Result<FaceMap> {
        let map = (0..source.len())
            .map(|a| {
                let l = f(source.label(a));
                target
                    .id_of(&l)
                    .ok_or_else(|| Error::input(format!("image {l} of {} is not a face", source.label(a))))
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(FaceMap { source, target, map })
    }

    pub fn face(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn faces(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: &FaceSet) -> FaceSet {
        let mut out = self.target.empty_set();
        for a in x.ids() {
            out.union_with(self.target.sub(self.map[a]));
        }
        out
    }

    /// `self . first`.
    pub fn after(&self, first: &FaceMap) -> FaceMap {
        FaceMap {
            source: first.source.clone(),
            target: self.target.clone(),
            map: first.map.iter().map(|&b| self.map[b]).collect(),
        }
    }
}

fn word(l: &FaceLabel) -> &[Letter] {
    l.as_cube().expect("cube label")
}

fn verts(l: &FaceLabel) -> &[usize] {
    l.as_simplex().expect("simplex label")
}

/// `delta^-_{i+1}`: inserts `-` at slot `i+1`.
pub fn delta_minus_label(l: &FaceLabel, i: usize) -> FaceLabel {
    let mut w = word(l).to_vec();
    w.insert(i, Letter::Minus);
    FaceLabel::Cube(w)
}

/// `gamma^-_{i+1}`: merges slots `i+1`, `i+2` by max with `- < 0 < +`.
pub fn gamma_minus_label(l: &FaceLabel, i: usize) -> FaceLabel {
    let mut w = word(l).to_vec();
    let b = w.remove(i + 1);
    w[i] = w[i].max(b);
    FaceLabel::Cube(w)
}

/// `Delta^{eps_i}`: `j -> j` for `j < i`, else `j + 1`.
pub fn epsilon_label(l: &FaceLabel, i: usize) -> FaceLabel {
    FaceLabel::Simplex(verts(l).iter().map(|&j| if j < i { j } else { j + 1 }).collect())
}

/// `Delta^{eta_i}`: `j -> j` for `j <= i`, else `j - 1`.
pub fn eta_label(l: &FaceLabel, i: usize) -> FaceLabel {
    let mut v: Vec<usize> = verts(l).iter().map(|&j| if j <= i { j } else { j - 1 }).collect();
    v.dedup();
    FaceLabel::Simplex(v)
}

fn check_range(i: usize, n: usize, what: &str) -> Result<()> {
    if i > n {
        return Err(Error::input(format!("{what} index {i} out of range 0..={n}")));
    }
    Ok(())
}

/// `delta^-_{i+1}: I^n -> I^{n+1}`, `0 <= i <= n`.
pub fn delta_minus(n: usize, i: usize) -> Result<FaceMap> {
    check_range(i, n, "delta")?;
    FaceMap::between(Arc::new(cube(n)), Arc::new(cube(n + 1)), |l| delta_minus_label(l, i))
}

/// `gamma^-_{i+1}: I^{n+2} -> I^{n+1}`, `0 <= i <= n`.
pub fn gamma_minus(n: usize, i: usize) -> Result<FaceMap> {
    check_range(i, n, "gamma")?;
    FaceMap::between(Arc::new(cube(n + 2)), Arc::new(cube(n + 1)), |l| gamma_minus_label(l, i))
}

/// `Delta^{eps_i}: Delta^{n-1} -> Delta^n`, `0 <= i <= n`, `n >= 1`.
pub fn delta_epsilon(n: usize, i: usize) -> Result<FaceMap> {
    if n == 0 {
        return Err(Error::input("epsilon needs n >= 1"));
    }
    check_range(i, n, "epsilon")?;
    FaceMap::between(Arc::new(simplex(n - 1)), Arc::new(simplex(n)), |l| epsilon_label(l, i))
}

/// `Delta^{eta_i}: Delta^{n+1} -> Delta^n`, `0 <= i <= n`.
pub fn delta_eta(n: usize, i: usize) -> Result<FaceMap> {
    check_range(i, n, "eta")?;
    FaceMap::between(Arc::new(simplex(n + 1)), Arc::new(simplex(n)), |l| eta_label(l, i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_maps() {
        let f = delta_minus(2, 0).unwrap();
        let a = f.source.id("0+").unwrap();
        assert_eq!(f.target.label(f.face(a)).to_string(), "-0+");
        assert_eq!(gamma_minus_label(&FaceLabel::cube("0-0+"), 1).to_string(), "00+");
        assert_eq!(eta_label(&FaceLabel::simplex(&[0, 1, 2]), 0).to_string(), "(01)");
        assert_eq!(epsilon_label(&FaceLabel::simplex(&[0, 1]), 1).to_string(), "(02)");
        assert!(delta_minus(2, 3).is_err());
    }
}
