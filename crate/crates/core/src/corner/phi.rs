use crate::omega_complex::{cube, simplex, FaceLabel, FacePoset, FaceSet, Letter};

/// `phi_n^-`: the word of length `n+1` with `k_{s_i+1} = 0` and `-` elsewhere.
pub fn phi_word(n: usize, sigma: &[usize]) -> Vec<Letter> {
    let mut w = vec![Letter::Minus; n + 1];
    for &v in sigma {
        w[v] = Letter::Zero;
    }
    w
}

pub fn phi_minus(n: usize, sigma: &[usize]) -> String {
    crate::omega_complex::word_to_string(&phi_word(n, sigma))
}

/// Partial inverse of `phi`: defined on words over `{-,0}` with at least one zero.
pub fn perp(word: &[Letter]) -> Option<Vec<usize>> {
    if word.contains(&Letter::Plus) {
        return None;
    }
    let z: Vec<usize> = (0..word.len()).filter(|&i| word[i] == Letter::Zero).collect();
    (!z.is_empty()).then_some(z)
}

/// `X^perp = R({y^perp : y in X n Im(phi)})` inside `simplex`.
pub fn perp_set(cube_poset: &FacePoset, simplex_poset: &FacePoset, x: &FaceSet) -> FaceSet {
    let mut out = simplex_poset.empty_set();
    for f in x.ids() {
        if let Some(w) = cube_poset.label(f).as_cube() {
            if let Some(s) = perp(w) {
                if let Some(id) = simplex_poset.id_of(&FaceLabel::Simplex(s)) {
                    out.union_with(simplex_poset.sub(id));
                }
            }
        }
    }
    out
}

/// `phi_n^-` between the face posets of `Delta^n` and `I^{n+1}`.
#[derive(Debug, Clone)]
pub struct CornerMap {
    pub n: usize,
    pub cube: FacePoset,
    pub simplex: FacePoset,
    forward: Vec<usize>,
    backward: Vec<Option<usize>>,
}

impl CornerMap {
    pub fn new(n: usize) -> CornerMap {
        let cube = cube(n + 1);
        let simplex = simplex(n);
        let forward: Vec<usize> = (0..simplex.len())
            .map(|s| {
                let w = phi_word(n, simplex.label(s).as_simplex().unwrap());
                cube.id_of(&FaceLabel::Cube(w)).unwrap()
            })
            .collect();
        let mut backward = vec![None; cube.len()];
        for (s, &c) in forward.iter().enumerate() {
            backward[c] = Some(s);
        }
        CornerMap { n, cube, simplex, forward, backward }
    }

    pub fn phi(&self, simplex_face: usize) -> usize {
        self.forward[simplex_face]
    }

    pub fn perp(&self, cube_face: usize) -> Option<usize> {
        self.backward[cube_face]
    }

    pub fn perp_set(&self, x: &FaceSet) -> FaceSet {
        perp_set(&self.cube, &self.simplex, x)
    }

    /// `R(phi(X))` in the cube.
    pub fn phi_set(&self, x: &FaceSet) -> FaceSet {
        let mut out = self.cube.empty_set();
        for s in x.ids() {
            out.union_with(self.cube.sub(self.forward[s]));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_two_table() {
        let table = [
            (vec![0, 1, 2], "000"),
            (vec![0, 1], "00-"),
            (vec![0, 2], "0-0"),
            (vec![1, 2], "-00"),
            (vec![0], "0--"),
            (vec![1], "-0-"),
            (vec![2], "--0"),
        ];
        for (s, w) in table {
            assert_eq!(phi_minus(2, &s), w);
        }
    }

    #[test]
    fn perp_inverts_phi() {
        let m = CornerMap::new(3);
        for s in 0..m.simplex.len() {
            assert_eq!(m.perp(m.phi(s)), Some(s));
        }
        let pp = m.cube.id("++00").unwrap();
        assert!(m.perp_set(m.cube.sub(pp)).is_empty());
    }
}
